"""Shared helpers: bounded parallelism and canonical table formatting."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def max_threads() -> int:
    """Parallelism cap from CBTEXT_THREADS; defaults to 1 (sequential)."""
    raw = os.environ.get("CBTEXT_THREADS", "")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)


def map_ordered(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Map ``fn`` over ``items``, preserving input order in the result.

    Uses a thread pool when CBTEXT_THREADS allows more than one worker;
    output order is identical either way, so results are deterministic.
    """
    items = list(items)
    workers = min(max_threads(), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def fmt(value: object) -> str:
    """Canonical cell rendering for output tables (floats as %.12g)."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence[object]], force: bool = True) -> None:
    """Write a delimited table with a header row and '\\n' line endings.

    Refuses to overwrite an existing file unless ``force`` is set.
    """
    import csv

    from .errors import ToolkitError

    if not force and os.path.exists(path):
        raise ToolkitError(f"refusing to overwrite {path}; pass --force to allow")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(cell) for cell in row])
