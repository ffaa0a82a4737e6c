"""Calendar time series, panel alignment, and basic transforms.

Weeks run Monday-Sunday; a dated observation belongs to the period containing
its date. Daily data can be downsampled to weekly/monthly with a per-series
policy (markets: last observation; case counts: sum; sentiment: mean);
upsampling is refused.
"""

from __future__ import annotations

import csv
import datetime as dt
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

import numpy as np

from ._util import fmt
from .corpus import Channel
from .errors import DataError

if TYPE_CHECKING:
    from .sentiment import ScoreRecord

FREQUENCIES = ("daily", "weekly", "monthly", "per_meeting")
_FREQ_ORDER = {"daily": 0, "per_meeting": 0, "weekly": 1, "monthly": 2}
DOWNSAMPLE_POLICIES = ("mean", "last", "sum")


def period_start(date: dt.date, frequency: str) -> dt.date:
    """Map a date to the first day of its calendar period."""
    if frequency == "weekly":
        return date - dt.timedelta(days=date.weekday())
    if frequency == "monthly":
        return date.replace(day=1)
    if frequency in ("daily", "per_meeting"):
        return date
    raise ValueError(f"unknown frequency {frequency!r}")


@dataclass
class TimeSeries:
    name: str
    points: list[tuple[dt.date, float]]
    frequency: str
    downsample: str = "mean"

    def __post_init__(self) -> None:
        if self.frequency not in FREQUENCIES:
            raise ValueError(f"unknown frequency {self.frequency!r}")
        if self.downsample not in DOWNSAMPLE_POLICIES:
            raise ValueError(f"unknown downsample policy {self.downsample!r}")
        for (a, _), (b, _) in zip(self.points, self.points[1:]):
            if a >= b:
                raise ValueError(f"series {self.name!r}: dates not strictly increasing at {b}")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def dates(self) -> list[dt.date]:
        return [d for d, _ in self.points]

    @property
    def values(self) -> np.ndarray:
        return np.array([v for _, v in self.points], dtype=float)


@dataclass
class AlignedPanel:
    dates: list[dt.date]
    variables: dict[str, list[Optional[float]]]

    def __post_init__(self) -> None:
        for name, col in self.variables.items():
            if len(col) != len(self.dates):
                raise ValueError(f"column {name!r} length {len(col)} != grid length {len(self.dates)}")

    @property
    def names(self) -> list[str]:
        return list(self.variables)

    def complete_rows(self) -> tuple[list[dt.date], np.ndarray]:
        """Dates and value matrix for rows with no missing cell."""
        cols = list(self.variables.values())
        keep = [i for i in range(len(self.dates)) if all(c[i] is not None for c in cols)]
        matrix = np.array([[c[i] for c in cols] for i in keep], dtype=float)
        return [self.dates[i] for i in keep], matrix

    def dump(self, path: str | Path) -> None:
        """Write the panel; first column ``date``, empty cell = missing."""
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["date"] + self.names)
            for i, date in enumerate(self.dates):
                row = [date.isoformat()]
                for name in self.names:
                    cell = self.variables[name][i]
                    row.append("" if cell is None else fmt(cell))
                writer.writerow(row)


def load_panel(path: str | Path) -> AlignedPanel:
    """Read a panel written by :meth:`AlignedPanel.dump`."""
    path = Path(path)
    if not path.is_file():
        raise DataError(f"panel file not found: {path}")
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if not header or header[0] != "date":
            raise DataError(f"{path}: first column must be 'date'")
        names = header[1:]
        dates: list[dt.date] = []
        columns: list[list[Optional[float]]] = [[] for _ in names]
        for lineno, row in enumerate(reader, start=2):
            try:
                dates.append(dt.date.fromisoformat(row[0]))
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: bad date {row[0]!r}") from exc
            for j, cell in enumerate(row[1:]):
                columns[j].append(float(cell) if cell != "" else None)
    return AlignedPanel(dates=dates, variables={n: c for n, c in zip(names, columns)})


def build_series(
    records: Iterable["ScoreRecord"],
    indicator: str,
    channels: Sequence[Channel] | None = None,
    frequency: str = "weekly",
    aggregation: str = "mean",
    name: str | None = None,
) -> TimeSeries:
    """Bucket per-document scores by calendar period; value = bucket mean."""
    if aggregation != "mean":
        raise ValueError(f"unsupported aggregation {aggregation!r}")
    channel_set = set(channels) if channels is not None else None
    buckets: dict[dt.date, list[float]] = {}
    for rec in records:
        if rec.indicator_name != indicator:
            continue
        if channel_set is not None and rec.channel not in channel_set:
            continue
        buckets.setdefault(period_start(rec.date, frequency), []).append(rec.value)
    if not buckets:
        label = "any" if channel_set is None else ",".join(sorted(c.value for c in channel_set))
        raise ValueError(f"no records for indicator {indicator!r} with channel filter [{label}]")
    # summing in sorted order makes the bucket mean independent of record order
    points = [(d, sum(sorted(vals)) / len(vals)) for d, vals in sorted(buckets.items())]
    return TimeSeries(name=name or indicator, points=points, frequency=frequency)


def load_external_csv(
    path: str | Path,
    date_col: str,
    value_col: str,
    name: str | None = None,
    frequency: str = "daily",
    downsample: str = "mean",
) -> TimeSeries:
    """Load a delimited file with ISO dates; output is sorted by date."""
    path = Path(path)
    if not path.is_file():
        raise DataError(f"series file not found: {path}")
    points: list[tuple[dt.date, float]] = []
    seen: set[dt.date] = set()
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for col in (date_col, value_col):
            if col not in header:
                raise DataError(f"{path}: missing column {col!r}")
        for lineno, row in enumerate(reader, start=2):
            try:
                date = dt.date.fromisoformat((row[date_col] or "").strip())
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: bad date {row[date_col]!r}") from exc
            if date in seen:
                raise DataError(f"{path}:{lineno}: duplicate date {date.isoformat()}")
            seen.add(date)
            try:
                value = float(row[value_col])
            except (TypeError, ValueError) as exc:
                raise DataError(f"{path}:{lineno}: bad value {row[value_col]!r}") from exc
            points.append((date, value))
    points.sort(key=lambda p: p[0])
    return TimeSeries(
        name=name or value_col, points=points, frequency=frequency, downsample=downsample
    )


def can_resample(source: str, target: str) -> bool:
    """True when ``source``-frequency data can be bucketed onto ``target``."""
    if source not in FREQUENCIES or target not in FREQUENCIES:
        raise ValueError(f"unknown frequency {source!r} or {target!r}")
    return target != "per_meeting" and _FREQ_ORDER[source] <= _FREQ_ORDER[target]


def resample(series: TimeSeries, frequency: str) -> TimeSeries:
    """Downsample to a coarser calendar frequency using the series policy."""
    if frequency not in FREQUENCIES:
        raise ValueError(f"unknown frequency {frequency!r}")
    if not can_resample(series.frequency, frequency):
        raise ValueError(
            f"cannot upsample series {series.name!r} from {series.frequency} to {frequency}"
        )
    buckets: dict[dt.date, list[tuple[dt.date, float]]] = {}
    for date, value in series.points:
        buckets.setdefault(period_start(date, frequency), []).append((date, value))
    points: list[tuple[dt.date, float]] = []
    for period in sorted(buckets):
        obs = buckets[period]
        if series.downsample == "last":
            value = max(obs, key=lambda p: p[0])[1]
        elif series.downsample == "sum":
            value = sum(v for _, v in obs)
        else:
            value = sum(v for _, v in obs) / len(obs)
        points.append((period, value))
    return TimeSeries(
        name=series.name, points=points, frequency=frequency, downsample=series.downsample
    )


def align(series: Sequence[TimeSeries], frequency: str, join: str = "inner") -> AlignedPanel:
    """Align series onto a shared calendar grid.

    ``inner`` keeps dates present in every series; ``outer`` unions dates and
    marks absences as missing.
    """
    if join not in ("inner", "outer"):
        raise ValueError(f"unknown join {join!r}")
    if not series:
        raise ValueError("no series to align")
    names = [s.name for s in series]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate series names: {names}")
    resampled = [resample(s, frequency) for s in series]
    date_sets = [set(s.dates) for s in resampled]
    if join == "inner":
        grid = set.intersection(*date_sets)
        if not grid:
            raise ValueError("inner join produced an empty date grid")
    else:
        grid = set.union(*date_sets)
    dates = sorted(grid)
    variables: dict[str, list[Optional[float]]] = {}
    for s in resampled:
        lookup = dict(s.points)
        variables[s.name] = [lookup.get(d) for d in dates]
    return AlignedPanel(dates=dates, variables=variables)


def difference(series: TimeSeries, order: int = 1) -> TimeSeries:
    """Discrete differencing; the series shrinks by ``order`` points."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if len(series.points) <= order:
        raise ValueError(f"series {series.name!r} too short to difference {order} time(s)")
    points = list(series.points)
    for _ in range(order):
        points = [(points[i][0], points[i][1] - points[i - 1][1]) for i in range(1, len(points))]
    return TimeSeries(
        name=series.name, points=points, frequency=series.frequency, downsample=series.downsample
    )


def pearson_correlation(a: TimeSeries, b: TimeSeries) -> float:
    """Product-moment correlation over the dates the two series share."""
    lookup = dict(b.points)
    pairs = [(va, lookup[d]) for d, va in a.points if d in lookup]
    if len(pairs) < 3:
        raise ValueError(f"need >= 3 complete pairs, found {len(pairs)}")
    x = np.array([p[0] for p in pairs])
    y = np.array([p[1] for p in pairs])
    sx = x - x.mean()
    sy = y - y.mean()
    denom = float(np.sqrt(np.sum(sx * sx) * np.sum(sy * sy)))
    if denom == 0.0:
        raise ValueError("zero variance")
    return float(np.sum(sx * sy) / denom)


def zscore(series: TimeSeries) -> TimeSeries:
    """Standardize to mean 0 and sample standard deviation 1."""
    values = series.values
    if len(values) < 2:
        raise ValueError("need >= 2 points to standardize")
    sd = float(values.std(ddof=1))
    if sd == 0.0:
        raise ValueError("zero variance")
    mean = float(values.mean())
    points = [(d, (v - mean) / sd) for d, v in series.points]
    return TimeSeries(
        name=series.name, points=points, frequency=series.frequency, downsample=series.downsample
    )


def load_recession_windows(path: str | Path) -> list[tuple[dt.date, dt.date]]:
    """Read ``start,end`` windows used to tag output rows."""
    path = Path(path)
    if not path.is_file():
        raise DataError(f"recession window file not found: {path}")
    windows: list[tuple[dt.date, dt.date]] = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        if "start" not in header or "end" not in header:
            raise DataError(f"{path}: expected columns 'start,end'")
        for lineno, row in enumerate(reader, start=2):
            try:
                start = dt.date.fromisoformat(row["start"].strip())
                end = dt.date.fromisoformat(row["end"].strip())
            except (AttributeError, ValueError) as exc:
                raise DataError(f"{path}:{lineno}: bad window row") from exc
            if start > end:
                raise DataError(f"{path}:{lineno}: window start after end")
            windows.append((start, end))
    return windows


def in_recession(date: dt.date, windows: Sequence[tuple[dt.date, dt.date]]) -> bool:
    return any(start <= date <= end for start, end in windows)
