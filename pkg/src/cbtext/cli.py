"""Command-line entry point.

Usage::

    cbtext <ingest|score|topics|counts|series|econ|report> --config <path>
           [--seed N] [--out DIR] [--force]

Exit codes: 0 success, 1 runtime failure, 2 invalid configuration.
CBTEXT_THREADS caps document-level parallelism.
"""

from __future__ import annotations

import argparse
import sys

from .config import load_config
from .errors import ConfigError, ToolkitError
from .pipeline import COMMANDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cbtext", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in COMMANDS.items():
        cmd = sub.add_parser(name, help=(fn.__doc__ or "").splitlines()[0])
        cmd.add_argument("--config", required=True, help="path to the YAML run config")
        cmd.add_argument("--seed", type=int, default=None, help="override the config seed")
        cmd.add_argument("--out", default=None, help="override the config output directory")
        cmd.add_argument("--force", action="store_true", help="allow overwriting existing outputs")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, seed_override=args.seed, out_override=args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        paths = COMMANDS[args.command](cfg, force=args.force)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (ToolkitError, ValueError, KeyError, OSError) as exc:
        print(f"error [{args.command}]: {exc}", file=sys.stderr)
        return 1
    for path in paths:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
