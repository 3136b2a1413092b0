"""CLI: `cclab-plots render --csv <path> --kind <kind> --out <path>`."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import KINDS, FigureSpec, PlotError, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="cclab-plots")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    pr = sub.add_parser("render")
    pr.add_argument("--csv", required=True)
    pr.add_argument("--kind", required=True, choices=KINDS)
    pr.add_argument("--out", required=True)
    pr.add_argument("--per-seed", action="store_true",
                    help="overlay per-seed points")
    args = parser.parse_args(argv)
    try:
        out = render(FigureSpec(Path(args.csv), args.kind, Path(args.out),
                                per_seed_overlay=args.per_seed))
    except PlotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
