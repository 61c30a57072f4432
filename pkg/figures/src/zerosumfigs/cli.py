"""Command-line entry point: zerosumfigs plot <kind> <trace_path> <out_path>."""

from __future__ import annotations

import argparse
import sys

from .errors import FiguresError
from .plots import KINDS, PlotRequest, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerosumfigs",
        description="Render figures from solver trace files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    plot = sub.add_parser("plot", help="render one figure from one trace")
    plot.add_argument("kind", choices=list(KINDS),
                      help="figure family: convergence curves or ternary simplex path")
    plot.add_argument("trace_path", help="trace CSV produced by the solver CLI")
    plot.add_argument("out_path", help="image output path (.svg or .png)")
    return parser


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        render(PlotRequest(trace_path=ns.trace_path, kind=ns.kind, out_path=ns.out_path))
        print(f"wrote {ns.out_path}")
        return 0
    except (FiguresError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
