"""Standalone figure scripts: ``router-plots KIND --out FIG CSV [CSV ...]``."""

import argparse
import sys

from .figures import FIGURE_KINDS, FigureSpec, SchemaError, render


def build_parser():
    p = argparse.ArgumentParser(prog="router-plots", description=__doc__)
    p.add_argument("kind", choices=FIGURE_KINDS)
    p.add_argument("csvs", nargs="+", metavar="CSV")
    p.add_argument("--out", required=True, help="output image path (.png/.pdf/.svg)")
    p.add_argument("--title", action="append", default=[], metavar="TEXT",
                   help="panel title, once per input CSV")
    p.add_argument("--layout", default=None, metavar="ROWSxCOLS")
    p.add_argument("--at", action="append", type=float, default=[], metavar="P",
                   help="parameter value for a cross-section slice")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    layout = None
    if args.layout:
        try:
            r, _, c = args.layout.partition("x")
            layout = (int(r), int(c))
        except ValueError:
            print(f"error: bad --layout {args.layout!r}", file=sys.stderr)
            return 2
    try:
        spec = FigureSpec(
            csv_paths=tuple(args.csvs),
            kind=args.kind,
            out_path=args.out,
            panel_titles=tuple(args.title),
            layout=layout,
            cross_sections=tuple(args.at),
        )
        render(spec)
    except (SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
