"""Command-line wrapper: one input file, one kind, one image out."""

import argparse
import sys

from .io import SchemaError
from .render import KINDS, PlotSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rqs-plots",
        description="Render a figure from a sampling-CLI CSV artifact.",
    )
    parser.add_argument("--in", dest="input_path", required=True,
                        help="input CSV file")
    parser.add_argument("--kind", required=True, choices=KINDS,
                        help="figure kind")
    parser.add_argument("--out", dest="output_path", required=True,
                        help="output image file (png)")
    parser.add_argument("--title", default="", help="figure title")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = PlotSpec(
        input_path=args.input_path,
        kind=args.kind,
        output_path=args.output_path,
        title=args.title,
    )
    try:
        render(spec)
    except (SchemaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
