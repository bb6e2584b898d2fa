"""Command line front end: one flag set, twelve figure kinds.

Exit codes follow the experiment CLI: 0 on success, 1 on validation or
schema errors, 2 on unexpected runtime failures.
"""

from __future__ import annotations

import argparse
import sys

import matplotlib.pyplot as plt

from .figures import KINDS, FigureSpec, render
from .io import BOUND_ORDER


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobplot",
        description="Render figures from the Frobenius bound experiment CSV artifacts.",
    )
    parser.add_argument("--kind", required=True, choices=KINDS, help="figure kind")
    parser.add_argument(
        "--in",
        dest="in_path",
        metavar="CSV",
        help="input CSV artifact (every kind except cn_growth)",
    )
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--log-x", action="store_true", help="log-scale the x axis")
    parser.add_argument("--log-y", action="store_true", help="log-scale the y axis")
    parser.add_argument(
        "--style-seed",
        type=int,
        default=42,
        help="seed for the jitter stream (default: 42)",
    )
    parser.add_argument(
        "--x",
        dest="x_mode",
        choices=("an", "ratio"),
        default="an",
        help="rel_error abscissa: largest entry or a_n/a_1 (default: an)",
    )
    parser.add_argument(
        "--color",
        dest="color_by",
        choices=("bound", "n"),
        default="bound",
        help="scatter_smooth point grouping (default: bound)",
    )
    parser.add_argument(
        "--bound",
        choices=BOUND_ORDER,
        default="whcorr",
        help="rel_error focus bound (default: whcorr)",
    )
    parser.add_argument(
        "--n-max",
        dest="n_max",
        type=int,
        default=41,
        help="last dimension of the cn_growth series (default: 41)",
    )
    parser.add_argument("--dpi", type=int, default=150, help="raster resolution")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for flag errors; fold the
        # latter into the validation-error code
        return 0 if not exc.code else 1
    try:
        spec = FigureSpec(
            kind=args.kind,
            in_path=args.in_path,
            out_path=args.out,
            log_x=args.log_x,
            log_y=args.log_y,
            style_seed=args.style_seed,
            x_mode=args.x_mode,
            color_by=args.color_by,
            bound=args.bound,
            n_max=args.n_max,
            dpi=args.dpi,
        )
        fig = render(spec)
    except ValueError as exc:  # includes SchemaError
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # runtime failures: rendering, I/O
        print(f"error: {exc}", file=sys.stderr)
        return 2
    plt.close(fig)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
