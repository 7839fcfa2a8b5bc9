#!/usr/bin/env python3
"""Compare the exact Poincare constant with the analytic upper bounds
(half diameter, diameter/(pi*sqrt(2)), and the convex-domain bound)
over a grid of gap ratios.

Usage: python3 scripts/make_bounds_table.py [--out bounds.csv]
"""

import argparse
import sys

from shellspectra.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument("--grid", default=None,
                        help="min:max:points:log|linear (default built-in grid)")
    args = parser.parse_args()
    argv = ["--command", "bounds"]
    if args.grid:
        argv += ["--grid", args.grid]
    if args.out:
        argv += ["--out", args.out]
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
