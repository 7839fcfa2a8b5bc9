#!/usr/bin/env python3
"""Tabulate the first Laplace and Stokes eigenvalues and Poincare constants
over a logarithmic grid of gap ratios and write the result as CSV.

Usage: python3 scripts/make_poincare_table.py [--out table.csv]
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
    argv = ["--command", "table"]
    if args.grid:
        argv += ["--grid", args.grid]
    if args.out:
        argv += ["--out", args.out]
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
