#!/usr/bin/env python3
"""Run both numerical cross-checks: the Green's-function inverse-norm
estimate against its closed form, and the finite-difference eigensolver
against the transcendental root-finder.  Exits nonzero on failure.

Usage: python3 scripts/run_validation.py
"""

import sys

from shellspectra.cli import main as cli_main


def main() -> int:
    greens_code = cli_main(["--command", "greens-validate"])
    oracle_code = cli_main(["--command", "oracle-check"])
    return max(greens_code, oracle_code)


if __name__ == "__main__":
    sys.exit(main())
