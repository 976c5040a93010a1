#!/usr/bin/env python3
"""Reproduce the four benchmark figures as CSV files.

Usage:
    python scripts/reproduce_figures.py [OUT_DIR] [--tol REL_TOL]

Equivalent to running `spinflip reproduce figN --out OUT_DIR` for N = 2..5.
"""

import argparse
import sys
import time

from spinflip.figures import FIGURES, reproduce


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir", nargs="?", default="figures_out")
    parser.add_argument("--tol", type=float, default=None,
                        help="override quadrature relative tolerance")
    args = parser.parse_args(argv)

    t0 = time.perf_counter()
    for figure in FIGURES:
        for path in reproduce(figure, args.out_dir, rel_tol=args.tol):
            print(path)
    print(f"done in {time.perf_counter() - t0:.1f} s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
