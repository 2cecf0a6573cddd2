#!/usr/bin/env python3
"""Trace the separation-constant branches lambda_q(R) for one level.

Writes a plottable CSV (R, q, lambda, and optionally the leading
spherical coefficient of each branch) to stdout or --out.  Example:

    python scripts/branch_diagram.py --s 1/2 --c1 0.3 --c2 0.7 \
        --n 7/2 --m 1/2 --r-max 40 --points 200
"""

import argparse
import sys

import numpy as np

from mickepler.cli import _csv_table
from mickepler.qnum import SystemParams, parse_half_integer
from mickepler.spheroidal import sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--s", default="0")
    ap.add_argument("--c1", type=float, default=0.0)
    ap.add_argument("--c2", type=float, default=0.0)
    ap.add_argument("--n", default="3")
    ap.add_argument("--m", default="0")
    ap.add_argument("--r-max", type=float, default=50.0)
    ap.add_argument("--points", type=int, default=120)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    params = SystemParams(two_s=parse_half_integer(args.s), c1=args.c1, c2=args.c2)
    grid = np.linspace(0.0, args.r_max, args.points)
    solutions = sweep(params, parse_half_integer(args.n), parse_half_integer(args.m), grid)

    rows = []
    for sol in solutions:
        u = sol.spherical_coefficients.entries
        for q in range(len(sol.lambdas)):
            rows.append([sol.R, float(q), sol.lambdas[q], u[0, q]])
    table = _csv_table(["R", "q", "lambda", "u_first"], rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(table + "\n")
    else:
        print(table)
    return 0


if __name__ == "__main__":
    sys.exit(main())
