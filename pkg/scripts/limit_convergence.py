#!/usr/bin/env python3
"""Study how fast the spheroidal coefficients reach their R -> 0 and
R -> infinity limits.

For a chosen level, prints the four limit deviations over a span of
decades.  The columns shrink linearly in R (or 1/R), which is the
first-order perturbative scaling.

    python scripts/limit_convergence.py --s 0 --c1 0.3 --c2 0.7 --n 3 --m 0
"""

import argparse
import sys

from mickepler.qnum import SystemParams, parse_half_integer
from mickepler.spheroidal import limits


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--s", default="0")
    ap.add_argument("--c1", type=float, default=0.0)
    ap.add_argument("--c2", type=float, default=0.0)
    ap.add_argument("--n", default="2")
    ap.add_argument("--m", default="0")
    ap.add_argument("--decades", type=int, default=6)
    args = ap.parse_args()

    params = SystemParams(two_s=parse_half_integer(args.s), c1=args.c1, c2=args.c2)
    two_n = parse_half_integer(args.n)
    two_m = parse_half_integer(args.m)

    print(f"{'R_small':>10} {'R_large':>10} {'U->I':>12} {'V->Wt':>12} "
          f"{'U->W':>12} {'V->I':>12}")
    for k in range(args.decades):
        r_small = 10.0 ** (-(k + 3))
        r_large = 10.0 ** (k + 3)
        rep = limits(params, two_n, two_m, r_small, r_large)
        print(f"{r_small:>10.1e} {r_large:>10.1e} {rep.u_identity_dev:>12.3e} "
              f"{rep.v_mixing_dev:>12.3e} {rep.u_mixing_dev:>12.3e} "
              f"{rep.v_identity_dev:>12.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
