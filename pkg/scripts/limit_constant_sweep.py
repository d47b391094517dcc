#!/usr/bin/env python3
"""Sweep the half-normal expected minimum over a log-spaced n grid and
show how (n+1)*Nmin(n) settles onto sqrt(pi)/2.

Usage: python scripts/limit_constant_sweep.py [--max-n 100000] [--tol 1e-13]
"""

import argparse
import math

from spheremin import nmin

TARGET = math.sqrt(math.pi) / 2.0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=100_000)
    parser.add_argument("--tol", type=float, default=1e-13)
    args = parser.parse_args()

    print(f"target = sqrt(pi)/2 = {TARGET:.17g}")
    print(f"{'n':>8}  {'Nmin(n)':>24}  {'(n+1)*Nmin(n)':>22}  {'residual':>12}")
    n = 10
    while n <= args.max_n:
        value = nmin(n, args.tol).value
        scaled = (n + 1) * value
        print(f"{n:>8}  {value:>24.17g}  {scaled:>22.17g}  {abs(scaled - TARGET):>12.3e}")
        n *= 10


if __name__ == "__main__":
    main()
