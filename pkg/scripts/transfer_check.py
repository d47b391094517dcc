#!/usr/bin/env python3
"""Empirically compare both Monte Carlo routes to the spherical mean for
every built-in homogeneous function: Gaussian draws with the exact
gamma-ratio factor versus direct uniform sampling on the sphere.

Usage: python scripts/transfer_check.py [--n 2 3 10] [--samples 1000000] [--seed 0]
"""

import argparse

import numpy as np

from spheremin import builtin_functions, transfer_identity_check


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[2, 3, 10])
    parser.add_argument("--samples", type=int, default=1_000_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    funcs = builtin_functions()
    seeds = iter(np.random.SeedSequence(args.seed).spawn(len(funcs) * len(args.n)))
    print(f"{'function':<12} {'n':>4} {'gaussian-route':>18} {'sphere-route':>18} "
          f"{'z':>7}  verdict")
    failures = 0
    for f in funcs:
        for n in args.n:
            rep = transfer_identity_check(f, n, args.samples, next(seeds))
            verdict = "agree" if rep.agree else "DISAGREE"
            failures += not rep.agree
            print(f"{f.name:<12} {n:>4} {rep.gaussian_side.point:>18.10f} "
                  f"{rep.sphere_side.point:>18.10f} {rep.z_score:>7.3f}  {verdict}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
