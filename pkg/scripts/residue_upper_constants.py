#!/usr/bin/env python3
"""Per-residue constants of the slice upper bound.

The dynamic program over diagonal-slice splits gives an upper bound ub(n)
for the smallest flip-graph eigenvalue; for every residue r of n mod 10 it
satisfies ub(n) <= -0.6904 n + c_r.  This script prints the c_r table and
spot checks the inequality on a range of n.

Usage: python scripts/residue_upper_constants.py [--n-max N]
"""

import argparse
import sys

from flipspectra.bounds import assoc_upper_bound, upper_bound_residue_constants


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=200)
    args = parser.parse_args()

    consts = upper_bound_residue_constants(args.n_max)
    print("r   c_r      (ub(n) <= -0.6904 n + c_r for n = r mod 10)")
    for r, c in consts.items():
        print(f"{r}   {c:.6f}")
    for n in range(4, args.n_max + 1):
        assert assoc_upper_bound(n) <= -0.6904 * n + consts[n % 10] + 1e-9, n
    print(f"inequality verified for n = 4..{args.n_max}")
    sample = [13, 22, 47, 100]
    print("sample bounds:", {n: round(assoc_upper_bound(n), 4) for n in sample})
    return 0


if __name__ == "__main__":
    sys.exit(main())
