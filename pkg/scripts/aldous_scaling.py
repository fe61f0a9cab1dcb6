#!/usr/bin/env python3
"""Spectral-gap scan and test-function scaling experiment.

Prints, for each n, the second eigenvalue with the empirical constant
c_n = (n-3-lambda_2) sqrt(n), and the exact Dirichlet quotient of the
central-triangle distance function together with its n^{3/2} scaling.

Usage: python scripts/aldous_scaling.py [--n-min N] [--n-max N]
"""

import argparse
import sys

from flipspectra.flipgraph import build_associahedron
from flipspectra.walk import aldous_test_function, dirichlet_quotient, gap_scan


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=8)
    parser.add_argument("--n-max", type=int, default=12)
    args = parser.parse_args()

    ns = list(range(args.n_min, args.n_max + 1))
    rows = gap_scan(ns)
    print(f"{'n':>3} {'lambda_2':>10} {'c_n':>8} {'quotient':>10} {'q*n^1.5':>9} {'variance':>9}")
    scaled = []
    for n, lam2, c_n in rows:
        g = build_associahedron(n)
        rep = dirichlet_quotient(g, aldous_test_function(n))
        s = rep.quotient * n**1.5
        scaled.append(s)
        print(f"{n:>3} {lam2:>10.6f} {c_n:>8.4f} {rep.quotient:>10.6f} {s:>9.4f} {rep.variance:>9.4f}")
    print(f"scaling band max/min: {max(scaled) / min(scaled):.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
