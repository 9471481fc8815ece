"""Closed-form n-complements against the brute-force search, and the exceptional family.

Default sizes match the acceptance sweep; raise them to push further.
"""

import argparse
import time
from fractions import Fraction as F

from logdelpezzo import curvecomp as cc
from logdelpezzo.rational import fmt
from logdelpezzo.reproduce import farey, nef_p1_multisets, star_grid


def sweep(den_max, max_points, n_max):
    t = time.perf_counter()
    count = bad = 0
    for pts in nef_p1_multisets(farey(den_max), max_points):
        b = cc.CurveBoundary.on_p1(pts)
        count += 1
        for n in range(1, n_max + 1):
            if cc.has_n_complement(b, n)[0] != cc.brute_force_n_complement(b, n):
                bad += 1
                print("mismatch:", [fmt(p) for p in pts], n)
    print(f"{count} boundaries x n <= {n_max}: {bad} mismatches ({time.perf_counter() - t:.1f}s)")


def star(steps):
    print(f"\nexceptional family on the grid with {steps} steps per axis:")
    for eps in star_grid(steps):
        b = cc.star_boundary(eps)
        idx = cc.minimal_complement_index(b, (1, 2, 3, 4, 6, 10, 12))
        twelve = cc.has_n_complement(b, 12)[0]
        if not twelve:
            print(f"  eps=({', '.join(fmt(e) for e in eps)}): minimal index {idx}, no 12-complement")
    print(f"  12-complement needs 3/5 + e1 < 8/13, i.e. e1 < {fmt(F(8, 13) - F(3, 5))}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--den-max", type=int, default=8)
    ap.add_argument("--max-points", type=int, default=8)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--steps", type=int, default=6)
    args = ap.parse_args()
    sweep(args.den_max, args.max_points, args.n_max)
    star(args.steps)


if __name__ == "__main__":
    main()
