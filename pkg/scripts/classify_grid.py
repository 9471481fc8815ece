"""Run the Phi_i classifier over a wide grid of germs and tally the cases."""

import argparse
from collections import Counter
from fractions import Fraction as F
from itertools import combinations

from logdelpezzo.coeffsets import contains, phi_i
from logdelpezzo.germcalc import (LINE, NODE, TAC, TRI, X, Y, ClassificationGapError,
                                  DegeneratePairError, GermPair, classify_phi_i, cusp_a, cusp_b,
                                  tangent)
from logdelpezzo.quotsing import SMOOTH, iter_cyclic

MENU = [X, Y, LINE, NODE, TAC, TRI, tangent(2), tangent(3), tangent(4), cusp_a(2), cusp_a(3),
        cusp_a(4), cusp_a(5), cusp_b(3), cusp_b(4)]


def values(i):
    cands = {F(m - 1, m) for m in range(2, 10)} | {F(a, b) for b in range(2, 15) for a in range(1, b)}
    return sorted(c for c in cands if contains(phi_i(i), c))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=5, help="largest cyclic order")
    args = ap.parse_args()
    sings = [SMOOTH] + list(iter_cyclic(args.n_max))
    tally = Counter()
    for i in range(2, 7):
        vals = values(i)
        big = [c for c in vals if c >= F(i - 1, i)]
        for s in sings:
            entries = [((b, c),) for b in MENU for c in big]
            entries += [((b1, c1), (b2, c2)) for b1, b2 in combinations(MENU, 2) for c1 in big for c2 in vals]
            for ent in entries:
                try:
                    pair = GermPair(s, ent)
                except ValueError:
                    continue
                try:
                    tally[classify_phi_i(pair, i).case] += 1
                except DegeneratePairError:
                    tally["degenerate"] += 1
                except ClassificationGapError as e:
                    tally["GAP"] += 1
                    print("gap:", e)
    for k, v in sorted(tally.items()):
        print(f"{k:12s} {v}")


if __name__ == "__main__":
    main()
