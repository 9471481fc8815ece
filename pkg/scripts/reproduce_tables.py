"""Print the epsilon-bound table and the reported-only observations."""

import argparse

from logdelpezzo.germcalc import families as fam
from logdelpezzo.rational import fmt
from logdelpezzo.reproduce import _bound_table, check_bounds


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grep", default="", help="only rows whose label contains this")
    args = ap.parse_args()
    print(f"{'family / direction':40s} {'bound':>8s} {'expected':>8s}  binding")
    for label, thunk, want, _ in _bound_table():
        if args.grep not in label:
            continue
        r = thunk()
        kind, v, j = r.binding
        mark = "" if r.bound == want else "  <-- mismatch"
        print(f"{label:40s} {fmt(r.bound):>8s} {fmt(want):>8s}  {kind} {v or ''}{'' if j is None else j}{mark}")
    print()
    for f in check_bounds().findings:
        print("note:", f)
    print()
    print("odd cusp, local versus whole exceptional curve:")
    for k in range(1, 8):
        loc = fam.sharp_epsilon_bound(fam.half_odd_cusp(k), [1]).bound
        full = fam.sharp_epsilon_bound(fam.half_odd_cusp(k, local=False), [1]).bound
        print(f"  k={k}: {fmt(loc):>6s} {fmt(full):>6s}")


if __name__ == "__main__":
    main()
