"""Local log pairs over smooth and cyclic quotient germs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from ..quotsing import OutOfScopeError, QuotientSingularity
from ..rational import fmt, parse_rational
from .branches import Branch, Valuation, kink_directions, semi_invariant, valuation_order


class DegeneratePairError(ValueError):
    """The boundary is Newton-degenerate in the given coordinates."""


@dataclass(frozen=True)
class GermPair:
    sing: QuotientSingularity
    entries: tuple[tuple[Branch, Fraction], ...] = ()

    def __post_init__(self):
        ents = tuple((b, Fraction(c)) for b, c in self.entries)
        object.__setattr__(self, "entries", ents)
        seen = set()
        for b, c in ents:
            if not 0 <= c <= 1:
                raise ValueError(f"coefficient {c} of {b} outside [0, 1]")
            if b in seen:
                raise ValueError(f"branch {b} listed twice")
            seen.add(b)
            if not semi_invariant(self.sing, b):
                raise ValueError(f"{b} is not invariant under {self.sing}")

    @property
    def branches(self) -> list[Branch]:
        return [b for b, _ in self.entries]

    @property
    def coeffs(self) -> list[Fraction]:
        return [c for _, c in self.entries]

    def with_coeffs(self, coeffs: Sequence) -> "GermPair":
        return GermPair(self.sing, tuple(zip(self.branches, coeffs)))

    def to_json(self) -> dict:
        return {
            "sing": {"n": self.sing.n, "q": self.sing.q},
            "entries": [{"branch": b.to_json(), "coeff": fmt(c)} for b, c in self.entries],
        }

    @classmethod
    def from_json(cls, d) -> "GermPair":
        if isinstance(d, str):
            d = json.loads(d)
        s = d.get("sing", {"n": 1, "q": 0})
        if s.get("type", "cyclic") != "cyclic":
            raise OutOfScopeError(f"non-cyclic germ {s.get('type')!r} is out of scope")
        sing = QuotientSingularity(int(s["n"]), int(s["q"]))
        ents = tuple((Branch.from_json(e["branch"]), parse_rational(e["coeff"]))
                     for e in d.get("entries", []))
        return cls(sing, ents)

    def __str__(self):
        bd = " + ".join(f"{fmt(c)}{b}" for b, c in self.entries) or "0"
        return f"({self.sing}, {bd})"


def log_discrepancy_toric(v: Valuation) -> Fraction:
    return v.vx + v.vy


def toric_discrepancy(pair: GermPair, v: Valuation) -> Fraction:
    """a(E_v, D) = vx + vy - 1 - sum coeff * ord_v(branch)."""
    return v.vx + v.vy - 1 - sum((c * valuation_order(b, v) for b, c in pair.entries), Fraction(0))


def growth(branches: Sequence[Branch], coeffs: Sequence[Fraction]) -> Fraction:
    """Max of sum c*ord(u) over u on the simplex vx + vy = 1.

    For every v, a(E_v, D) >= (vx + vy)(1 - growth) - 1.
    """
    best = Fraction(0)
    for d in kink_directions(branches):
        if 0 in d:
            # ord at an end of the simplex: the pure axis valuation
            val = sum((c * min(a * d[0] + b * d[1] for a, b in br.support)
                       for br, c in zip(branches, coeffs)), Fraction(0))
        else:
            v = Valuation(*d)
            val = sum((c * valuation_order(br, v) for br, c in zip(branches, coeffs)), Fraction(0))
        best = max(best, val)
    return best


_t = sympy.Symbol("t")


def initial_form(branch: Branch, v) -> tuple[tuple[int, int], sympy.Poly | None]:
    """Initial form at weight v as (monomial, polynomial in u = x^p y^-r).

    The polynomial is None when the initial form is a single monomial.
    """
    vx, vy = Fraction(v[0]), Fraction(v[1])
    terms = branch.terms
    w = {m: m[0] * vx + m[1] * vy for m in terms}
    low = min(w.values())
    mons = sorted(m for m in terms if w[m] == low)
    if len(mons) == 1:
        return mons[0], None
    # primitive step (p, -r) along the edge, with p*vx = r*vy
    ratio = vy / vx
    p, r = ratio.numerator, ratio.denominator
    a0, b0 = mons[0]
    coeffs = {}
    for a, b in mons:
        s = (a - a0) // p
        coeffs[s] = terms[(a, b)]
    poly = sympy.Poly(sum(c * _t**s for s, c in coeffs.items()), _t)
    return mons[0], poly


def check_nondegenerate(branches: Sequence[Branch]) -> None:
    """Refuse boundaries whose toric resolution in these coordinates is not a log resolution."""
    for d in kink_directions(branches):
        if 0 in d:
            continue
        polys = [p for _, p in (initial_form(b, d) for b in branches) if p is not None]
        if not polys:
            continue
        prod = sympy.Poly(1, _t)
        for p in polys:
            prod = prod * p
        if sympy.degree(sympy.gcd(prod, prod.diff(_t)), _t) > 0:
            raise DegeneratePairError(
                f"initial forms at weight ({d[0]},{d[1]}) share or repeat a root")


def meets_open_orbit(branch: Branch, v: Valuation) -> bool:
    """Whether the strict transform meets E_v away from the torus-fixed points."""
    return initial_form(branch, (v.vx, v.vy))[1] is not None
