"""The closed menu of boundary branches and monomial valuations on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from ..quotsing import QuotientSingularity, SMOOTH

# tag -> parameter name, or None when the tag takes no parameter
_PARAM = {
    "X": None, "Y": None, "Line": None, "Node": None, "Tac": None, "Tri": None,
    "Tangent": "k", "CuspA": "k", "CuspB": "l",
}


@dataclass(frozen=True)
class Branch:
    tag: str
    k: int | None = None

    def __post_init__(self):
        if self.tag not in _PARAM:
            raise ValueError(f"branch {self.tag!r} is not on the menu")
        if _PARAM[self.tag] is None:
            if self.k is not None:
                raise ValueError(f"{self.tag} takes no parameter")
        elif self.tag == "CuspB":
            if self.k not in (3, 4):
                raise ValueError("CuspB needs l in {3, 4}")
        elif self.k is None or self.k < 2:
            raise ValueError(f"{self.tag} needs k >= 2")

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        """Defining polynomial as {(a, b): coefficient} for x^a y^b."""
        t, k = self.tag, self.k
        if t == "X":
            return {(1, 0): 1}
        if t == "Y":
            return {(0, 1): 1}
        if t == "Line":
            return {(1, 0): 1, (0, 1): 1}
        if t == "Node":
            return {(1, 1): 1}
        if t == "Tac":
            return {(2, 1): 1, (0, 4): 1}
        if t == "Tri":
            return {(3, 0): 1, (1, 3): 1}
        if t == "Tangent":
            return {(1, 0): 1, (0, k): 1}
        if t == "CuspA":
            return {(2, 0): 1, (0, k): 1}
        return {(3, 0): 1, (0, k): 1}

    @property
    def support(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.terms))

    @property
    def n_components(self) -> int:
        """Number of analytic branches of the curve at the origin."""
        t, k = self.tag, self.k
        if t in ("Node", "Tac", "Tri"):
            return 2
        if t == "CuspA":
            return 2 if k % 2 == 0 else 1
        if t == "CuspB":
            return 3 if k == 3 else 1
        return 1

    def equation(self) -> str:
        def mono(a, b):
            xs = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
            ys = "" if b == 0 else ("y" if b == 1 else f"y^{b}")
            return xs + ys or "1"
        return "+".join(mono(a, b) for a, b in sorted(self.terms, reverse=True))

    def to_json(self) -> dict:
        d = {"tag": self.tag}
        if self.k is not None:
            d[_PARAM[self.tag]] = self.k
        return d

    @classmethod
    def from_json(cls, d: dict) -> "Branch":
        tag = d["tag"]
        if tag not in _PARAM:
            raise ValueError(f"branch {tag!r} is not on the menu")
        p = _PARAM[tag]
        return cls(tag, None if p is None else int(d[p]))

    def __str__(self):
        return f"{{{self.equation()}=0}}"


X = Branch("X")
Y = Branch("Y")
LINE = Branch("Line")
NODE = Branch("Node")
TAC = Branch("Tac")
TRI = Branch("Tri")


def tangent(k: int) -> Branch:
    return Branch("Tangent", k)


def cusp_a(k: int) -> Branch:
    return Branch("CuspA", k)


def cusp_b(l: int) -> Branch:
    return Branch("CuspB", l)


@dataclass(frozen=True)
class Valuation:
    vx: Fraction
    vy: Fraction

    def __post_init__(self):
        object.__setattr__(self, "vx", Fraction(self.vx))
        object.__setattr__(self, "vy", Fraction(self.vy))
        if self.vx <= 0 or self.vy <= 0:
            raise ValueError("valuation weights must be positive")

    @property
    def height(self) -> Fraction:
        return self.vx + self.vy

    def sort_key(self):
        return (self.height, self.vx)

    def __str__(self):
        from ..rational import fmt
        return f"({fmt(self.vx)},{fmt(self.vy)})"


def valuation_order(branch: Branch, v: Valuation) -> Fraction:
    return min(a * v.vx + b * v.vy for a, b in branch.support)


def in_lattice(sing: QuotientSingularity, vx: Fraction, vy: Fraction) -> bool:
    """Membership in N = Z^2 + Z (q/n, 1/n)."""
    n = sing.n
    X_, Y_ = vx * n, vy * n
    if X_.denominator != 1 or Y_.denominator != 1:
        return False
    return (X_.numerator - sing.q * Y_.numerator) % n == 0


def is_primitive(sing: QuotientSingularity, v: Valuation) -> bool:
    if not in_lattice(sing, v.vx, v.vy):
        return False
    from math import gcd
    g = gcd((v.vx * sing.n).numerator, (v.vy * sing.n).numerator)
    return not any(in_lattice(sing, v.vx / m, v.vy / m) for m in range(2, g + 1) if g % m == 0)


def lattice_points(sing: QuotientSingularity, h_min: Fraction, h_max: Fraction):
    """Primitive points of N in the open quadrant with h_min < vx + vy <= h_max.

    Yields in order of (height, vx).
    """
    n, q = sing.n, sing.q
    lo = h_min * n
    hi = h_max * n
    s = int(lo) + 1 if lo >= 0 else 1
    while s <= hi:
        for X_ in range(1, s):
            Y_ = s - X_
            if (X_ - q * Y_) % n:
                continue
            v = Valuation(Fraction(X_, n), Fraction(Y_, n))
            if is_primitive(sing, v):
                yield v
        s += 1


def semi_invariant(sing: QuotientSingularity, branch: Branch) -> bool:
    """Whether the branch equation is an eigenvector for the group action."""
    if sing.smooth:
        return True
    weights = {(sing.q * a + b) % sing.n for a, b in branch.support}
    return len(weights) == 1


def kink_directions(branches: Iterable[Branch]) -> list[tuple[Fraction, Fraction]]:
    """Directions on vx + vy = 1 where some branch order changes slope, plus the ends."""
    dirs = {(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))}
    for br in branches:
        sup = br.support
        for i in range(len(sup)):
            for j in range(i + 1, len(sup)):
                (a, b), (c, d) = sup[i], sup[j]
                # a x + b y = c x + d y  ->  (a - c) x = (d - b) y
                p, r = d - b, a - c
                if p * r > 0:
                    p, r = abs(p), abs(r)
                    dirs.add((Fraction(p, p + r), Fraction(r, p + r)))
    return sorted(dirs)
