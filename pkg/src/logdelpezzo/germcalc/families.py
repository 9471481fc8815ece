"""Sharp bounds on epsilon for one-parameter and multi-parameter germ families.

A family fixes a germ and branch list and lets every coefficient move
affinely in a vector eps.  Its constraints say what must stay true:

* ``Window(v, thr)``: the extracted divisor E_v keeps -a(E_v) < thr,
* ``LT(thr, exclude)``: every other exceptional divisor keeps -a < thr,
* ``CoeffCap(j, cap)``: coefficient j stays below cap.

Along a ray eps = t * direction every quantity is affine in t, so each
divisor contributes a single cut and the answer is the smallest cut.  The
LT constraint ranges over infinitely many divisors; the growth bound at the
candidate answer shows that none past a finite height can cut lower.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from ..quotsing import QuotientSingularity, SMOOTH
from .branches import (LINE, X, Y, Branch, Valuation, cusp_a, cusp_b, tangent,
                       valuation_order)
from .pairs import GermPair, check_nondegenerate, growth, meets_open_orbit
from .search import DEFAULT_MAX_HEIGHT, UncertifiedSearchError, iter_lattice


@dataclass(frozen=True)
class Window:
    v: Valuation
    thr: Fraction


@dataclass(frozen=True)
class LT:
    thr: Fraction
    exclude: tuple[Valuation, ...] = ()
    # open range of vy/vx; restricts to divisors over one torus-fixed point
    sector: tuple[Fraction, Fraction | None] | None = None

    def covers(self, v: Valuation) -> bool:
        if v in self.exclude:
            return False
        if self.sector is None:
            return True
        lo, hi = self.sector
        r = v.vy / v.vx
        return lo < r and (hi is None or r < hi)


@dataclass(frozen=True)
class CoeffCap:
    index: int
    cap: Fraction


Constraint = Union[Window, LT, CoeffCap]


@dataclass(frozen=True)
class AffineCoeff:
    base: Fraction
    slopes: tuple[Fraction, ...]  # d coeff / d eps_k

    def at(self, eps: Sequence[Fraction]) -> Fraction:
        return self.base + sum((s * e for s, e in zip(self.slopes, eps)), Fraction(0))


@dataclass(frozen=True)
class FamilyRecord:
    name: str
    sing: QuotientSingularity
    branches: tuple[Branch, ...]
    coeffs: tuple[AffineCoeff, ...]
    constraints: tuple[Constraint, ...]
    i: int | None = None
    weights: Valuation | None = None  # the extraction, when there is one

    @property
    def n_eps(self) -> int:
        return len(self.coeffs[0].slopes) if self.coeffs else 0

    def coeffs_at(self, eps: Sequence) -> list[Fraction]:
        eps = [Fraction(e) for e in eps]
        return [c.at(eps) for c in self.coeffs]

    def pair_at(self, eps: Sequence) -> GermPair:
        return GermPair(self.sing, tuple(zip(self.branches, self.coeffs_at(eps))))


@dataclass(frozen=True)
class BoundResult:
    bound: Fraction
    binding: tuple[str, Valuation | None, int | None]  # (kind, valuation, branch index)
    horizon: Fraction
    certified: bool = True
    cuts: dict = field(default_factory=dict, compare=False, repr=False)


def _cut(q0: Fraction, s: Fraction, thr: Fraction) -> Fraction | None:
    """Sup t > 0 with q0 + s t' < thr for all 0 < t' < t; None for no cut."""
    if s > 0:
        return max(Fraction(0), (thr - q0) / s)
    if q0 < thr or (q0 == thr and s < 0):
        return None
    return Fraction(0)


def _neg_a(branches, base, slope, v: Valuation) -> tuple[Fraction, Fraction]:
    """-a(E_v) as (value at t=0, slope in t)."""
    ords = [valuation_order(b, v) for b in branches]
    q0 = 1 - v.height + sum((c * o for c, o in zip(base, ords)), Fraction(0))
    s = sum((c * o for c, o in zip(slope, ords)), Fraction(0))
    return q0, s


def sharp_epsilon_bound(family: FamilyRecord, direction: Sequence,
                        max_height: Fraction = DEFAULT_MAX_HEIGHT) -> BoundResult:
    """Supremum of t such that every constraint holds for eps = t' * direction, 0 < t' < t."""
    direction = [Fraction(d) for d in direction]
    if len(direction) != family.n_eps:
        raise ValueError(f"direction has {len(direction)} entries, family has {family.n_eps}")
    branches = family.branches
    check_nondegenerate(branches)
    base = [c.base for c in family.coeffs]
    slope = [sum((s * d for s, d in zip(c.slopes, direction)), Fraction(0)) for c in family.coeffs]

    cuts: dict[tuple, Fraction] = {}

    def add(key, c):
        if c is not None:
            cuts[key] = c

    lts = []
    for con in family.constraints:
        if isinstance(con, Window):
            add(("window", con.v, None), _cut(*_neg_a(branches, base, slope, con.v), con.thr))
        elif isinstance(con, CoeffCap):
            add(("cap", None, con.index), _cut(base[con.index], slope[con.index], con.cap))
        else:
            lts.append(con)
            for v in con.exclude:
                # divisors over non-fixed points of the removed curve E_v
                q0, s = _neg_a(branches, base, slope, v)
                add(("general", v, None), _cut(q0 - 1, s, con.thr))
                for j, b in enumerate(branches):
                    if meets_open_orbit(b, v):
                        add(("open", v, j), _cut(q0 - 1 + base[j], s + slope[j], con.thr))

    def best():
        if not cuts:
            return None, None
        key = min(cuts, key=lambda k: (cuts[k], _key_order(k)))
        return cuts[key], key

    if not lts:
        b, key = best()
        if b is None:
            raise ValueError("family is unconstrained along this direction")
        return BoundResult(b, key, Fraction(0), True, dict(cuts))

    slices = iter_lattice(family.sing)
    reached = Fraction(0)
    while True:
        b, key = best()
        if b is None:
            horizon = None
        else:
            g = max(growth(branches, base),
                    growth(branches, [c + b * s for c, s in zip(base, slope)]))
            # past this height -a <= 1 - h(1 - g) < thr for every LT threshold
            horizon = None if g >= 1 else (1 - min(c.thr for c in lts)) / (1 - g)
        if horizon is not None and reached >= horizon:
            return BoundResult(b, key, horizon, True, dict(cuts))
        if reached >= max_height:
            raise UncertifiedSearchError(
                f"{family.name}: no certificate below height {max_height}", partial=b)
        h, pts = next(slices)
        reached = h
        for v in pts:
            q0, s = _neg_a(branches, base, slope, v)
            for con in lts:
                if not con.covers(v):
                    continue
                add(("toric", v, None), _cut(q0, s, con.thr))


def _key_order(key):
    kind, v, j = key
    return (kind != "toric", v.sort_key() if v else (), j or 0)


def binding_valuation(res: BoundResult) -> Valuation | None:
    return res.binding[1]


def region_cuts(family: FamilyRecord, max_height: Fraction = DEFAULT_MAX_HEIGHT) -> list[Fraction]:
    """Sharp bound along each coordinate axis of eps-space."""
    out = []
    for k in range(family.n_eps):
        d = [0] * family.n_eps
        d[k] = 1
        out.append(sharp_epsilon_bound(family, d, max_height).bound)
    return out


@dataclass(frozen=True)
class ExtractionReport:
    neg_a: Fraction
    lower: Fraction
    upper: Fraction

    @property
    def in_window(self) -> bool:
        return self.lower <= self.neg_a < self.upper


def verify_extraction(pair: GermPair, weights: Valuation, i: int) -> ExtractionReport:
    """Whether E_weights has (i-1)/i <= -a < i/(i+1)."""
    if i not in (2, 3, 4, 5, 6):
        raise ValueError("i must be one of 2..6")
    from .pairs import toric_discrepancy
    return ExtractionReport(-toric_discrepancy(pair, weights), Fraction(i - 1, i), Fraction(i, i + 1))


# ---------------------------------------------------------------- catalogue

F = Fraction


def _aff(base, *slopes) -> AffineCoeff:
    return AffineCoeff(F(base), tuple(F(s) for s in slopes))


def _family(name, branches, coeffs, constraints, i=None, weights=None, sing=SMOOTH):
    w = None if weights is None else Valuation(*weights)
    return FamilyRecord(name, sing, tuple(branches), tuple(coeffs), tuple(constraints), i, w)


def _extraction(w, i, caps=()):
    """Window for E_w, caps on the big coefficients, 1/i-lt elsewhere."""
    v = Valuation(*w)
    cons = [Window(v, F(i, i + 1)), LT(1 - F(1, i), (v,))]
    cons += [CoeffCap(j, F(i, i + 1)) for j in caps]
    return cons


def ext_cusp_tangent() -> FamilyRecord:
    """1/2{x} + (3/4+e){x+y^3} with weights (3,1)."""
    return _family("tangent-cube", [X, tangent(3)], [_aff(F(1, 2), 0), _aff(F(3, 4), 1)],
                   _extraction((3, 1), 4, caps=(1,)), 4, (3, 1))


def ext_double_tangent() -> FamilyRecord:
    """(2/3+e1){x} + (2/3+e2){x+y^2} with weights (2,1)."""
    return _family("double-two-thirds", [X, tangent(2)], [_aff(F(2, 3), 1, 0), _aff(F(2, 3), 0, 1)],
                   _extraction((2, 1), 3, caps=(0, 1)), 3, (2, 1))


def ext_half_tangent(l: int) -> FamilyRecord:
    """1/2{x} + (2/3+e){x+y^l} with weights (l,1)."""
    return _family(f"half-tangent-{l}", [X, tangent(l)], [_aff(F(1, 2), 0), _aff(F(2, 3), 1)],
                   _extraction((l, 1), 3, caps=(1,)), 3, (l, 1))


def ext_cusp(i: int) -> FamilyRecord:
    """((i-1)/i+e){x^2+y^3} with weights (3,2)."""
    return _family(f"cusp-{i}", [cusp_a(3)], [_aff(F(i - 1, i), 1)],
                   _extraction((3, 2), i, caps=(0,)), i, (3, 2))


def half_e6_cusp() -> FamilyRecord:
    """(1/2+e){x^3+y^4} with weights (1,1)."""
    v = Valuation(1, 1)
    return _family("e6-cusp", [cusp_b(4)], [_aff(F(1, 2), 1)], [LT(F(1, 2), (v,))], 2, (1, 1))


def half_line_cusp() -> FamilyRecord:
    """(1/2+e1){y} + (1/2+e2){x^2+y^3} with weights (1,1)."""
    v = Valuation(1, 1)
    return _family("line-cusp", [Y, cusp_a(3)], [_aff(F(1, 2), 1, 0), _aff(F(1, 2), 0, 1)],
                   [Window(v, F(2, 3)), LT(F(1, 2), (v,))], 2, (1, 1))


def half_odd_cusp(k: int, local: bool = True) -> FamilyRecord:
    """(1/2+e){x^2+y^(2k+1)} with weights (k,1).

    With ``local`` the 1/2-lt condition is imposed only over the point where
    E meets the cusp (vy/vx < 1/k).  Otherwise the A_{k-1} point of E is
    included too, and its divisors (m,1), m < k, cut at 1/(4m).
    """
    v = Valuation(k, 1)
    sector = (F(0), F(1, k)) if local else None
    return _family(f"odd-cusp-{k}", [cusp_a(2 * k + 1)], [_aff(F(1, 2), 1)],
                   [LT(F(1, 2), (v,), sector)], 2, (k, 1))


def half_three_lines() -> FamilyRecord:
    """(1/2+e1){x} + (1/2+e2){y} + (1/2+e3){x+y} with weights (1,1)."""
    return _family("three-lines", [X, Y, LINE],
                   [_aff(F(1, 2), 1, 0, 0), _aff(F(1, 2), 0, 1, 0), _aff(F(1, 2), 0, 0, 1)],
                   [Window(Valuation(1, 1), F(2, 3))], 2, (1, 1))


def half_tangent_pair(k: int) -> FamilyRecord:
    """(1/2+e1){x} + (1/2+e2){x+y^k} with weights (k,1)."""
    return _family(f"tangent-pair-{k}", [X, tangent(k)],
                   [_aff(F(1, 2), 1, 0), _aff(F(1, 2), 0, 1)],
                   [Window(Valuation(k, 1), F(2, 3))], 2, (k, 1))


def quintic_cusp() -> FamilyRecord:
    """(2/3+e){x^2+y^5}, 1/4-log terminal."""
    return _family("quintic-cusp", [cusp_a(5)], [_aff(F(2, 3), 1)], [LT(F(3, 4))], 3)


def three_branch_tangent(k: int) -> FamilyRecord:
    """(1/2+e1){y} + (1/2+e2){x} + (1/2+e3){x+y^k}, 1/3-log terminal."""
    return _family(f"three-branch-{k}", [Y, X, tangent(k)],
                   [_aff(F(1, 2), 1, 0, 0), _aff(F(1, 2), 0, 1, 0), _aff(F(1, 2), 0, 0, 1)],
                   [LT(F(2, 3))], 2)


def line_odd_cusp(k: int) -> FamilyRecord:
    """(1/2+e1){y} + (1/2+e2){x^2+y^(2k+1)}, 1/3-log terminal."""
    return _family(f"line-odd-cusp-{k}", [Y, cusp_a(2 * k + 1)],
                   [_aff(F(1, 2), 1, 0), _aff(F(1, 2), 0, 1)], [LT(F(2, 3))], 2)


def tangent_pair_lt(k: int) -> FamilyRecord:
    """(1/2+e1){x} + (1/2+e2){x+y^k}, 1/2-log terminal."""
    return _family(f"tangent-pair-lt-{k}", [X, tangent(k)],
                   [_aff(F(1, 2), 1, 0), _aff(F(1, 2), 0, 1)], [LT(F(1, 2))], 2)


def cusp_lt(k: int) -> FamilyRecord:
    """(1/2+e){x^2+y^k}, 1/2-log terminal."""
    return _family(f"cusp-lt-{k}", [cusp_a(k)], [_aff(F(1, 2), 1)], [LT(F(1, 2))], 2)


# name -> (constructor, parameter name or None)
FAMILIES = {
    "tangent-cube": (ext_cusp_tangent, None),
    "double-two-thirds": (ext_double_tangent, None),
    "half-tangent": (ext_half_tangent, "l"),
    "cusp": (ext_cusp, "i"),
    "e6-cusp": (half_e6_cusp, None),
    "line-cusp": (half_line_cusp, None),
    "odd-cusp": (half_odd_cusp, "k"),
    "three-lines": (half_three_lines, None),
    "tangent-pair": (half_tangent_pair, "k"),
    "quintic-cusp": (quintic_cusp, None),
    "three-branch": (three_branch_tangent, "k"),
    "line-odd-cusp": (line_odd_cusp, "k"),
    "tangent-pair-lt": (tangent_pair_lt, "k"),
    "cusp-lt": (cusp_lt, "k"),
}


def family_by_name(name: str, param: int | None = None) -> FamilyRecord:
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    ctor, pname = FAMILIES[name]
    if pname is None:
        if param is not None:
            raise ValueError(f"family {name} takes no parameter")
        return ctor()
    if param is None:
        raise ValueError(f"family {name} needs {pname}")
    return ctor(param)
