"""Certified searches over divisors above a germ.

Every divisor over a germ whose boundary is Newton non-degenerate is either
toric (a primitive point of the germ lattice) or is centred at a point of
some E_v off the torus-fixed points.  At such a point the local picture is
E_v alone or E_v crossed transversally by one branch, so the discrepancy is
at least a(E_v) + 1 - coeff.  Since coefficients are at most 1 these never
undercut the toric minimum; they only matter once E_v itself is removed
from consideration (the extracted curve of a weighted blow-up).

A search is *certified* when the growth bound a(E_v) >= h(1 - G) - 1,
h = vx + vy, shows that nothing past the enumeration horizon can change
the answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Iterator

from ..quotsing import QuotientSingularity
from .branches import Branch, Valuation, is_primitive
from .pairs import GermPair, check_nondegenerate, growth, meets_open_orbit, toric_discrepancy

DEFAULT_MAX_HEIGHT = Fraction(60)


class UncertifiedSearchError(RuntimeError):
    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


@dataclass(frozen=True)
class MLDResult:
    min_found: Fraction
    witness: Valuation | None
    certified: bool
    horizon: Fraction


def iter_lattice(sing: QuotientSingularity) -> Iterator[tuple[Fraction, list[Valuation]]]:
    """Height slices of primitive lattice points in the open quadrant, ascending."""
    n, q = sing.n, sing.q
    for s in count(2):
        pts = []
        for X_ in range(1, s):
            Y_ = s - X_
            if (X_ - q * Y_) % n:
                continue
            v = Valuation(Fraction(X_, n), Fraction(Y_, n))
            if is_primitive(sing, v):
                pts.append(v)
        yield Fraction(s, n), pts


def horizon_for(target: Fraction, g: Fraction) -> Fraction | None:
    """Height past which every toric discrepancy exceeds ``target``; None if G >= 1."""
    if g >= 1:
        return None
    return max(Fraction(0), (target + 1) / (1 - g))


def min_discrepancy_search(pair: GermPair, floor: Fraction = Fraction(-1),
                           max_height: Fraction = DEFAULT_MAX_HEIGHT,
                           stop_at: Fraction | None = None) -> MLDResult:
    """Minimal discrepancy over exceptional divisors, with a growth certificate.

    With ``stop_at`` the search returns (uncertified) at the first divisor
    whose discrepancy is at most that value.
    """
    check_nondegenerate(pair.branches)
    g = growth(pair.branches, pair.coeffs)
    best = None
    witness = None
    for h, pts in iter_lattice(pair.sing):
        if best is not None:
            lim = horizon_for(max(best, Fraction(floor)), g)
            if lim is not None and h > lim:
                return MLDResult(best, witness, True, lim)
            if g == 1 and best == -1:
                # a >= h(1 - g) - 1 = -1 everywhere, and -1 is attained
                return MLDResult(best, witness, True, h)
        if h > max_height:
            return MLDResult(best, witness, False, max_height)
        for v in pts:
            a = toric_discrepancy(pair, v)
            if best is None or a < best:
                best, witness = a, v
        if stop_at is not None and best is not None and best <= stop_at:
            return MLDResult(best, witness, False, h)


def divisors_below(pair: GermPair, bound: Fraction,
                   max_height: Fraction = DEFAULT_MAX_HEIGHT) -> tuple[list[tuple[Valuation, Fraction]], bool]:
    """All toric divisors with a <= bound, plus a completeness flag."""
    check_nondegenerate(pair.branches)
    g = growth(pair.branches, pair.coeffs)
    lim = horizon_for(bound, g)
    found = []
    for h, pts in iter_lattice(pair.sing):
        if lim is not None and h > lim:
            return found, True
        if h > max_height:
            return found, False
        for v in pts:
            a = toric_discrepancy(pair, v)
            if a <= bound:
                found.append((v, a))


@dataclass(frozen=True)
class DeltaResult:
    count: int
    witnesses: tuple[Valuation, ...]
    non_exceptional: tuple[tuple[Branch, int], ...]
    certified: bool


DELTA_BOUND = Fraction(-6, 7)


def delta_count(pair: GermPair) -> DeltaResult:
    """Number of divisors (exceptional or not) with a(E, D) <= -6/7."""
    toric, complete = divisors_below(pair, DELTA_BOUND)
    non_exc = tuple((b, b.n_components) for b, c in pair.entries if -c <= DELTA_BOUND)
    # over a non-fixed point of E_v meeting a branch: a = pA + qB - 1 >= a_v + 1 - c,
    # which can only reach -6/7 when a_v already does
    certified = complete
    for v, av in toric:
        for b, c in pair.entries:
            if meets_open_orbit(b, v) and av + 1 - c <= DELTA_BOUND:
                certified = False
    wit = tuple(sorted((v for v, _ in toric), key=Valuation.sort_key))
    n = len(wit) + sum(k for _, k in non_exc)
    res = DeltaResult(n, wit, non_exc, certified)
    if not certified:
        raise UncertifiedSearchError("delta count could not be certified", partial=res)
    return res
