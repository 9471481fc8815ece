"""Case recognition for strictly (1-alpha)-log canonical germs and Phi_i germs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..coeffsets import contains, phi_i
from ..quotsing import QuotientSingularity
from .branches import NODE, X, Y, Branch, Valuation, cusp_a, tangent
from .pairs import GermPair
from .search import UncertifiedSearchError, min_discrepancy_search

F = Fraction


@dataclass(frozen=True)
class Classification:
    case: str
    min_discrepancy: Fraction
    witness: Valuation | None
    alpha: Fraction | None = None
    note: str = ""


def _certified_min(pair: GermPair):
    res = min_discrepancy_search(pair)
    if not res.certified:
        raise UncertifiedSearchError(f"minimal discrepancy of {pair} not certified",
                                     partial=res.min_found)
    return res


def _shape_two2(pair: GermPair) -> tuple[str, Fraction] | None:
    """Structural match against the four strictly (1-alpha)-lc germs."""
    s = pair.sing
    ents = dict(pair.entries)
    if s.n >= 2 and s.q == s.n - 1:
        if set(ents) == {NODE}:
            return "a", ents[NODE]
        if set(ents) == {X, Y} and ents[X] == ents[Y]:
            return "a", ents[X]
    if s == QuotientSingularity(4, 3) and set(ents) == {cusp_a(2)}:
        return "b", ents[cusp_a(2)]
    if s == QuotientSingularity(2, 1):
        if set(ents) == {cusp_a(4)} and ents[cusp_a(4)] <= F(2, 3):
            return "c", ents[cusp_a(4)]
        if ents == {X: F(1, 2), tangent(3): F(1, 2)}:
            return "d", F(1, 2)
    return None


def classify_two2(pair: GermPair) -> Classification:
    """Which of the subcases (a)-(d) the pair is, confirmed by min a = -alpha."""
    res = _certified_min(pair)
    m = _shape_two2(pair)
    if m is None:
        return Classification("none", res.min_found, res.witness)
    case, alpha = m
    if res.min_found != -alpha:
        return Classification("none", res.min_found, res.witness, alpha,
                              f"shape of ({case}) but min a != -alpha")
    return Classification(case, res.min_found, res.witness, alpha)


class ClassificationGapError(RuntimeError):
    """A 1/i-log terminal pair that matches none of the four cases."""


_SMOOTH_BRANCHES = {"X", "Y", "Line", "Tangent"}


def _transverse(b1: Branch, b2: Branch) -> bool:
    # the only tangent pair of smooth menu branches is {x=0} with {x+y^k=0}
    tags = {b1.tag, b2.tag}
    return not (tags == {"X", "Tangent"} or (b1.tag == b2.tag == "Tangent"))


def _case_phi_i(pair: GermPair, i: int) -> tuple[str, str]:
    s = pair.sing
    ents = [(b, c) for b, c in pair.entries if c > 0]
    big = F(i - 1, i)
    smooth_only = all(b.tag in _SMOOTH_BRANCHES for b, _ in ents)

    if not s.smooth:
        # a smooth invariant branch is an axis after an equivariant change of
        # coordinates: x + y^k (and x + y, when q = 1) plays the role of x
        if not all(b.tag in _SMOOTH_BRANCHES for b, _ in ents) or len(ents) > 2:
            return "", "branch through a quotient point is not smooth"
        axis = {"X": "X", "Tangent": "X", "Y": "Y"}
        tags = [axis.get(b.tag) for b, _ in ents]
        if None in tags:  # Line: whichever axis is free
            tags = [t or ("Y" if "X" in tags else "X") for t in tags]
        if len(set(tags)) < len(tags):
            return "", "two tangent branches through a quotient point"
        co = dict(zip(tags, (c for _, c in ents)))
        n, q = s.n, s.q
        orders = []
        if co.get("X", 0) >= big:
            orders.append((co["X"], co.get("Y", F(0)), q))
        if co.get("Y", 0) >= big:
            # swapping the axes replaces q with its inverse mod n
            orders.append((co["Y"], co.get("X", F(0)), pow(q, -1, n)))
        for alpha, b1, qq in orders:
            if (F(n, i) - 1 + b1) / (1 - alpha) < qq <= n:
                return "case4", ""
        return "", "quotient point violates the case 4 inequality"

    if len(ents) == 1 and ents[0][0].tag == "CuspA":
        b, alpha = ents[0]
        k = b.k
        if k == 2:
            return "case3", ""
        if k == 3:
            return ("case3", "") if i in (2, 3, 4) else ("", "k=3 needs i <= 4")
        if i == 2 and alpha < F(1, 2) + F(1, 4 * (k // 2)):
            return "case3", ""
        return "", "k >= 4 needs i = 2 and the alpha bound"

    if len(ents) == 1 and ents[0][0] == NODE:
        ents = [(X, ents[0][1]), (Y, ents[0][1])]
        smooth_only = True

    if smooth_only and len(ents) <= 2:
        if len(ents) == 2 and not _transverse(ents[0][0], ents[1][0]):
            (b1, c1), (b2, c2) = ents
            k = b1.k if b1.tag == "Tangent" else b2.k
            if c1 > F(1, 2) and c2 > F(1, 2):
                if i == 2 and c1 + c2 < 1 + F(1, 2 * k):
                    return "case1", ""
                return "", "case 1 needs i = 2 and alpha + beta < 1 + 1/(2k)"
            if F(1, 2) in (c1, c2):
                alpha = c2 if c1 == F(1, 2) else c1
                if k == 2:
                    return "case2", ""
                if k == 3:
                    return ("case2", "") if i in (2, 3) else ("", "k=3 needs i <= 3")
                if i == 2 and alpha < F(1, 2) + F(1, 2 * k):
                    return "case2", ""
                return "", "k >= 4 needs i = 2 and the alpha bound"
            return "", "tangent branches with a coefficient below 1/2"
        # one or two transverse smooth branches: the smooth instance of case 4
        cs = sorted((c for _, c in ents), reverse=True) + [F(0), F(0)]
        alpha, b1 = cs[0], cs[1]
        if (F(1, i) - 1 + b1) / (1 - alpha) < 1:
            return "case4", ""
        return "", "smooth point violates the case 4 inequality"
    return "", "boundary shape is outside the case list"


def classify_phi_i(pair: GermPair, i: int) -> Classification:
    """Case of a Phi_i germ, or not_phi_i when some divisor has a <= -1 + 1/i."""
    if i not in (2, 3, 4, 5, 6):
        raise ValueError("i must be one of 2..6")
    cs = phi_i(i)
    coeffs = [c for c in pair.coeffs if c > 0]
    if not all(contains(cs, c) for c in coeffs):
        raise ValueError("coefficients must lie in Phi_i")
    if not any(c >= F(i - 1, i) for c in coeffs):
        raise ValueError("some coefficient must be at least (i-1)/i")
    res = min_discrepancy_search(pair, floor=-1 + F(1, i), stop_at=-1 + F(1, i))
    if res.min_found <= -1 + F(1, i):
        # a witness divisor settles this without a certificate
        return Classification("not_phi_i", res.min_found, res.witness)
    if not res.certified:
        raise UncertifiedSearchError(f"minimal discrepancy of {pair} not certified",
                                     partial=res.min_found)
    case, why = _case_phi_i(pair, i)
    if not case:
        raise ClassificationGapError(f"{pair} is 1/{i}-log terminal but {why}")
    return Classification(case, res.min_found, res.witness)
