"""Coefficient sets for boundaries and the rounding used by complements.

Sets handled: standard coefficients ``1 - 1/m`` (with ``m = inf`` giving 1),
``Phi_m``, the windows ``Phi_i``, the transfer sets ``P_n`` and ``Z/(n)``.
Everything is exact; there is no tolerance anywhere.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rational import floor_frac


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class CoeffSetId:
    tag: str  # "PhiSm" | "PhiM" | "PhiI" | "Pn" | "ZOverN"
    param: int | None = None

    def __post_init__(self):
        if self.tag not in ("PhiSm", "PhiM", "PhiI", "Pn", "ZOverN"):
            raise ValueError(f"unknown coefficient set {self.tag!r}")
        if self.tag == "PhiI" and (self.param is None or self.param < 2):
            raise ValueError("PhiI needs i >= 2")
        if self.tag in ("Pn", "ZOverN") and (self.param is None or self.param < 1):
            raise ValueError(f"{self.tag} needs n >= 1")

    def __str__(self):
        return self.tag if self.param is None else f"{self.tag}({self.param})"


PHI_SM = CoeffSetId("PhiSm")
PHI_M = CoeffSetId("PhiM")


def phi_i(i: int) -> CoeffSetId:
    return CoeffSetId("PhiI", i)


def p_n(n: int) -> CoeffSetId:
    return CoeffSetId("Pn", n)


def z_over_n(n: int) -> CoeffSetId:
    return CoeffSetId("ZOverN", n)


def is_standard(d: Fraction) -> bool:
    """``d = 1 - 1/m`` for a positive integer m, or ``d = 1``."""
    d = Fraction(d)
    if d == 1:
        return True
    if not 0 <= d < 1:
        return False
    return (1 - d).numerator == 1


def phi_window(i: int) -> tuple[Fraction, Fraction]:
    """Endpoints ``[(i-1)/i, i/(i+1))`` of the window defining ``Phi_i``."""
    return Fraction(i - 1, i), Fraction(i, i + 1)


def contains(cset: CoeffSetId, d) -> bool:
    d = Fraction(d)
    if cset.tag == "ZOverN":
        if d <= 0:
            raise PreconditionError(f"Z/(n) membership needs d > 0, got {d}")
        return (cset.param * d).denominator == 1
    if not 0 <= d <= 1:
        raise PreconditionError(f"coefficient {d} outside [0, 1]")
    if cset.tag == "PhiSm":
        return is_standard(d)
    if cset.tag == "PhiM":
        return is_standard(d) or d >= Fraction(6, 7)
    if cset.tag == "PhiI":
        a, b = phi_window(cset.param)
        return (is_standard(d) and d < b) or a <= d < b
    n = cset.param
    return floor_frac((n + 1) * d) >= n * d


def pn_intervals(n: int) -> list[tuple[Fraction, Fraction]]:
    """``P_n`` as ``{0}`` plus the closed intervals ``[k/(n+1), k/n]``."""
    if n < 1:
        raise PreconditionError("n must be positive")
    out = [(Fraction(0), Fraction(0))]
    out += [(Fraction(k, n + 1), Fraction(k, n)) for k in range(1, n + 1)]
    return out


def in_intervals(intervals: Sequence[tuple[Fraction, Fraction]], d) -> bool:
    """Membership in a union of closed intervals sorted by left endpoint and disjoint."""
    d = Fraction(d)
    j = bisect_right(intervals, d, key=lambda iv: iv[0]) - 1
    return j >= 0 and d <= intervals[j][1]


def round_boundary(coeffs: Sequence, n: int) -> list[Fraction]:
    """``floor((n+1) d) / n`` coordinatewise.

    A coefficient 1 maps to ``(n+1)/n``; callers treating it as a reduced
    component must cap it at 1 themselves.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    out = []
    for d in coeffs:
        d = Fraction(d)
        if not 0 <= d <= 1:
            raise PreconditionError(f"coefficient {d} outside [0, 1]")
        out.append(Fraction(floor_frac((n + 1) * d), n))
    return out
