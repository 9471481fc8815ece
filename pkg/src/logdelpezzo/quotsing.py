"""Cyclic quotient surface singularities Z_n(q,1).

Convention: the germ (C^2, 0)/Z_n(q,1), with the generator acting by
(x, y) -> (zeta^q x, zeta y), is resolved by the Hirzebruch-Jung chain of
n/q.  Under this convention Z_5(2,1) has chain [3, 2] and minimal
discrepancy -2/5.  Z_n(q,1) and Z_n(q',1) with q q' = 1 mod n are the same
germ with the chain reversed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence


class OutOfScopeError(ValueError):
    """Raised for non-cyclic (dihedral and other) quotient germs."""


class InvalidChainError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class QuotientSingularity:
    n: int
    q: int

    def __post_init__(self):
        if (self.n, self.q) == (1, 0):
            return
        if self.n < 1 or not 0 <= self.q < self.n or gcd(self.n, self.q) != 1:
            raise ValueError(f"invalid cyclic quotient Z_{self.n}({self.q},1)")

    @property
    def smooth(self) -> bool:
        return self.n == 1

    def dual(self) -> "QuotientSingularity":
        if self.smooth:
            return self
        return QuotientSingularity(self.n, pow(self.q, -1, self.n))

    def canonical(self) -> "QuotientSingularity":
        """Representative with the smaller of q and its inverse mod n."""
        return min(self, self.dual())

    def __str__(self):
        return "smooth" if self.smooth else f"Z_{self.n}({self.q},1)"


SMOOTH = QuotientSingularity(1, 0)


@dataclass(frozen=True)
class ResolutionChain:
    self_intersections: tuple[int, ...]  # the -b_i
    discrepancies: tuple[Fraction, ...]

    @property
    def bs(self) -> tuple[int, ...]:
        return tuple(-e for e in self.self_intersections)

    @property
    def min_discrepancy(self) -> Fraction:
        return min(self.discrepancies, default=Fraction(0))

    @property
    def du_val(self) -> bool:
        return all(b == 2 for b in self.bs)

    def intersection_matrix(self) -> list[list[int]]:
        r = len(self.bs)
        m = [[0] * r for _ in range(r)]
        for i, b in enumerate(self.bs):
            m[i][i] = -b
            if i + 1 < r:
                m[i][i + 1] = m[i + 1][i] = 1
        return m


def hj_expansion(sing: QuotientSingularity) -> list[int]:
    """Continued fraction n/q = b1 - 1/(b2 - ...), every b_i >= 2."""
    if sing.smooth:
        return []
    num, den = sing.n, sing.q
    out = []
    while den:
        b = -(-num // den)  # ceil
        out.append(b)
        num, den = den, b * den - num
    return out


def hj_value(bs: Sequence[int]) -> tuple[int, int]:
    """(m, q) with m/q = [b1, ..., br]; (1, 0) for the empty chain."""
    m, q = 1, 0
    for b in reversed(bs):
        m, q = b * m - q, m
    return m, q


def solve_chain(bs: Sequence[int]) -> list[Fraction]:
    """Discrepancies of a chain: sum_j a_j (E_i.E_j) = b_i - 2 for each i.

    Tridiagonal elimination in exact arithmetic.
    """
    r = len(bs)
    if r == 0:
        return []
    diag = [Fraction(-b) for b in bs]
    rhs = [Fraction(b - 2) for b in bs]
    for i in range(1, r):
        w = Fraction(1) / diag[i - 1]
        diag[i] -= w
        rhs[i] -= w * rhs[i - 1]
    a = [Fraction(0)] * r
    a[-1] = rhs[-1] / diag[-1]
    for i in range(r - 2, -1, -1):
        a[i] = (rhs[i] - a[i + 1]) / diag[i]
    return a


@lru_cache(maxsize=None)
def _discrepancies(n: int, q: int) -> ResolutionChain:
    bs = hj_expansion(QuotientSingularity(n, q))
    return ResolutionChain(tuple(-b for b in bs), tuple(solve_chain(bs)))


def discrepancies(sing: QuotientSingularity) -> ResolutionChain:
    if sing.smooth:
        raise ValueError("a smooth point has no resolution chain")
    return _discrepancies(sing.n, sing.q)


def chain_from_bs(bs: Sequence[int]) -> ResolutionChain:
    if any(b < 2 for b in bs):
        raise InvalidChainError(f"chain entries must be >= 2: {list(bs)}")
    return ResolutionChain(tuple(-b for b in bs), tuple(solve_chain(bs)))


def residual(chain: ResolutionChain) -> list[Fraction]:
    m = chain.intersection_matrix()
    a = chain.discrepancies
    return [sum(a[j] * m[i][j] for j in range(len(a))) + m[i][i] + 2 for i in range(len(a))]


def flank_orders(chain: ResolutionChain, index: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Cyclic points (m, q) left after contracting the two sub-chains beside one curve."""
    bs = chain.bs
    if not 0 <= index < len(bs):
        raise IndexError(f"curve index {index} outside chain of length {len(bs)}")
    left = list(reversed(bs[:index]))  # nearest curve first
    right = list(bs[index + 1:])
    return hj_value(left), hj_value(right)


def extraction_discrepancy(chain: ResolutionChain, index: int) -> Fraction:
    """a(E, 0) for one chain curve from the data of the point it is extracted from.

    a = -1 + (-2 + (m1-1)/m1 + (m2-1)/m2) / (-k + q1/m1 + q2/m2).
    """
    (m1, q1), (m2, q2) = flank_orders(chain, index)
    k = chain.bs[index]
    diff = different_degree([(m1, q1), (m2, q2)], [])
    e2 = -k + Fraction(q1, m1) + Fraction(q2, m2)
    return -1 + (-2 + diff) / e2


def different_degree(chain_orders: Sequence[tuple[int, int]],
                     transverse: Sequence[tuple[Fraction, int]] = ()) -> Fraction:
    """deg Diff_E(B) = sum (m-1)/m over cyclic points + sum coeff*mult over branches."""
    singular = [m for m, _ in chain_orders if m > 1]
    if len(singular) > 2:
        raise InvalidChainError("a chain curve carries at most two singular points")
    total = sum((Fraction(m - 1, m) for m, _ in chain_orders), Fraction(0))
    for coeff, mult in transverse:
        total += Fraction(coeff) * mult
    return total


def iter_cyclic(n_max: int, n_min: int = 2):
    for n in range(n_min, n_max + 1):
        for q in range(1, n):
            if gcd(n, q) == 1:
                yield QuotientSingularity(n, q)


def scan_half_bound(n_max: int) -> list[QuotientSingularity]:
    """Non-Du-Val cyclic germs of order <= n_max with every discrepancy > -1/2.

    Germs are reported once, by their canonical representative.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    half = Fraction(-1, 2)
    found = set()
    for s in iter_cyclic(n_max):
        ch = discrepancies(s)
        if not ch.du_val and ch.min_discrepancy > half:
            found.add(s.canonical())
    return sorted(found)
