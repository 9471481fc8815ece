"""n-complements of boundaries on complete curves.

Curves are P^1, chains and cycles of P^1 (nodes carry coefficient 1 on both
branches), or an elliptic curve.  On a rational component of degree -2 the
problem is arithmetic: every point needs n*d+ >= floor((n+1)d) (or d+ = 1
when d = 1), the coefficients must sum to 2, and any slack goes to fresh
general points.

A boundary may also record horizontal components of a fibration whose
section is the curve.  Then the complement must in addition satisfy
K + C + floor((n+1)B)/n = 0 on a general fibre, i.e.
sum floor((n+1)b) * deg / n = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from fractions import Fraction
from math import floor
from typing import Iterable, Sequence

from .coeffsets import PreconditionError

F = Fraction


@dataclass(frozen=True)
class Topology:
    kind: str  # P1, Chain, Cycle, Elliptic
    length: int = 1

    def __post_init__(self):
        if self.kind not in ("P1", "Chain", "Cycle", "Elliptic"):
            raise ValueError(f"unknown topology {self.kind!r}")
        if self.kind in ("P1", "Elliptic") and self.length != 1:
            raise ValueError(f"{self.kind} has one component")
        if self.length < 1:
            raise ValueError("need at least one component")

    @property
    def rational(self) -> bool:
        return self.kind != "Elliptic"

    def nodes_on(self, comp: int) -> int:
        """Node branches on the normalisation of one component."""
        if self.kind == "Cycle":
            return 2
        if self.kind == "Chain":
            if self.length == 1:
                return 0
            return 1 if comp in (0, self.length - 1) else 2
        return 0

    def degree(self) -> int:
        """-deg K on the normalisation of a component."""
        return 2 if self.rational else 0

    def __str__(self):
        return self.kind if self.kind in ("P1", "Elliptic") else f"{self.kind}({self.length})"


P1 = Topology("P1")
ELLIPTIC = Topology("Elliptic")


@dataclass(frozen=True)
class CurveBoundary:
    topology: Topology
    points: tuple[tuple[int, Fraction], ...] = ()
    horizontal: tuple[tuple[Fraction, int], ...] = ()  # (coefficient, degree on a fibre)

    def __post_init__(self):
        pts = tuple((int(c), F(d)) for c, d in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "horizontal", tuple((F(b), int(k)) for b, k in self.horizontal))
        for c, d in pts:
            if not 0 <= c < self.topology.length:
                raise ValueError(f"component {c} out of range")
            if not 0 <= d <= 1:
                raise ValueError(f"coefficient {d} outside [0, 1]")

    @classmethod
    def on_p1(cls, coeffs: Iterable, horizontal: Sequence = ()) -> "CurveBoundary":
        return cls(P1, tuple((0, F(d)) for d in coeffs), tuple(horizontal))

    def component(self, c: int) -> list[Fraction]:
        return [d for cc, d in self.points if cc == c]

    def degree_sum(self, c: int) -> Fraction:
        return sum(self.component(c), F(0)) + self.topology.nodes_on(c)

    def is_nef(self) -> bool:
        """-(K + D) nef on every component."""
        return self._nef

    @cached_property
    def _nef(self) -> bool:
        return all(self.degree_sum(c) <= self.topology.degree() for c in range(self.topology.length))


@dataclass(frozen=True)
class Complement:
    n: int
    plus: tuple[tuple[int, Fraction], ...]  # matches the input points, in order
    fresh: tuple[tuple[int, Fraction], ...] = ()  # added general points

    def on_component(self, c: int) -> list[Fraction]:
        return [d for cc, d in self.plus + self.fresh if cc == c]


@dataclass(frozen=True)
class Failure:
    n: int
    reason: str
    component: int | None = None
    required: int | None = None
    available: int | None = None

    def __str__(self):
        if self.component is None:
            return f"n={self.n}: {self.reason}"
        return (f"n={self.n}: {self.reason} on component {self.component} "
                f"(need {self.required}/{self.n}, have {self.available}/{self.n})")


def required_numerator(d: Fraction, n: int) -> int:
    """Least m with m/n admissible as the complement coefficient over d."""
    if d == 1:
        return n
    return (n + 1) * d.numerator // d.denominator


def horizontal_ok(b: CurveBoundary, n: int) -> bool:
    return sum(floor((n + 1) * c) * k for c, k in b.horizontal) == n


def _slack_points(comp: int, slack: int, n: int) -> list[tuple[int, Fraction]]:
    # chunks below 1 keep the round-down of the complement zero when possible
    chunk = max(1, n - 1)
    out = []
    while slack > 0:
        m = min(chunk, slack)
        out.append((comp, F(m, n)))
        slack -= m
    return out


def has_n_complement(b: CurveBoundary, n: int) -> tuple[bool, Complement | Failure]:
    if n < 1:
        raise ValueError("n must be positive")
    if not b.is_nef():
        raise PreconditionError("-(K + D) is not nef on some component")
    topo = b.topology
    if not topo.rational:
        if b.points and any(d > 0 for _, d in b.points):
            raise PreconditionError("a nonzero boundary on an elliptic curve is not nef")
        return True, Complement(n, tuple((c, F(0)) for c, _ in b.points))
    if b.horizontal and not horizontal_ok(b, n):
        return False, Failure(n, "horizontal part is not trivial on a general fibre")
    req = [required_numerator(d, n) for _, d in b.points]
    plus = [(c, F(m, n)) for (c, _), m in zip(b.points, req)]
    fresh = []
    for comp in range(topo.length):
        need = sum(m for (c, _), m in zip(b.points, req) if c == comp) + n * topo.nodes_on(comp)
        if need > 2 * n:
            return False, Failure(n, "required coefficients exceed degree 2", comp, need, 2 * n)
        fresh += _slack_points(comp, 2 * n - need, n)
    return True, Complement(n, tuple(plus), tuple(fresh))


def _numerator_over(dp: Fraction, n: int) -> int | None:
    """m with dp = m/n, or None when dp is not in Z/n."""
    m, r = divmod(n * dp.numerator, dp.denominator)
    return None if r else m


def check_complement(b: CurveBoundary, comp: Complement) -> bool:
    """Re-check a witness against the definition directly, in numerators over n."""
    n = comp.n
    if len(comp.plus) != len(b.points):
        return False
    topo = b.topology
    total = [n * topo.nodes_on(c) for c in range(topo.length)]
    for (c, d), (c2, dp) in zip(b.points, comp.plus):
        m = _numerator_over(dp, n)
        if c != c2 or m is None or not 0 <= m <= n:
            return False
        p, q = d.numerator, d.denominator
        if (p == q and m != n) or (p < q and m < (n + 1) * p // q):
            return False
        total[c] += m
    for c, dp in comp.fresh:
        m = _numerator_over(dp, n)
        if m is None or not 0 < m <= n:
            return False
        total[c] += m
    return all(t == n * topo.degree() for t in total)


def minimal_complement_index(b: CurveBoundary, search_set: Sequence[int]) -> int | None:
    if not search_set:
        raise ValueError("empty search set")
    for n in sorted(search_set):
        if has_n_complement(b, n)[0]:
            return n
    return None


@dataclass(frozen=True)
class DichotomyReport:
    complementary: dict[int, bool]
    fails_one_and_two: bool
    is_p1: bool
    round_down_zero: bool
    witness_round_down_zero: bool

    @property
    def holds(self) -> bool:
        if not self.fails_one_and_two:
            return True
        return self.is_p1 and self.round_down_zero and self.witness_round_down_zero


def compl1_dichotomy(b: CurveBoundary) -> DichotomyReport:
    """If neither 1- nor 2-complements exist: P^1 and no coefficient-1 points."""
    res = {n: has_n_complement(b, n) for n in (1, 2, 3, 4, 6)}
    fails = not res[1][0] and not res[2][0]
    wit_ok = all(all(d < 1 for _, d in w.plus + w.fresh) for ok, w in res.values() if ok)
    return DichotomyReport({n: r[0] for n, r in res.items()}, fails, b.topology == P1,
                           all(d < 1 for _, d in b.points), wit_ok)


STAR_BASE = (F(3, 5), F(2, 3), F(5, 7))
STAR_LIMIT = F(2, 105)
STAR_HORIZONTAL = ((F(1, 2), 1), (F(1, 2), 1))
SMALL_INDICES = (1, 2, 3, 4, 6)


def star_boundary(eps: Sequence, fibred: bool = True) -> CurveBoundary:
    """The exceptional boundary (3/5+e1, 2/3+e2, 5/7+e3) on the section of a P^1-fibration.

    ``fibred`` adds the two horizontal halves of the ambient surface.
    """
    eps = [F(e) for e in eps]
    return CurveBoundary.on_p1([b + e for b, e in zip(STAR_BASE, eps)],
                               STAR_HORIZONTAL if fibred else ())


@dataclass(frozen=True)
class StarReport:
    inside: bool
    curve_level: dict[int, bool] = field(default_factory=dict)
    fibred: dict[int, bool] = field(default_factory=dict)
    findings: tuple[str, ...] = ()

    def __bool__(self):
        return self.inside


def exceptional_star_region(eps: Sequence) -> StarReport:
    """Whether eps is in the exceptional region, with the small-index failures checked."""
    eps = [F(e) for e in eps]
    if len(eps) != 3 or any(e < 0 for e in eps):
        raise ValueError("need three non-negative epsilons")
    inside = sum(eps) < STAR_LIMIT
    if not inside:
        return StarReport(False)
    curve = {n: has_n_complement(star_boundary(eps, False), n)[0] for n in SMALL_INDICES}
    fib = {n: has_n_complement(star_boundary(eps, True), n)[0] for n in SMALL_INDICES}
    findings = [f"curve-level {n}-complement exists" for n, ok in curve.items() if ok]
    findings += [f"fibred {n}-complement exists" for n, ok in fib.items() if ok]
    return StarReport(True, curve, fib, tuple(findings))


def brute_force_n_complement(b: CurveBoundary, n: int) -> bool:
    """Search every admissible numerator m/n at each point, then fill with fresh points.

    Independent of :func:`has_n_complement`: it tests the three defining
    conditions coefficient by coefficient instead of using the closed form.
    """
    topo = b.topology
    if not topo.rational:
        return all(d == 0 for _, d in b.points)
    if b.horizontal:
        fib = F(-2) + 1  # K.f + C.f
        fib += sum((F(floor((n + 1) * c), n) * k for c, k in b.horizontal), F(0))
        if fib != 0:
            return False
    full = (1 << (2 * n + 1)) - 1  # bit t set: total numerator t is reachable
    for comp in range(topo.length):
        reach = 1 << (n * topo.nodes_on(comp))
        for d in b.component(comp):
            nxt = 0
            for m in _admissible(d.numerator, d.denominator, n):
                nxt |= reach << m
            reach = nxt & full
        if not reach:
            return False
    return True


@lru_cache(maxsize=None)
def _admissible(p: int, q: int, n: int) -> tuple[int, ...]:
    """Numerators m in 0..n with n(m/n) >= n S + floor((n+1) B) for D = p/q = S + B at one point."""
    d = F(p, q)
    s_part, b_part = (F(1), F(0)) if d == 1 else (F(0), d)
    return tuple(m for m in range(n + 1) if n * F(m, n) >= n * s_part + floor((n + 1) * b_part))
