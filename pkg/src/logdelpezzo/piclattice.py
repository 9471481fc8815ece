"""Picard lattices of blown-up P^2 and Hirzebruch surfaces.

Classes are coordinate vectors over the lattice basis; everything is exact.
Only numerical equivalence is visible here, so torsion statements such as
3K ~ 0 are checked as K + (1/3)(...) == 0 in the lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, lcm
from typing import Sequence

from .quotsing import QuotientSingularity, hj_value

F = Fraction


@dataclass(frozen=True)
class DivisorClass:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(F(c) for c in self.coords))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _same_dim(self, other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def __mul__(self, s) -> "DivisorClass":
        return DivisorClass(tuple(F(s) * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def extend(self, extra: int = 1) -> "DivisorClass":
        """Pullback to a lattice with more exceptional classes."""
        return DivisorClass(self.coords + (F(0),) * extra)


def _same_dim(a: DivisorClass, b: DivisorClass):
    if len(a.coords) != len(b.coords):
        raise ValueError(f"dimension mismatch: {len(a.coords)} vs {len(b.coords)}")


@dataclass(frozen=True)
class PicardLattice:
    base: str  # "P2" or "F<k>"
    names: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    canonical: DivisorClass

    @classmethod
    def p2(cls) -> "PicardLattice":
        return cls("P2", ("H",), ((1,),), DivisorClass((-3,)))

    @classmethod
    def hirzebruch(cls, k: int) -> "PicardLattice":
        if k < 0:
            raise ValueError("k must be non-negative")
        return cls(f"F{k}", ("Einf", "f"), ((-k, 1), (1, 0)), DivisorClass((-2, -(k + 2))))

    @property
    def rank(self) -> int:
        return len(self.names)

    @property
    def k(self) -> int | None:
        return int(self.base[1:]) if self.base.startswith("F") else None

    def blow_up(self, name: str | None = None) -> "PicardLattice":
        """Blow up one point: new class e with e^2 = -1, orthogonal to the rest, K += e."""
        r = self.rank
        name = name or f"e{r}"
        if name in self.names:
            raise ValueError(f"basis name {name!r} already used")
        gram = tuple(row + (0,) for row in self.gram) + (tuple([0] * r + [-1]),)
        return PicardLattice(self.base, self.names + (name,), gram,
                             DivisorClass(self.canonical.extend().coords[:-1] + (F(1),)))

    def blow_up_many(self, names: Sequence[str]) -> "PicardLattice":
        lat = self
        for n in names:
            lat = lat.blow_up(n)
        return lat

    def cls(self, **coords) -> DivisorClass:
        unknown = set(coords) - set(self.names)
        if unknown:
            raise ValueError(f"unknown basis names {sorted(unknown)}")
        return DivisorClass(tuple(F(coords.get(n, 0)) for n in self.names))

    def zero(self) -> DivisorClass:
        return DivisorClass((F(0),) * self.rank)

    def basis(self, name: str) -> DivisorClass:
        return self.cls(**{name: 1})

    def lift(self, c: DivisorClass) -> DivisorClass:
        """Pullback of a class from a lattice with fewer blow-ups."""
        if len(c.coords) > self.rank:
            raise ValueError("class lives on a larger lattice")
        return c.extend(self.rank - len(c.coords))


def intersect(L: PicardLattice, A: DivisorClass, B: DivisorClass) -> Fraction:
    if len(A.coords) != L.rank or len(B.coords) != L.rank:
        raise ValueError("class dimension does not match the lattice")
    return sum((A.coords[i] * L.gram[i][j] * B.coords[j]
                for i in range(L.rank) for j in range(L.rank) if L.gram[i][j]), F(0))


def arithmetic_genus(L: PicardLattice, C: DivisorClass) -> Fraction:
    return 1 + (intersect(L, C, C) + intersect(L, L.canonical, C)) / 2


# ---------------------------------------------------------------- curve configurations

@dataclass(frozen=True)
class Incidence:
    a: str
    b: str
    point: str
    mult: int


@dataclass
class CurveConfig:
    curves: dict[str, DivisorClass]
    incidences: list[Incidence] = field(default_factory=list)
    complete: bool = False

    def local_total(self, a: str, b: str) -> int:
        return sum(i.mult for i in self.incidences if {i.a, i.b} == {a, b})

    def check(self, L: PicardLattice) -> list[str]:
        """Problems with the declared local data; empty when consistent."""
        issues = []
        names = sorted(self.curves)
        for x in range(len(names)):
            for y in range(x + 1, len(names)):
                a, b = names[x], names[y]
                glob = intersect(L, self.curves[a], self.curves[b])
                loc = self.local_total(a, b)
                if loc > glob:
                    issues.append(f"{a}.{b}: local {loc} exceeds global {glob}")
                elif self.complete and loc != glob:
                    issues.append(f"{a}.{b}: local {loc} differs from global {glob}")
        return issues


# ---------------------------------------------------------------- example on F_k

MAININD1_FIBRES = (F(7, 12), F(2, 3), F(3, 4))


@dataclass(frozen=True)
class MainInd1Report:
    k: int
    residual: DivisorClass
    fibre_sum: Fraction

    @property
    def trivial(self) -> bool:
        return self.residual.is_zero()


def verify_mainind1(k: int, fibres: Sequence = MAININD1_FIBRES) -> MainInd1Report:
    """K + E_inf + E_1/2 + E_2/2 + sum c_i f on F_k, expected to vanish."""
    L = PicardLattice.hirzebruch(k)
    einf, f = L.basis("Einf"), L.basis("f")
    zero_section = einf + k * f
    fs = sum((F(c) for c in fibres), F(0))
    total = L.canonical + einf + F(1, 2) * zero_section + F(1, 2) * zero_section + fs * f
    return MainInd1Report(k, total, fs)


# ---------------------------------------------------------------- P^2 with ten points

@dataclass(frozen=True)
class Ex13Report:
    self_intersections: tuple[Fraction, ...]
    genera: tuple[Fraction, ...]
    pairwise: tuple[Fraction, ...]
    residual: DivisorClass
    rho: int
    config_issues: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (self.self_intersections == (-3, -3, -3) and self.genera == (0, 0, 0)
                and self.pairwise == (0, 0, 0) and self.residual.is_zero() and self.rho == 8
                and not self.config_issues)


# multiplicities of (line, quartic 2, quartic 3) at Q1..Q10
EX13_MULTIPLICITIES = (
    [(1, 1, 1)] * 4
    + [(0, 2, 1)] * 3
    + [(0, 1, 2)] * 3
)


def _plane_incidences() -> list[Incidence]:
    inc = []
    for j, mults in enumerate(EX13_MULTIPLICITIES, start=1):
        for x, y in ((0, 1), (0, 2), (1, 2)):
            if mults[x] and mults[y]:
                inc.append(Incidence(f"E{x + 1}", f"E{y + 1}", f"Q{j}", mults[x] * mults[y]))
    return inc


def ex1_3_model() -> tuple[PicardLattice, dict[str, DivisorClass], CurveConfig]:
    """Blown-up lattice, proper transforms, and the incidence data on P^2."""
    L = PicardLattice.p2().blow_up_many([f"e{j}" for j in range(1, 11)])
    degs = (1, 4, 4)
    curves = {}
    for idx, d in enumerate(degs):
        c = {"H": d}
        for j, mults in enumerate(EX13_MULTIPLICITIES, start=1):
            c[f"e{j}"] = -mults[idx]
        curves[f"E{idx + 1}"] = L.cls(**c)
    plane = PicardLattice.p2()
    cfg = CurveConfig({f"E{i + 1}": plane.cls(H=d) for i, d in enumerate(degs)},
                      _plane_incidences(), complete=True)
    return L, curves, cfg


def verify_ex1_3() -> Ex13Report:
    L, curves, cfg = ex1_3_model()
    names = ("E1", "E2", "E3")
    selfs = tuple(intersect(L, curves[n], curves[n]) for n in names)
    gens = tuple(arithmetic_genus(L, curves[n]) for n in names)
    pairs = tuple(intersect(L, curves[a], curves[b])
                  for a, b in (("E1", "E2"), ("E1", "E3"), ("E2", "E3")))
    res = L.canonical + F(1, 3) * (curves["E1"] + curves["E2"] + curves["E3"])
    return Ex13Report(selfs, gens, pairs, res, L.rank - 3, tuple(cfg.check(PicardLattice.p2())))


# ---------------------------------------------------------------- Riemann-Roch / Noether system

@dataclass(frozen=True)
class Main3Solution:
    ns: tuple[int, ...]
    k2: Fraction  # K_S^2 = K^2 of the resolution + sum n/(2n+1)
    rho: int
    h1: int

    @property
    def r(self) -> int:
        return len(self.ns)


@dataclass(frozen=True)
class Main3Report:
    solutions: tuple[Main3Solution, ...]
    excluded_by_rank_one: tuple[Main3Solution, ...]
    degenerate: tuple[Main3Solution, ...]  # all n_i = 1 with K numerically trivial

    @property
    def unique(self) -> Main3Solution | None:
        return self.solutions[0] if len(self.solutions) == 1 else None


def _orbifold_sum(ns: Sequence[int]) -> Fraction:
    return sum((F(n, 2 * n + 1) for n in ns), F(0))


def rank_one_bound(ns: Sequence[int]) -> Fraction:
    """sum (m-1)/m over the points, m = 2n+1 the local fundamental group order."""
    return sum((F(2 * n, 2 * n + 1) for n in ns), F(0))


def enumerate_main3_system(r_max: int, n_max: int, k2_max: int = 5, rho_max: int = 9) -> Main3Report:
    """Solutions of the vanishing h^0 equation and the Noether inequality.

    Points are of type 1/(2n+1)(n,1).  K_S^2 = N + sum n/(2n+1) with N the
    (integral) K^2 of the minimal resolution; h^1 = -(3N + r + 1) must be
    non-negative.  The all-ones tuples are listed separately: there the
    vanishing used for the equation fails when K is numerically trivial.
    """
    if r_max < 1 or n_max < 1:
        raise ValueError("r_max and n_max must be positive")
    sols, rank_one, degen = [], [], []
    for r in range(1, r_max + 1):
        for ns in combinations_with_replacement(range(1, n_max + 1), r):
            s = _orbifold_sum(ns)
            # K_S^2 = N + s >= 0 and h^1 = -(3N + r + 1) >= 0
            n_lo = -int(s)  # ceil(-s)
            if F(n_lo) < -s:
                n_lo += 1
            for N in range(n_lo, k2_max + 1):
                k2 = N + s
                if k2 > k2_max:
                    break
                for rho in range(1, rho_max + 1):
                    if k2 - s + rho + sum(ns) > 10:
                        break
                    h1 = -(3 * N + r + 1)
                    if all(n == 1 for n in ns) and k2 == 0:
                        degen.append(Main3Solution(ns, k2, rho, h1))
                        continue
                    if h1 < 0:
                        continue
                    sol = Main3Solution(ns, k2, rho, h1)
                    if rho == 1 and rank_one_bound(ns) > 3:
                        rank_one.append(sol)
                    else:
                        sols.append(sol)
    key = lambda x: (x.r, x.ns, x.k2, x.rho)
    return Main3Report(tuple(sorted(sols, key=key)), tuple(sorted(rank_one, key=key)),
                       tuple(sorted(degen, key=key)))


# ---------------------------------------------------------------- model shapes

@dataclass(frozen=True)
class ShapeReport:
    rank: int
    shape: str | None  # "A", "B", or None
    checks: dict
    certified: bool
    notes: tuple[str, ...] = ()


def model_shape_check(L: PicardLattice, D: Sequence[tuple[DivisorClass, Fraction]],
                      config: CurveConfig, i: int, contracted: Sequence[DivisorClass] = (),
                      rays: Sequence[str] = ()) -> ShapeReport:
    """Numeric conditions of a rank-one or rank-two model against declared curves.

    ``contracted`` lists classes of curves contracted to reach the model
    (each lowers the rank by one); ``rays`` names declared curves spanning the
    two extremal rays in the rank-two case.  Nefness of -(K+D) is only
    checked against the declared curves.
    """
    rank = L.rank - len(contracted)
    notes = []
    if not config.complete:
        notes.append("curve configuration is incomplete: cannot certify")
    kd = L.canonical
    for c, a in D:
        kd = kd + F(a) * c
    checks = {}
    for name, c in sorted(config.curves.items()):
        checks[f"nef:{name}"] = -intersect(L, kd, c) >= 0
    shape = None
    if rank == 1:
        shape = "A"
    elif rank == 2:
        if len(rays) != 2:
            notes.append("rank two needs two declared ray curves")
        else:
            r1, r2 = (config.curves[r] for r in rays)
            checks["fibration ray"] = intersect(L, r1, r1) == 0
            e2 = intersect(L, r2, r2)
            if e2 < 0:
                coeff = max((F(a) for c, a in D if c == r2), default=F(0))
                checks["contracted curve in D"] = coeff >= F(i - 1, i)
            if checks["fibration ray"] and checks.get("contracted curve in D", True):
                shape = "B"
    else:
        notes.append(f"rank {rank} is neither 1 nor 2")
    ok = all(checks.values())
    if shape and not ok:
        shape = None
    return ShapeReport(rank, shape, checks, config.complete and not config.check(L), tuple(notes))


# ---------------------------------------------------------------- degenerate fibres

@dataclass(frozen=True)
class FibreScenario:
    """A chain of rational curves forming one fibre, with horizontal curves attached.

    ``chain`` lists self-intersections from the minimal-section side; the
    component at ``kept`` survives, the others are contracted to cyclic
    points.  ``horizontal`` maps a name to (coefficient, component met,
    local intersection).  The figures do not fix k, so ``k`` may be None.
    """
    name: str
    chain: tuple[int, ...]
    kept: int
    horizontal: dict
    k: int | None = None

    @classmethod
    def from_json(cls, d: dict) -> "FibreScenario":
        hor = {n: (F(v["coeff"]), int(v["component"]), int(v.get("local", 1)))
               for n, v in d["horizontal"].items()}
        return cls(d["name"], tuple(d["chain"]), int(d["kept"]), hor, d.get("k"))


@dataclass(frozen=True)
class FibreReport:
    multiplicities: tuple[int, ...]
    horizontal_degree: Fraction  # (K + horizontal part) . F
    points: tuple  # cyclic points left after contracting all but the kept component


def fibre_multiplicities(chain: Sequence[int]) -> tuple[int, ...]:
    """Positive primitive m with (sum m_i C_i) . C_j = 0 for the chain, or ValueError."""
    if len(chain) == 1:
        if chain[0] != 0:
            raise ValueError("a single fibre component has self-intersection 0")
        return (1,)
    # F.C_0 = 0 gives m_1 = -c_0 m_0, then propagate along the chain
    m = [F(1), -F(chain[0])]
    for j in range(1, len(chain) - 1):
        m.append(-F(chain[j]) * m[j] - m[j - 1])
    last = m[-2] + chain[-1] * m[-1]
    if last != 0 or any(x <= 0 for x in m):
        raise ValueError(f"chain {list(chain)} is not a fibre")
    ints = [int(x * lcm(*(y.denominator for y in m))) for x in m]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def check_fibre_scenario(sc: FibreScenario) -> FibreReport:
    m = fibre_multiplicities(sc.chain)
    # K.F = -2 on a P^1-fibration; a horizontal curve meets F in sum m_i (C_i . H)
    deg = F(-2)
    for coeff, comp, local in sc.horizontal.values():
        deg += coeff * m[comp] * local
    points = []
    # each side of the kept curve, nearest curve first
    for run in (sc.chain[:sc.kept][::-1], sc.chain[sc.kept + 1:]):
        if run:
            n, q = hj_value([-c for c in run])
            points.append(QuotientSingularity(n, q).canonical())
    return FibreReport(m, deg, tuple(points))
