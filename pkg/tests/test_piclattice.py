import json
from fractions import Fraction as F
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logdelpezzo.quotsing import QuotientSingularity

from logdelpezzo.piclattice import (CurveConfig, FibreScenario, check_fibre_scenario,
                                    fibre_multiplicities, DivisorClass, Incidence, PicardLattice,
                                    arithmetic_genus, enumerate_main3_system, ex1_3_model,
                                    intersect, model_shape_check, rank_one_bound,
                                    verify_ex1_3, verify_mainind1)

small = st.integers(-5, 5)


@st.composite
def lattice_and_classes(draw):
    base = draw(st.sampled_from(["P2", "F0", "F1", "F3"]))
    L = PicardLattice.p2() if base == "P2" else PicardLattice.hirzebruch(int(base[1:]))
    L = L.blow_up_many([f"x{j}" for j in range(draw(st.integers(0, 4)))])
    A = DivisorClass(tuple(draw(small) for _ in range(L.rank)))
    B = DivisorClass(tuple(draw(small) for _ in range(L.rank)))
    return L, A, B


@given(lattice_and_classes())
def test_blowup_preserves_pullbacks(data):
    L, A, B = data
    M = L.blow_up("e")
    assert intersect(M, M.lift(A), M.lift(B)) == intersect(L, A, B)
    e = M.basis("e")
    assert intersect(M, e, e) == -1
    assert arithmetic_genus(M, e) == 0
    assert M.canonical == M.lift(L.canonical) + e
    assert intersect(M, M.canonical, M.canonical) == intersect(L, L.canonical, L.canonical) - 1


@given(lattice_and_classes())
def test_noether_for_rational_surfaces(data):
    L = data[0]
    assert intersect(L, L.canonical, L.canonical) + L.rank == 10


@given(lattice_and_classes())
def test_intersection_symmetric_and_bilinear(data):
    L, A, B = data
    assert intersect(L, A, B) == intersect(L, B, A)
    assert intersect(L, A + B, B) == intersect(L, A, B) + intersect(L, B, B)
    assert intersect(L, 3 * A, B) == 3 * intersect(L, A, B)


@given(st.integers(0, 6))
def test_hirzebruch_basics(k):
    L = PicardLattice.hirzebruch(k)
    einf, f = L.basis("Einf"), L.basis("f")
    assert intersect(L, einf, einf) == -k and intersect(L, f, f) == 0
    assert arithmetic_genus(L, einf) == 0 and arithmetic_genus(L, f) == 0
    assert arithmetic_genus(L, einf + k * f) == 0


def test_line_and_conic_genus():
    L = PicardLattice.p2()
    assert arithmetic_genus(L, L.cls(H=1)) == 0
    assert arithmetic_genus(L, L.cls(H=3)) == 1
    assert arithmetic_genus(L, L.cls(H=4)) == 3


@pytest.mark.parametrize("k", range(6))
def test_mainind1_trivial(k):
    r = verify_mainind1(k)
    assert r.trivial and r.fibre_sum == 2


def test_mainind1_perturbed():
    r = verify_mainind1(2, (F(7, 12), F(2, 3), F(5, 7)))
    assert not r.trivial
    assert r.residual.coords == (0, F(-1, 28))


def test_ex1_3():
    r = verify_ex1_3()
    assert r.ok
    L, curves, _ = ex1_3_model()
    assert L.rank == 11
    assert all(c.integral() for c in curves.values())


def test_incomplete_config_reported():
    L = PicardLattice.p2()
    cfg = CurveConfig({"A": L.cls(H=1), "B": L.cls(H=1)}, [Incidence("A", "B", "P", 2)])
    assert cfg.check(L) == ["A.B: local 2 exceeds global 1"]


def test_shapes():
    P = PicardLattice.p2()
    rep = model_shape_check(P, [], CurveConfig({"H": P.cls(H=1)}, complete=True), 2)
    assert rep.shape == "A" and rep.certified
    Fk = PicardLattice.hirzebruch(3)
    einf, f = Fk.basis("Einf"), Fk.basis("f")
    cfg = CurveConfig({"Einf": einf, "f": f})
    rep = model_shape_check(Fk, [(einf, F(2, 3))], cfg, 3, rays=("f", "Einf"))
    assert rep.shape == "B" and not rep.certified
    rep = model_shape_check(Fk, [(einf, F(1, 2))], cfg, 3, rays=("f", "Einf"))
    assert rep.shape is None and not rep.checks["contracted curve in D"]
    L, curves, _ = ex1_3_model()
    rep = model_shape_check(L, [], CurveConfig(dict(curves)), 3, contracted=list(curves.values()))
    assert rep.rank == 8 and rep.shape is None


def test_main3_solution():
    rep = enumerate_main3_system(12, 6)
    assert rep.unique is not None
    s = rep.unique
    assert (s.ns, s.k2, s.rho, s.h1) == ((2,) * 5, 0, 2, 0)
    assert rank_one_bound(s.ns) == 4
    assert all(set(d.ns) == {1} and d.k2 == 0 for d in rep.degenerate)


def test_main3_stable_when_enlarged():
    a = enumerate_main3_system(8, 4)
    b = enumerate_main3_system(10, 5)
    assert a.solutions == b.solutions


def test_lattice_errors():
    with pytest.raises(ValueError):
        PicardLattice.p2().blow_up("H")
    with pytest.raises(ValueError):
        PicardLattice.p2().cls(E=1)
    with pytest.raises(ValueError):
        intersect(PicardLattice.p2(), DivisorClass((1, 0)), DivisorClass((1, 0)))
    with pytest.raises(ValueError):
        enumerate_main3_system(0, 3)


SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def _scenario(name):
    return FibreScenario.from_json(json.loads((SCENARIOS / f"{name}.json").read_text()))


@pytest.mark.parametrize("name,mult", [("fibre_fig1", (1, 2, 3, 1)),
                                       ("fibre_fig2", (1, 3, 2, 1)),
                                       ("fibre_fig3", (1, 3, 2, 1))])
def test_fibre_scenarios(name, mult):
    rep = check_fibre_scenario(_scenario(name))
    assert rep.multiplicities == mult
    # K + horizontal boundary is trivial on the fibre
    assert rep.horizontal_degree == 0
    assert sorted(rep.points) == sorted([QuotientSingularity(3, 1), QuotientSingularity(3, 2)])


def test_fibre_multiplicities_small():
    assert fibre_multiplicities([-1, -1]) == (1, 1)
    assert fibre_multiplicities([-2, -1, -2]) == (1, 2, 1)


@pytest.mark.parametrize("chain", [[-2, -2], [-1, -3], [-2, -1, -3]])
def test_not_a_fibre(chain):
    with pytest.raises(ValueError):
        fibre_multiplicities(chain)
