from fractions import Fraction as F

import pytest
from hypothesis import assume, example, given
from hypothesis import strategies as st

from logdelpezzo.coeffsets import PreconditionError
from logdelpezzo.curvecomp import (ELLIPTIC, P1, SMALL_INDICES, STAR_BASE, Complement, CurveBoundary,
                                   Topology, brute_force_n_complement, check_complement,
                                   compl1_dichotomy, exceptional_star_region, has_n_complement,
                                   minimal_complement_index, required_numerator, star_boundary)

coef = st.fractions(min_value=0, max_value=1, max_denominator=30)


@st.composite
def nef_p1(draw, max_points=7):
    pts = draw(st.lists(coef, max_size=max_points))
    assume(sum(pts) <= 2)
    return CurveBoundary.on_p1(pts)


@given(nef_p1(), st.integers(1, 30))
def test_closed_form_matches_brute_force(b, n):
    ok, w = has_n_complement(b, n)
    assert ok == brute_force_n_complement(b, n)
    if ok:
        assert check_complement(b, w)


@given(nef_p1(), st.integers(1, 20), st.data())
def test_monotone_in_the_boundary(b, n, data):
    # lowering any coefficient keeps an existing n-complement
    assume(b.points)
    j = data.draw(st.integers(0, len(b.points) - 1))
    c, d = b.points[j]
    lower = data.draw(st.fractions(min_value=0, max_value=d, max_denominator=30))
    b2 = CurveBoundary(P1, b.points[:j] + ((c, lower),) + b.points[j + 1:])
    if has_n_complement(b, n)[0]:
        assert has_n_complement(b2, n)[0]


@given(nef_p1())
def test_dichotomy(b):
    assert compl1_dichotomy(b).holds


@given(st.lists(st.integers(1, 30), max_size=6))
def test_standard_coefficients_complemented(ms):
    pts = [1 - F(1, m) for m in ms]
    assume(sum(pts) <= 2)
    assert minimal_complement_index(CurveBoundary.on_p1(pts), SMALL_INDICES) is not None


def test_small_examples():
    b = CurveBoundary.on_p1([F(2, 3)] * 3)
    assert minimal_complement_index(b, [1, 2, 3, 4, 6]) == 3
    ok, w = has_n_complement(CurveBoundary.on_p1([F(1, 2)] * 4), 2)
    assert ok and [d for _, d in w.plus] == [F(1, 2)] * 4 and w.fresh == ()
    ok, w = has_n_complement(CurveBoundary.on_p1([]), 1)
    assert ok and sum(d for _, d in w.fresh) == 2
    assert required_numerator(F(1), 5) == 5 and required_numerator(F(1, 2), 5) == 3


def test_failure_certificate():
    ok, why = has_n_complement(CurveBoundary.on_p1([F(2, 3)] * 3), 2)
    assert not ok and why.required == 6 and why.available == 4 and why.component == 0


def test_chains_and_cycles():
    cyc = CurveBoundary(Topology("Cycle", 3))
    assert has_n_complement(cyc, 1)[0]
    with pytest.raises(PreconditionError):  # nodes already use up the degree
        has_n_complement(CurveBoundary(Topology("Cycle", 2), ((0, F(1, 2)),)), 2)
    chain = CurveBoundary(Topology("Chain", 2), ((0, F(1, 2)), (1, F(1, 2)), (1, F(1, 2))))
    ok, w = has_n_complement(chain, 2)
    assert ok and check_complement(chain, w)
    assert not has_n_complement(chain, 1)[0]


def test_elliptic():
    assert has_n_complement(CurveBoundary(ELLIPTIC), 1)[0]
    with pytest.raises(PreconditionError):
        has_n_complement(CurveBoundary(ELLIPTIC, ((0, F(1, 2)),)), 1)


def test_not_nef_refused():
    with pytest.raises(PreconditionError):
        has_n_complement(CurveBoundary.on_p1([F(3, 4)] * 3), 4)


def test_check_complement_rejects_bad_witness():
    b = CurveBoundary.on_p1([F(2, 3)] * 3)
    assert check_complement(b, Complement(3, tuple((0, F(2, 3)) for _ in range(3))))
    assert not check_complement(b, Complement(3, tuple((0, F(1, 3)) for _ in range(3)), ((0, F(1)),)))
    assert not check_complement(b, Complement(4, tuple((0, F(2, 3)) for _ in range(3))))


def test_star_at_the_origin():
    rep = exceptional_star_region((0, 0, 0))
    assert rep.inside and not any(rep.fibred.values())
    assert rep.curve_level[3]  # only the horizontal part rules out n = 3
    ok, w = has_n_complement(star_boundary((0, 0, 0)), 12)
    assert ok and [d for _, d in w.plus] == [F(7, 12), F(2, 3), F(3, 4)]


@given(st.fractions(min_value=0, max_value=F(2, 105), max_denominator=10**4))
def test_twelve_complement_threshold(e1):
    # 3/5 + e1 rounds to 7/12 exactly when 13(3/5 + e1) < 8
    assume(e1 < F(2, 105))
    assert has_n_complement(star_boundary((e1, 0, 0)), 12)[0] == (e1 < F(1, 65))


def test_twelve_complement_counterexample():
    eps = (F(1, 63), 0, 0)
    assert sum(eps) < F(2, 105)
    assert not has_n_complement(star_boundary(eps), 12)[0]
    assert has_n_complement(star_boundary(eps), 10)[0]


@given(st.tuples(*[st.fractions(min_value=0, max_value=F(1, 53), max_denominator=3000)] * 3))
def test_ten_complement_dichotomy(eps):
    assume(sum(eps) < F(2, 105))
    assert has_n_complement(star_boundary(eps), 10)[0] == (STAR_BASE[2] + eps[2] < F(8, 11))


def test_outside_region():
    assert not exceptional_star_region((F(1, 105), F(1, 105), 0))
    with pytest.raises(ValueError):
        exceptional_star_region((0, 0))


@example((F(1, 165), 0, F(1, 77)))
@example((0, F(1, 165), F(1, 77)))
@example((0, 0, F(2, 105)))
@given(st.tuples(*[st.fractions(min_value=0, max_value=F(2, 105), max_denominator=3000)] * 3))
def test_ten_or_else_twelve(eps):
    # on the closed region: a 10-complement, or failing that a 12-complement
    assume(sum(eps) <= F(2, 105))
    b = star_boundary(eps)
    if not has_n_complement(b, 10)[0]:
        ok, w = has_n_complement(b, 12)
        assert ok and [d for _, d in w.plus] == [F(7, 12), F(2, 3), F(3, 4)]
