from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logdelpezzo.germcalc import (LINE, NODE, TAC, X, Y, DegeneratePairError, GermPair,
                                  UncertifiedSearchError, Valuation, check_nondegenerate, cusp_a,
                                  cusp_b, delta_count, divisors_below, growth, is_primitive,
                                  min_discrepancy_search, tangent, toric_discrepancy)
from logdelpezzo.quotsing import SMOOTH, QuotientSingularity, discrepancies, iter_cyclic

below_one = st.fractions(min_value=0, max_value=F(49, 50), max_denominator=50)


@given(below_one, below_one)
def test_snc_pair_closed_form(a, b):
    # a x + b y at a smooth point: min over (p, q) of p(1-a) + q(1-b) - 1 is at (1, 1)
    r = min_discrepancy_search(GermPair(SMOOTH, ((X, a), (Y, b))))
    assert r.certified
    assert r.min_found == 1 - a - b
    assert r.witness == Valuation(1, 1)


@given(st.integers(2, 12))
def test_empty_boundary_recovers_chain(n):
    for s in iter_cyclic(n, n_min=n):
        ch = discrepancies(s)
        r = min_discrepancy_search(GermPair(s))
        assert r.certified and r.min_found == ch.min_discrepancy


def test_cusp_lct():
    # the cusp x^2 + y^3 has log canonical threshold 5/6
    assert min_discrepancy_search(GermPair(SMOOTH, ((cusp_a(3), F(5, 6)),))).min_found == -1
    # at 1/2 the blow-up of the point wins: 2 - 1 - 2/2
    r = min_discrepancy_search(GermPair(SMOOTH, ((cusp_a(3), F(1, 2)),)))
    assert r.certified and r.min_found == 0 and r.witness == Valuation(1, 1)


@given(st.fractions(min_value=0, max_value=1, max_denominator=30),
       st.integers(1, 8), st.integers(1, 8))
def test_growth_bounds_every_divisor(c, p, q):
    br = [cusp_a(5), LINE]
    cs = [c, c / 2]
    g = growth(br, cs)
    v = Valuation(p, q)
    pair = GermPair(SMOOTH, tuple(zip(br, cs)))
    assert toric_discrepancy(pair, v) >= v.height * (1 - g) - 1


def test_primitive_points():
    s = QuotientSingularity(5, 2)
    assert is_primitive(s, Valuation(F(2, 5), F(1, 5)))
    assert not is_primitive(s, Valuation(F(4, 5), F(2, 5)))
    assert not is_primitive(s, Valuation(F(1, 5), F(1, 5)))  # not in the lattice
    assert is_primitive(SMOOTH, Valuation(2, 3)) and not is_primitive(SMOOTH, Valuation(2, 4))


def test_divisors_below_complete():
    pair = GermPair(SMOOTH, ((X, F(1, 2)), (Y, F(1, 2))))
    found, complete = divisors_below(pair, F(0))
    assert complete
    assert [v for v, _ in found] == [Valuation(1, 1)]


def test_delta_count():
    r = delta_count(GermPair(SMOOTH, ((X, F(6, 7)), (Y, F(6, 7)))))
    assert r.certified and r.count == 2 and r.witnesses == ()
    r = delta_count(GermPair(SMOOTH, ((X, F(13, 14)), (Y, F(13, 14)))))
    assert r.witnesses == (Valuation(1, 1),) and r.count == 3


def test_delta_uncertified_with_reduced_boundary():
    with pytest.raises(UncertifiedSearchError):
        delta_count(GermPair(SMOOTH, ((X, 1), (Y, F(6, 7)))))


def test_degenerate_boundaries_refused():
    with pytest.raises(DegeneratePairError):
        check_nondegenerate([LINE, cusp_b(3)])
    with pytest.raises(DegeneratePairError):
        check_nondegenerate([cusp_a(3), TAC])
    check_nondegenerate([X, Y, LINE])
    check_nondegenerate([NODE, cusp_a(4)])


def test_non_invariant_branch_refused():
    with pytest.raises(ValueError):
        GermPair(QuotientSingularity(3, 1), ((tangent(2), F(1, 2)),))


def test_json_roundtrip():
    pair = GermPair(QuotientSingularity(2, 1), ((tangent(3), F(1, 2)), (X, F(1, 3))))
    assert GermPair.from_json(pair.to_json()) == pair
