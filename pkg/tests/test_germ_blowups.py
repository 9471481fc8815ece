from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logdelpezzo.germcalc import (LINE, X, Y, Center, GermPair, InvalidSequenceError, Valuation,
                                  blowup_sequence_discrepancy, blowup_trace, cusp_a, tangent,
                                  toric_discrepancy, valuation_order)
from logdelpezzo.quotsing import SMOOTH, QuotientSingularity

coef = st.fractions(min_value=0, max_value=1, max_denominator=40)
ORIGIN_BOUNDARIES = [[X], [X, Y], [X, Y, LINE], [cusp_a(3)], [tangent(3), Y], [cusp_a(4), LINE]]


@pytest.mark.parametrize("branches", ORIGIN_BOUNDARIES, ids=lambda b: "+".join(x.tag for x in b))
@given(data=st.data())
def test_first_blowup_is_multiplicity_rule(branches, data):
    cs = [data.draw(coef) for _ in branches]
    pair = GermPair(SMOOTH, tuple(zip(branches, cs)))
    step, = blowup_trace(pair, [Center.of([], range(len(branches)))])
    mults = [valuation_order(b, Valuation(1, 1)) for b in branches]
    assert step.valuation == Valuation(1, 1)
    assert step.discrepancy == 1 - sum(c * m for c, m in zip(cs, mults))
    assert step.discrepancy == toric_discrepancy(pair, Valuation(1, 1))


@given(coef)
def test_cusp_resolution(c):
    pair = GermPair(SMOOTH, ((cusp_a(3), c),))
    seq = [Center.of([], [0]), Center.of([0], [0]), Center.of([0, 1], [0])]
    steps = blowup_trace(pair, seq)
    assert [s.valuation for s in steps] == [Valuation(1, 1), Valuation(2, 1), Valuation(3, 2)]
    assert [s.discrepancy for s in steps] == [1 - 2 * c, 2 - 3 * c, 4 - 6 * c]


@given(st.integers(2, 8), coef, coef)
def test_z_n_11_tangent_formula(n, alpha, b1):
    pair = GermPair(QuotientSingularity(n, 1), ((X, alpha), (tangent(n + 1), b1)))
    got = blowup_sequence_discrepancy(pair, [Center.of([0], [0, 1])])
    assert got == -alpha * (1 + F(1, n)) - b1 * (1 + F(1, n)) + F(2, n)


def test_bad_centres():
    pair = GermPair(SMOOTH, ((X, F(1, 2)), (Y, F(1, 2))))
    with pytest.raises(InvalidSequenceError):
        blowup_trace(pair, [Center.of([0], [])])  # no exceptional curve yet
    with pytest.raises(InvalidSequenceError):
        blowup_trace(pair, [Center.of([], [0])])  # x = 0 alone passes through no torus point
    steps = blowup_trace(pair, [Center.of([], [0, 1]), Center.of([0], [0])])
    assert steps[-1].valuation == Valuation(2, 1)  # the ray of x sits at (1, 0)
    with pytest.raises(InvalidSequenceError):
        blowup_sequence_discrepancy(pair, [])


def test_unsupported_singularity():
    with pytest.raises(InvalidSequenceError):
        blowup_trace(GermPair(QuotientSingularity(5, 2)), [Center.of([0], [])])


def test_centre_json():
    assert Center.from_json({"exceptional": [0], "branches": [0, 1]}) == Center.of([0], [0, 1])
