from fractions import Fraction as F
from itertools import combinations

import pytest

from logdelpezzo.coeffsets import contains, phi_i
from logdelpezzo.germcalc import (LINE, NODE, X, Y, ClassificationGapError, DegeneratePairError,
                                  GermPair, classify_phi_i, classify_two2, cusp_a, cusp_b, tangent)
from logdelpezzo.quotsing import SMOOTH, QuotientSingularity

Q = QuotientSingularity


def test_strict_shapes():
    assert classify_two2(GermPair(Q(3, 2), ((NODE, F(1, 3)),))).case == "a"
    assert classify_two2(GermPair(Q(4, 3), ((cusp_a(2), F(2, 3)),))).case == "b"
    r = classify_two2(GermPair(Q(2, 1), ((cusp_a(4), F(1, 2)),)))
    assert (r.case, r.min_discrepancy) == ("c", F(-1, 2))
    assert classify_two2(GermPair(Q(2, 1), ((X, F(1, 2)), (tangent(3), F(1, 2))))).case == "d"


def test_strict_shape_needs_matching_minimum():
    # shape (c) requires alpha <= 2/3
    assert classify_two2(GermPair(Q(2, 1), ((cusp_a(4), F(3, 4)),))).case == "none"
    assert classify_two2(GermPair(SMOOTH, ((X, F(1, 2)),))).case == "none"
    # unequal coefficients on the two axes
    assert classify_two2(GermPair(Q(3, 2), ((X, F(1, 2)), (Y, F(1, 3))))).case == "none"


def test_phi_examples():
    assert classify_phi_i(GermPair(SMOOTH, ((cusp_a(2), F(5, 6)),)), 6).case == "case3"
    assert classify_phi_i(GermPair(SMOOTH, ((cusp_a(3), F(5, 6)),)), 6).case == "not_phi_i"
    assert classify_phi_i(GermPair(SMOOTH, ((X, F(1, 2)),)), 2).case == "case4"
    r = classify_phi_i(GermPair(SMOOTH, ((X, F(1, 2)), (tangent(3), F(3, 5))), ), 2)
    assert r.case == "case2"
    assert classify_phi_i(GermPair(Q(3, 1), ((X, F(2, 3)),)), 3).case == "case4"


def test_phi_input_validation():
    with pytest.raises(ValueError):
        classify_phi_i(GermPair(SMOOTH, ((X, F(1, 2)),)), 7)
    with pytest.raises(ValueError):  # 3/4 is not in Phi_2
        classify_phi_i(GermPair(SMOOTH, ((X, F(3, 4)),)), 2)
    with pytest.raises(ValueError):  # nothing at least 1/2
        classify_phi_i(GermPair(SMOOTH, ((X, F(1, 3)),)), 3)
    with pytest.raises(DegeneratePairError):
        classify_phi_i(GermPair(SMOOTH, ((LINE, F(1, 2)), (cusp_b(3), F(1, 2)))), 2)


MENU = [X, Y, LINE, NODE, tangent(2), tangent(3), cusp_a(2), cusp_a(3), cusp_a(4), cusp_a(5)]
SINGS = [SMOOTH, Q(2, 1), Q(3, 1), Q(3, 2), Q(4, 1), Q(5, 2)]


def _pair(s, entries):
    try:
        return GermPair(s, entries)
    except ValueError:  # a branch not invariant under the group
        return None


def _grid(i):
    cs = phi_i(i)
    vals = sorted({c for c in [F(m - 1, m) for m in range(2, 8)] + [F(i - 1, i), F(2 * i - 1, 2 * i + 1)]
                   if 0 < c < 1 and contains(cs, c)})
    big = [c for c in vals if c >= F(i - 1, i)]
    for s in SINGS:
        for b in MENU:
            for c in big:
                yield _pair(s, ((b, c),))
        for b1, b2 in combinations(MENU, 2):
            for c1 in big:
                for c2 in vals:
                    yield _pair(s, ((b1, c1), (b2, c2)))


@pytest.mark.parametrize("i", [2, 3, 4, 5, 6])
def test_no_gaps_in_case_list(i):
    """Every 1/i-lt pair on a small grid lands in some case."""
    cases = {}
    for pair in filter(None, _grid(i)):
        try:
            r = classify_phi_i(pair, i)
        except DegeneratePairError:
            continue
        except ClassificationGapError as e:
            pytest.fail(str(e))
        cases[r.case] = cases.get(r.case, 0) + 1
    assert cases.get("case4", 0) > 0 and cases.get("not_phi_i", 0) > 0
