from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logdelpezzo.coeffsets import (PHI_M, PHI_SM, CoeffSetId, PreconditionError, contains,
                                   in_intervals, is_standard, p_n, phi_i, phi_window,
                                   pn_intervals, round_boundary, z_over_n)

unit = st.fractions(min_value=0, max_value=1, max_denominator=500)


@given(unit, st.integers(1, 60))
def test_pn_predicate_is_union_of_intervals(d, n):
    assert contains(p_n(n), d) == in_intervals(pn_intervals(n), d)


@given(unit, st.integers(1, 60))
def test_pn_by_brute_force(d, n):
    # floor((n+1)d) >= n d  iff  some k has k/(n+1) <= d <= k/n
    assert contains(p_n(n), d) == any(F(k, n + 1) <= d <= F(k, n) for k in range(n + 1))


@given(st.integers(1, 200), st.integers(1, 100))
def test_standard_coefficients_in_every_pn(m, n):
    assert contains(p_n(n), 1 - F(1, m))
    assert contains(p_n(n), 1)


@given(unit)
def test_is_standard_matches_definition(d):
    assert is_standard(d) == (d == 1 or (d < 1 and (1 - d).numerator == 1))


def test_phi_windows():
    assert phi_window(2) == (F(1, 2), F(2, 3))
    cs = phi_i(3)
    assert contains(cs, F(2, 3)) and contains(cs, F(7, 10))
    assert not contains(cs, F(3, 4))  # at the right end of the window
    assert contains(cs, F(1, 2))  # standard, below the window
    assert not contains(cs, F(3, 5))
    assert contains(PHI_M, F(13, 14)) and contains(PHI_M, F(6, 7))
    assert not contains(PHI_M, F(5, 7))
    assert contains(PHI_SM, 0) and not contains(PHI_SM, F(2, 5))


def test_z_over_n():
    assert contains(z_over_n(12), F(7, 12))
    assert not contains(z_over_n(12), F(1, 5))
    with pytest.raises(PreconditionError):
        contains(z_over_n(12), 0)


def test_round_boundary():
    assert round_boundary([F(3, 5), F(2, 3), F(5, 7)], 12) == [F(7, 12), F(2, 3), F(3, 4)]
    assert round_boundary([1], 4) == [F(5, 4)]


@given(st.lists(unit, min_size=1, max_size=5), st.integers(1, 30))
def test_round_boundary_membership(ds, n):
    # rounding lands in Z/n and, for d < 1, dominates d exactly on P_n
    for d, r in zip(ds, round_boundary(ds, n)):
        assert (n * r).denominator == 1
        if d < 1:
            assert (r >= d) == contains(p_n(n), d)


@pytest.mark.parametrize("bad", [("Pn", 0), ("PhiI", 1), ("Nope", None)])
def test_bad_sets(bad):
    with pytest.raises(ValueError):
        CoeffSetId(*bad)


def test_out_of_range():
    with pytest.raises(PreconditionError):
        contains(p_n(3), F(5, 4))
    with pytest.raises(PreconditionError):
        round_boundary([F(-1, 2)], 3)
