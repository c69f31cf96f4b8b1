"""d-invariants, and the Lescop and Casson-Walker invariants."""

from collections import Counter
from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from solcob.dinv import (
    casson_walker,
    d_dihedral,
    d_sol_profile,
    d_sum_check,
    lescop,
    rational_str,
)
from solcob.errors import ParityError
from solcob.manifolds import DihedralManifold, SolManifold, h1_dihedral, h1_sol

import properties
from strategies import ab_pairs, same_parity_pairs


def multiset(*xs):
    return tuple(sorted(Q(x) for x in xs))


@pytest.mark.parametrize("n, expected", [
    (4, multiset(0, 0, Q(3, 2), Q(1, 2))),
    (0, multiset(0, 0, Q(1, 2), Q(-1, 2))),
    (2, multiset(0, 0, 1, 0)),
])
def test_d_dihedral(n, expected):
    assert d_dihedral(n) == expected


def test_profile_even_even():
    p = d_sol_profile(2, 2)
    assert p.S_ba == multiset(0, 0, 0, 0)
    assert p.S_b == multiset(0, 0, -1, -1)
    assert p.S_a == multiset(1, 1, 0, 0)
    assert p.q_sum == 0


def test_profile_mixed():
    p = d_sol_profile(2, 3)
    assert p.S_b == multiset(Q(-1, 4), Q(-1, 4), Q(-5, 4), Q(-5, 4))
    assert p.S_a == multiset(1, 1, 0, 0)
    assert p.q_sum == -1


def test_profile_odd_odd():
    p = d_sol_profile(1, 3)
    assert p.S_b == multiset(Q(-1, 4), Q(-1, 4), Q(-5, 4), Q(-5, 4))
    assert p.S_a == multiset(Q(3, 4), Q(3, 4), Q(-1, 4), Q(-1, 4))
    assert p.q_sum == -2


def test_profile_json_uses_rational_strings():
    data = d_sol_profile(2, 3).to_dict()
    assert data["q_sum"] == "-1" and data["total"] == "-2"
    assert "-5/4" in data["S_b"]
    assert rational_str(Q(6, 8)) == "3/4"


def test_excluded_parity():
    with pytest.raises(ParityError):
        d_sol_profile(1, 2)


def test_lescop_and_casson_walker():
    D8 = DihedralManifold.d(8)
    assert lescop(D8) == -2
    assert casson_walker(D8) == Q(-1, 2)
    assert lescop(DihedralManifold.d(0)) == 0 and casson_walker(DihedralManifold.d(0)) == 0
    M = SolManifold.m(2, 5)
    assert lescop(M) == 3
    assert casson_walker(M) == Q(3, 16)


def test_lescop_needs_c1():
    with pytest.raises(ValueError):
        lescop(SolManifold(1, 2, 3, 1))


def test_d_sum_examples():
    assert d_sum_check(2, 2).passed and d_sum_check(2, 2).total_sum == 0
    assert d_sum_check(2, 4).passed and d_sum_check(2, 4).total_sum == -4
    r = d_sum_check(0, 1)
    assert r.passed and r.degenerate


@given(st.integers(-100, 100))
def test_d_dihedral_values(n):
    values = d_dihedral(n)
    assert Counter(values)[0] >= 2
    assert all((4 * v).denominator == 1 for v in values)
    nonzero = [Q(n + 2, 4), Q(n - 2, 4)]
    assert (0 in nonzero) == (abs(n) == 2)


@given(ab_pairs)
def test_lescop_splice_additivity(ab):
    # the splice of D_a and D_{-b} adds 4 lambda_L of each end
    a, b = ab
    ends = 4 * lescop(DihedralManifold.d(a)) + 4 * lescop(DihedralManifold.d(-b))
    assert lescop(SolManifold.m(a, b)) == ends


@given(ab_pairs)
def test_lescop_matches_h1_order(ab):
    M = SolManifold.m(*ab)
    assert casson_walker(M) * h1_sol(M).order == lescop(M)


@given(st.integers(-60, 60).filter(lambda n: n % 2))
def test_dihedral_h1_order(n):
    D = DihedralManifold.d(n)
    assert casson_walker(D) * h1_dihedral(D).order == lescop(D)


@given(ab_pairs)
def test_d_sum_identity(ab):
    assert d_sum_check(*ab).passed


@given(ab_pairs)
def test_conjugation_multisets(ab):
    properties.check_conjugation_multisets(*ab)


@given(same_parity_pairs)
def test_profile_orbit_invariance(ab):
    properties.check_profile_orbit(*ab)
