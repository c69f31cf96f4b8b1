"""Dihedral and Sol manifolds: first homology, normal forms and plumbing graphs."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from solcob.abelian import FinAbGroup, cokernel
from solcob.errors import DegenerateError, DeterminantError, ZeroFiberError
from solcob.manifolds import (
    DihedralManifold,
    SolManifold,
    dihedral_presentation,
    euler_number,
    h1_dihedral,
    h1_sol,
    normalize,
    orbit_key,
    splice_presentation,
)

import oracles
import properties
from strategies import gluings


@pytest.mark.parametrize("b, c, torsion", [(2, 1, (2, 2)), (3, 1, (4,)), (4, 3, (2, 6))])
def test_h1_dihedral(b, c, torsion):
    assert h1_dihedral(DihedralManifold(b, c)) == FinAbGroup(0, torsion)


@pytest.mark.parametrize("params, torsion", [((1, 1, 1, 2), (2, 2, 4)), ((2, 2, 1, 5), (4, 4))])
def test_h1_sol(params, torsion):
    assert h1_sol(SolManifold(*params)) == FinAbGroup(0, torsion)


def test_d0_is_rp3_sum():
    assert h1_dihedral(DihedralManifold.d(0)) == FinAbGroup(0, (2, 2))


def test_invalid_parameters():
    with pytest.raises(DeterminantError):
        SolManifold(1, 1, 1, 1)
    with pytest.raises(ValueError):
        DihedralManifold(4, 2)
    with pytest.raises(ValueError):
        DihedralManifold(3, 0)


def test_euler_number():
    assert euler_number(DihedralManifold(4, 1)) == Fraction(1, 4)
    assert euler_number(DihedralManifold(1, 1)) == 1
    assert euler_number(DihedralManifold(6, 5)) == Fraction(5, 6)
    with pytest.raises(ZeroFiberError):
        euler_number(DihedralManifold(0, 1))


def test_normalize_orbit_pair():
    assert normalize(SolManifold.m(3, 5)) == normalize(SolManifold.m(-5, -3))
    assert orbit_key(3, 5) == orbit_key(-5, -3) == (-5, -3)


def test_normalize_negative_c():
    S = SolManifold(2, 3, -1, -7)
    N = normalize(S)
    assert N == SolManifold(-2, -3, 1, 7)
    assert h1_sol(N) == h1_sol(S)


def test_degenerate_flag():
    assert SolManifold.m(0, 3).degenerate
    assert SolManifold.m(-1, 1).degenerate
    assert not SolManifold.m(2, 2).degenerate


def test_plumbing_for_small_gluing():
    graph = splice_presentation(SolManifold(1, 2, 1, 3))
    assert graph.weights[:3] == (0, 2, -2) and graph.weights[-3:] == (0, 2, -2)
    assert graph.chain.identity_holds
    # each junction has three neighbours
    junctions = [i for i, lab in enumerate(graph.labels) if lab == "junction"]
    assert [len(graph.neighbours(v)) for v in junctions] == [3, 3]
    assert graph.to_dot().startswith("graph plumbing {")


def test_plumbing_c1_is_honest_splice():
    graph = splice_presentation(SolManifold.m(2, 3))
    assert graph.chain.tail == ()
    assert len(graph.central_weights) == 2


def test_plumbing_degenerate():
    with pytest.raises(DegenerateError):
        splice_presentation(SolManifold(0, 5, 1, 1))


@given(st.integers(-50, 50), st.integers(1, 20))
def test_h1_dihedral_matches_minors(b, c):
    from math import gcd
    if gcd(b, c) != 1:
        return
    D = DihedralManifold(b, c)
    torsion, free = oracles.cokernel_orders(dihedral_presentation(D).tolist())
    assert free == 0
    assert h1_dihedral(D) == FinAbGroup(0, tuple(torsion))


@given(gluings())
def test_h1_sol_order(params):
    a, b, c, d = params
    assert h1_sol(SolManifold(a, b, c, d)).order == 16 * c


@given(gluings())
def test_normalize_properties(params):
    properties.check_normalize(*params)
