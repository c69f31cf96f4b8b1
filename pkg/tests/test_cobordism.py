"""Rational homology cobordisms: homology, inclusion maps and H^2 diagrams."""

import pytest

from solcob import cobordism
from solcob.abelian import FinAbGroup, cokernel, elements
from solcob.cobordism import (
    PIECE_N,
    PIECE_V,
    PIECE_X,
    CobordismSide,
    check_printed_factorization,
    check_table_row,
    cobordism_h1,
    h2_diagram,
    h2_matches_computed,
    rational_ball_chain,
    regenerate_h2_diagram,
    sample_parameters,
)
from solcob.errors import DeterminantError, ParityError
from solcob.manifolds import SolManifold, h1_sol

CASES = [(0, 0), (0, 1), (1, 1)]


def test_piece_homology():
    assert cokernel(PIECE_N.relations) == FinAbGroup(1, (2,))
    assert cokernel(PIECE_V.relations) == FinAbGroup(1, ())
    assert cokernel(PIECE_X.relations) == FinAbGroup(1, ())


def test_cobordism_h1_b_odd():
    for c in (1, 3):
        (S,) = sample_parameters((0, 1, 1, 1), c)
        result = cobordism_h1(S, CobordismSide.W_MINUS_B)
        assert result.group == FinAbGroup.from_orders([2, 4 * c])


def test_cobordism_h1_b_even_form():
    for c in (1, 3):
        (S,) = sample_parameters((1, 1, 1, 0), c)
        result = cobordism_h1(S, CobordismSide.W_MINUS_B)
        assert result.group == FinAbGroup.from_orders([4, 2 * c])


def test_cobordism_h1_maps_have_right_ends():
    S = SolManifold.m(2, 3)
    result = cobordism_h1(S, CobordismSide.W_A)
    assert result.from_sol.source_group == h1_sol(S)
    assert result.from_sol.target_group == result.group
    assert result.group.order == 8


def test_cobordism_needs_valid_matrix():
    with pytest.raises(DeterminantError):
        cobordism_h1(SolManifold(1, 1, 1, 1), CobordismSide.W_A)


@pytest.mark.parametrize("parity", sorted(cobordism.MAPS_H1_TABLE))
def test_table_rows_match(parity):
    for c in ((1, 3) if parity[2] else (2, 4)):
        for S in sample_parameters(parity, c):
            row = check_table_row(S)
            assert row.matched, (S, row.certificate())
            assert row.joint is not None


def test_h2_diagram_printed_examples():
    even = h2_diagram(0, 0)
    assert even.groups["W_minus_b"] == (4, 2) and even.groups["M"] == (4, 4)
    assert even.maps["iota_W_minus_b"].matrix.tolist() == [[1, 0], [0, 2]]
    assert even.maps["iota_D_minus_b"].matrix.tolist() == [[1, 0], [0, 1]]
    mixed = h2_diagram(0, 1)
    assert mixed.maps["iota_D_minus_b"].matrix.tolist() == [[0, 1]]
    assert mixed.groups["D_minus_b"] == (4,)


@pytest.mark.parametrize("case", CASES)
def test_h2_diagram_orders_and_images(case):
    diagram = h2_diagram(*case)
    orders = {k: FinAbGroup.from_orders(v).order for k, v in diagram.groups.items()}
    assert orders == {"M": 16, "W_minus_b": 8, "W_a": 8, "D_minus_b": 4, "D_a": 4}
    img_b, img_a = diagram.image("iota_W_minus_b"), diagram.image("iota_W_a")
    assert (len(img_b), len(img_a), len(img_b & img_a)) == (8, 8, 4)


def test_even_case_images():
    diagram = h2_diagram(0, 0)
    M = elements((4, 4))
    assert diagram.image("iota_W_minus_b") == {(x, y) for x, y in M if y % 2 == 0}
    assert diagram.image("iota_W_a") == {(x, y) for x, y in M if x % 2 == 0}


@pytest.mark.parametrize("case", CASES)
def test_h2_diagram_is_ext_dual_of_table(case):
    assert regenerate_h2_diagram(*case).maps == h2_diagram(*case).maps


@pytest.mark.parametrize("ab", [(2, 2), (4, -2), (2, 3), (-4, 5), (1, 1), (3, -5)])
def test_h2_diagram_matches_own_computation(ab):
    assert h2_matches_computed(*ab) is not None


def test_excluded_parity():
    with pytest.raises(ParityError):
        h2_diagram(1, 0)


def test_tampered_h2_table_is_detected(monkeypatch):
    table = {k: {"groups": dict(v["groups"]), "maps": dict(v["maps"])}
             for k, v in cobordism.H2_DIAGRAM_TABLE.items()}
    table[(0, 1)]["maps"]["iota_W_a"] = [[2, 0], [0, 1]]
    monkeypatch.setattr(cobordism, "H2_DIAGRAM_TABLE", table)
    with pytest.raises(ArithmeticError):
        h2_diagram(0, 1)


@pytest.mark.parametrize("params", [(1, 2, 1, 3), (3, 4, 1, 13), (1, 2, 3, 1), (-1, 4, 1, -3)])
def test_printed_factorization(params):
    assert check_printed_factorization(SolManifold(*params)).passed


def test_printed_factorization_needs_even_b():
    with pytest.raises(ValueError):
        check_printed_factorization(SolManifold(1, 1, 1, 2))


def test_rational_ball_for_order_16():
    report = rational_ball_chain(SolManifold.m(2, 3))
    assert report.bounds_rational_ball
    assert "bounds a rational homology ball" in report.statement


def test_rational_cobordism_to_lens_space():
    report = rational_ball_chain(SolManifold(1, 2, 3, 1))
    assert report.lens_order == 3
    assert not report.bounds_rational_ball


def test_rational_ball_degenerate_flag():
    report = rational_ball_chain(SolManifold.m(0, 3))
    assert report.degenerate and report.lens_order == 1
