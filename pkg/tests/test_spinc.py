"""Spin^c partitions, Chern classes and the extension table."""

from collections import Counter

import pytest
from hypothesis import given

from solcob import spinc
from solcob.dinv import d_dihedral, d_sol_profile
from solcob.errors import ParityError

import properties
from strategies import ab_pairs

REPS = {(0, 0): (2, 2), (0, 1): (2, 3), (1, 1): (1, 1)}

# transcribed rows of the printed tables
PRINTED_CHERN = {
    (0, 0): {"S_ba": (0, 0), "S_b": (2, 0), "S_a": (0, 2), "S_empty": (2, 2)},
    (0, 1): {"S_ba": (2, 2), "S_b": (2, 0), "S_a": (0, 0), "S_empty": (0, 2)},
    (1, 1): {"S_ba": (0, 0, 2), "S_b": (0, 0, 0), "S_a": (0, 0, 0), "S_empty": (0, 0, 2)},
}
PRINTED_EXTENSION = {
    (0, 0): {"c1_u_b": (0, 0), "c1_u_a": (0, 0),
             "image_b": {(0, 0), (2, 0)}, "image_a": {(0, 0), (0, 2)}, "c1_theta": (0, 0)},
    (0, 1): {"c1_u_b": (2,), "c1_u_a": (0, 0),
             "image_b": {(2, 2), (0, 2)}, "image_a": {(0, 0), (2, 2)}, "c1_theta": (2, 2)},
    (1, 1): {"c1_u_b": (2,), "c1_u_a": (2,),
             "image_b": {(0, 0, 2), (0, 1, 2)}, "image_a": {(0, 1, 0), (0, 0, 2)},
             "c1_theta": (0, 0, 2)},
}
PRINTED_SELF_CONJUGATE = {(0, 0): {"S_ba"}, (0, 1): {"S_a"}, (1, 1): {"S_b", "S_a"}}


@pytest.mark.parametrize("case", sorted(REPS))
def test_partition_sizes(case):
    part = spinc.partition(*REPS[case])
    assert [len(part.classes[k]) for k in spinc.CLASS_LABELS] == [4, 4, 4, 4]
    union = set().union(*part.classes.values())
    assert len(union) == 16
    assert part.theta in part.classes["S_ba"]


@pytest.mark.parametrize("case", sorted(REPS))
def test_doubled_differences_are_singletons(case):
    part = spinc.partition(*REPS[case])
    assert all(len(part.doubled(k)) == 1 for k in spinc.CLASS_LABELS)


def test_even_partition_intersection():
    part = spinc.partition(2, 2)
    assert part.classes["S_ba"] == {(0, 0), (0, 2), (2, 0), (2, 2)}


@pytest.mark.parametrize("case", sorted(REPS))
def test_chern_table(case):
    assert spinc.chern_classes(*REPS[case]).values == PRINTED_CHERN[case]


@pytest.mark.parametrize("case", sorted(REPS))
def test_extension_table(case):
    data = spinc.extension_data(*REPS[case])
    row = PRINTED_EXTENSION[case]
    assert data.c1_u_b == row["c1_u_b"] and data.c1_u_a == row["c1_u_a"]
    assert data.image_b == row["image_b"] and data.image_a == row["image_a"]
    assert data.c1_theta == row["c1_theta"]
    assert spinc.compare_extension_row(data) == []


def test_extension_preimages_odd_case():
    data = spinc.extension_data(1, 1)
    assert data.preimage_b == {(0, 2), (1, 2)}
    assert data.preimage_a == {(1, 0), (0, 2)}


@pytest.mark.parametrize("case", sorted(REPS))
def test_self_conjugate_classes(case):
    assert spinc.self_conjugate_classes(*REPS[case]) == PRINTED_SELF_CONJUGATE[case]


@pytest.mark.parametrize("ab", [(4, -6), (-2, 8), (4, 5), (-6, -3), (3, 7), (-5, 1)])
def test_tables_hold_across_parity_case(ab):
    case = (ab[0] % 2, ab[1] % 2)
    assert spinc.chern_classes(*ab).values == PRINTED_CHERN[case]
    assert spinc.compare_extension_row(spinc.extension_data(*ab)) == []


@pytest.mark.parametrize("ab", [(2, 2), (2, 3), (1, 1), (6, -4), (-3, 9), (8, 1)])
def test_model_reproduces_closed_form_blocks(ab):
    profile = d_sol_profile(*ab)
    assert spinc.model_d_blocks(spinc.partition(*ab)) == {(profile.S_ba, profile.S_b, profile.S_a)}


@pytest.mark.parametrize("n", [-7, -2, 0, 3, 4, 9])
def test_dihedral_models_carry_the_dihedral_values(n):
    for model in spinc.dihedral_models(n):
        assert tuple(sorted(model.d_values.values())) == d_dihedral(n)


def test_odd_dihedral_model_pairs_zeros_off_the_self_conjugate_points():
    # for odd n the two non-self-conjugate structures carry d = 0
    for model in spinc.dihedral_models(5):
        zeros = [x for x, v in model.d_values.items() if v == 0]
        c1 = [(model.c1_base[0] + 2 * x[0]) % 4 for x in zeros]
        assert all(v == 2 for v in c1)
        assert Counter(model.d_values.values())[0] == 2


def test_excluded_parity():
    with pytest.raises(ParityError):
        spinc.partition(1, 2)


@given(ab_pairs)
def test_conjugation_preserves_classes(ab):
    properties.check_conjugation_classes(*ab)


@given(ab_pairs)
def test_torsor_axioms(ab):
    properties.check_torsor(*ab)
