"""Signatures, verdicts and the census."""

import csv
import io
from fractions import Fraction as Q

import pytest
from hypothesis import given

from solcob.classify import (
    Result,
    WITNESS_ORDER,
    blocks_match,
    census,
    cobordant,
    homeomorphic,
    signature,
)

import properties
from strategies import ab_pairs


def test_signature_mixed_parity():
    s = signature(2, 3)
    assert s.total_sum == -2
    assert s.self_conjugate_d == (0, 0, 1, 1)


def test_signature_odd_odd_uses_both_blocks():
    s = signature(1, 3)
    assert len(s.self_conjugate_d) == 8


def test_signature_even_even():
    s = signature(2, 2)
    assert s.self_conjugate_d == (0, 0, 0, 0)
    assert len(s.blocked_d) == 3


def test_homeomorphic():
    assert homeomorphic(3, 5, -5, -3)
    assert homeomorphic(4, 7, 4, 7)
    assert not homeomorphic(2, 4, 4, 2)


def test_verdict_examples():
    v = cobordant(2, 4, 4, 2)
    assert v.result is Result.DISTINGUISHED and v.witness == "total_sum"
    assert str(v) == "DISTINGUISHED by total_sum"
    assert cobordant(3, 5, -5, -3).result is Result.HOMEOMORPHIC
    v = cobordant(2, 2, 6, 6)
    assert (v.result, v.witness) == (Result.DISTINGUISHED, "block_matching")


def test_block_matching_for_even_pair():
    s, t = signature(2, 2), signature(6, 6)
    assert s.total_sum == t.total_sum == 0
    assert s.self_conjugate_d == t.self_conjugate_d
    assert not blocks_match(s.blocked_d, t.blocked_d)
    known = sorted(tuple(b.values) for b in t.blocked_d if b.known)
    assert known == [(Q(-2), Q(-2), Q(-1), Q(-1)), (Q(1), Q(1), Q(2), Q(2))]


def test_census_small():
    report = census(1)
    assert len(report.classes) == 6
    assert report.ok


def test_census_ten():
    report = census(10)
    assert len(report.parameters) == 441
    assert report.pairs == 441 * 440 // 2
    assert report.ok and not report.failures


def test_census_csv_is_square():
    report = census(2)
    rows = list(csv.reader(io.StringIO(report.to_csv())))
    n = len(report.parameters)
    assert len(rows) == n + 1 and all(len(r) == n + 1 for r in rows)
    assert {cell for r in rows[1:] for cell in r[1:]} <= {"=", *WITNESS_ORDER}


def test_census_parallel_agrees():
    assert census(3, workers=2).to_dict() == census(3).to_dict()


@given(ab_pairs)
def test_signature_orbit_invariance(ab):
    properties.check_signature_orbit(*ab)


@given(ab_pairs, ab_pairs)
def test_witness_validity(x, y):
    v = cobordant(*x, *y)
    assert (v.result is Result.HOMEOMORPHIC) == homeomorphic(*x, *y)
    assert v.result is not Result.UNRESOLVED
    if v.result is Result.DISTINGUISHED:
        s, t = signature(*x), signature(*y)
        if v.witness == "block_matching":
            assert not blocks_match(s.blocked_d, t.blocked_d)
        else:
            assert s.invariant(v.witness) != t.invariant(v.witness)


@given(ab_pairs, ab_pairs)
def test_parity_patterns(x, y):
    # a = a', b = b' mod 2, or a = b', a' = b mod 2, whenever the pair survives the sum test
    v = cobordant(*x, *y)
    if v.result is Result.DISTINGUISHED and WITNESS_ORDER.index(v.witness) > WITNESS_ORDER.index("parity"):
        a, b = x
        a2, b2 = y
        assert ((a - a2) % 2 == 0 and (b - b2) % 2 == 0) or ((a - b2) % 2 == 0 and (a2 - b) % 2 == 0)
