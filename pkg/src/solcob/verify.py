"""
Reproduction suite: recompute every published table and closed form and
compare.  Stored constants are looked up when each check runs, so a tampered
constant shows up as a named failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator

from . import cobordism, spinc
from .contfrac import splice_chain
from .dinv import d_sol_profile, d_sum_check
from .errors import SolcobError
from .manifolds import (
    DihedralManifold,
    SolManifold,
    dihedral_presentation,
    h1_dihedral_closed_form,
    h1_sol_closed_form,
    sol_presentation,
)
from .abelian import cokernel

SWEEP_BOUND = 50
DIHEDRAL_C_BOUND = 20
SPLICE_SAMPLES = 1000
SPLICE_SEED = 20240229


@dataclass(frozen=True)
class ItemResult:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def sol_matrices(bound: int = SWEEP_BOUND) -> Iterator[SolManifold]:
    """Every [[a, c], [d, b]] with ab - cd = -1 and all entries in [-bound, bound]."""
    r = range(-bound, bound + 1)
    for a in r:
        for b in r:
            n = a * b + 1
            if n == 0:
                for d in r:
                    yield SolManifold(a, b, 0, d)
                continue
            for c in r:
                if c and n % c == 0 and abs(n // c) <= bound:
                    yield SolManifold(a, b, c, n // c)


def splice_samples(count: int = SPLICE_SAMPLES, bound: int = SWEEP_BOUND,
                   seed: int = SPLICE_SEED) -> list[SolManifold]:
    """Random nondegenerate gluing matrices with c >= 1 and entries in [-bound, bound]."""
    pool = [S for S in sol_matrices(bound) if S.c >= 1 and not S.degenerate]
    return random.Random(seed).sample(pool, count)


def check_dihedral_h1() -> ItemResult:
    count, bad = 0, []
    for b in range(-SWEEP_BOUND, SWEEP_BOUND + 1):
        for c in range(1, DIHEDRAL_C_BOUND + 1):
            if gcd(b, c) != 1:
                continue
            D = DihedralManifold(b, c)
            count += 1
            if cokernel(dihedral_presentation(D)) != h1_dihedral_closed_form(D):
                bad.append((b, c))
    return ItemResult("dihedral_h1", not bad, f"{count} manifolds, mismatches: {bad[:5]}")


def check_sol_h1() -> ItemResult:
    count, bad, parities = 0, [], set()
    for S in sol_matrices():
        count += 1
        parities.add(S.d % 2)
        if cokernel(sol_presentation(S)) != h1_sol_closed_form(S):
            bad.append((S.a, S.b, S.c, S.d))
    ok = not bad and parities == {0, 1}
    return ItemResult("sol_h1", ok, f"{count} gluing matrices, both d parities, mismatches: {bad[:5]}")


def check_factorization() -> ItemResult:
    result = cobordism.check_printed_factorization(SolManifold(1, 2, 1, 3))
    return ItemResult("cobordism_factorization", result.passed, repr(result))


def check_maps_table() -> ItemResult:
    failed, rows = [], 0
    for parity in cobordism.MAPS_H1_TABLE:
        cs = (1, 3) if parity[2] else (2, 4)
        for c in cs:
            for S in cobordism.sample_parameters(parity, c, count=2):
                rows += 1
                if not cobordism.check_table_row(S).matched:
                    failed.append((S.a, S.b, S.c, S.d))
    return ItemResult("maps_h1_table", not failed and rows > 0,
                      f"{rows} sampled manifolds over {len(cobordism.MAPS_H1_TABLE)} rows, failures: {failed}")


def check_h2_table() -> ItemResult:
    notes = []
    for case in ((0, 0), (0, 1), (1, 1)):
        diagram = cobordism.h2_diagram(*case)
        img_b = diagram.image("iota_W_minus_b")
        img_a = diagram.image("iota_W_a")
        sizes = (len(img_b), len(img_a), len(img_b & img_a))
        if sizes != (8, 8, 4):
            notes.append(f"{case}: image sizes {sizes}")
        if cobordism.h2_matches_computed(*cobordism.PARITY_REPRESENTATIVE[case]) is None:
            notes.append(f"{case}: not isomorphic to the computed diagram")
    return ItemResult("h2_diagram_table", not notes, "; ".join(notes) or "3 diagrams, images (8, 8, 4)")


def check_chern_table() -> ItemResult:
    notes = []
    for case, (a, b) in cobordism.PARITY_REPRESENTATIVE.items():
        part = spinc.partition(a, b)
        sizes = [len(part.classes[k]) for k in spinc.CLASS_LABELS]
        doubled = [len(part.doubled(k)) for k in spinc.CLASS_LABELS]
        chern = spinc.chern_classes(a, b)
        if sizes != [4, 4, 4, 4] or doubled != [1, 1, 1, 1]:
            notes.append(f"{case}: sizes {sizes}, doubled {doubled}")
        if chern.values != spinc.CHERN_TABLE[case]:
            notes.append(f"{case}: c1 {chern.values}")
        if spinc.self_conjugate_classes(a, b) != spinc.SELF_CONJUGATE_TABLE[case]:
            notes.append(f"{case}: self-conjugate classes differ")
    return ItemResult("chern_classes", not notes, "; ".join(notes) or "3 parity cases")


def check_extending_theta() -> ItemResult:
    notes = []
    for case, (a, b) in cobordism.PARITY_REPRESENTATIVE.items():
        diff = spinc.compare_extension_row(spinc.extension_data(a, b))
        if diff:
            notes.append(f"{case}: {diff}")
    return ItemResult("extending_theta", not notes, "; ".join(notes) or "3 rows, every cell")


def check_d_blocks() -> ItemResult:
    bad = []
    for a in range(-10, 11):
        for b in range(-10, 11):
            if (a % 2, b % 2) == (1, 0):
                continue
            profile = d_sol_profile(a, b)
            model = spinc.model_d_blocks(spinc.partition(a, b))
            if model != {(profile.S_ba, profile.S_b, profile.S_a)}:
                bad.append((a, b))
    return ItemResult("d_blocks", not bad, f"torsor model vs closed form, |a|,|b| <= 10, mismatches: {bad[:5]}")


def check_d_sum() -> ItemResult:
    bad = [(a, b) for a in range(-SWEEP_BOUND, SWEEP_BOUND + 1)
           for b in range(-SWEEP_BOUND, SWEEP_BOUND + 1) if not d_sum_check(a, b).passed]
    return ItemResult("d_sum", not bad, f"|a|,|b| <= {SWEEP_BOUND}, failures: {bad[:5]}")


def check_splice() -> ItemResult:
    bad = []
    for S in splice_samples():
        try:
            if not splice_chain(S.a, S.b, S.c, S.d).identity_holds:
                bad.append((S.a, S.b, S.c, S.d))
        except (ArithmeticError, SolcobError):
            bad.append((S.a, S.b, S.c, S.d))
    return ItemResult("splice_identity", not bad, f"{SPLICE_SAMPLES} random gluings, failures: {bad[:5]}")


CHECKS: tuple[tuple[str, Callable[[], ItemResult]], ...] = (
    ("dihedral_h1", check_dihedral_h1),
    ("sol_h1", check_sol_h1),
    ("cobordism_factorization", check_factorization),
    ("maps_h1_table", check_maps_table),
    ("h2_diagram_table", check_h2_table),
    ("chern_classes", check_chern_table),
    ("extending_theta", check_extending_theta),
    ("d_blocks", check_d_blocks),
    ("d_sum", check_d_sum),
    ("splice_identity", check_splice),
)


def run_all() -> list[ItemResult]:
    results = []
    for name, check in CHECKS:
        try:
            r = check()
            results.append(ItemResult(name, r.passed, r.detail))
        except Exception as exc:  # a crash is a failed item, not a crashed suite
            results.append(ItemResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
