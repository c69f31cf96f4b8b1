"""
Homology cobordism classification of the M_{a,b}.

Two manifolds are compared through a fixed sequence of cobordism invariants:
H1, the sum of all d-invariants, the parity pattern, the d-invariants of the
self-conjugate structures and finally a matching of the remaining blocks of
d-invariants.  The first invariant that differs is reported as the witness.
"""

from __future__ import annotations

import csv
import enum
import io
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .abelian import FinAbGroup
from .dinv import d_sol_profile, rational_str
from .manifolds import SolManifold, h1_sol, orbit_key
from .spinc import self_conjugate_classes

WITNESS_ORDER = ("h1", "total_sum", "parity", "self_conjugate_d", "block_matching")


def representative(a: int, b: int) -> tuple[int, int]:
    """(a, b) itself, or (-b, -a) when (a, b) has the excluded parity (1, 0)."""
    return (-b, -a) if (a % 2, b % 2) == (1, 0) else (a, b)


@dataclass(frozen=True, order=True)
class Block:
    """A block of four d-invariants; values is None when only the sum is known."""

    known: bool
    values: tuple[Fraction, ...]
    total: Fraction

    @classmethod
    def of(cls, values) -> Block:
        values = tuple(sorted(values))
        return cls(True, values, sum(values, Fraction(0)))

    @classmethod
    def unknown(cls, total: Fraction) -> Block:
        return cls(False, (), total)

    def compatible(self, other: Block) -> bool:
        if self.known and other.known:
            return self.values == other.values
        return self.total == other.total

    def to_dict(self) -> dict:
        return {"values": [rational_str(v) for v in self.values] if self.known else None,
                "sum": rational_str(self.total)}


@dataclass(frozen=True)
class Signature:
    a: int
    b: int
    h1: FinAbGroup
    total_sum: Fraction
    parity_class: tuple[int, int]
    self_conjugate_d: tuple[Fraction, ...]
    blocked_d: tuple[Block, ...]

    def invariant(self, name: str):
        return {
            "h1": self.h1,
            "total_sum": self.total_sum,
            "parity": self.parity_class,
            "self_conjugate_d": self.self_conjugate_d,
            "block_matching": self.blocked_d,
        }[name]

    def to_dict(self) -> dict:
        return {
            "a": self.a, "b": self.b,
            "h1": str(self.h1),
            "total_sum": rational_str(self.total_sum),
            "parity_class": list(self.parity_class),
            "self_conjugate_d": [rational_str(v) for v in self.self_conjugate_d],
            "blocked_d": [blk.to_dict() for blk in self.blocked_d],
        }


@lru_cache(maxsize=None)
def signature(a: int, b: int) -> Signature:
    ra, rb = representative(a, b)
    profile = d_sol_profile(ra, rb)
    blocks = profile.blocks
    selfconj = self_conjugate_classes(ra, rb)
    sc_values = tuple(sorted(v for label in selfconj for v in blocks[label]))
    # blocks of the structures that are not self-conjugate, as an unordered family
    family = [Block.of(blocks[k]) for k in ("S_ba", "S_b", "S_a") if k not in selfconj]
    if "S_empty" not in selfconj:
        family.append(Block.unknown(profile.q_sum))
    return Signature(a, b, h1_sol(SolManifold.m(a, b)), profile.total_sum,
                     (ra % 2, rb % 2), sc_values, tuple(sorted(family)))


def homeomorphic(a: int, b: int, a2: int, b2: int) -> bool:
    """M_{a,b} and M_{a',b'} agree exactly when (a', b') is (a, b) or (-b, -a)."""
    return orbit_key(a, b) == orbit_key(a2, b2)


class Result(enum.Enum):
    HOMEOMORPHIC = "HOMEOMORPHIC"
    DISTINGUISHED = "DISTINGUISHED"
    # no invariant in the list separates a non-homeomorphic pair
    UNRESOLVED = "UNRESOLVED"


@dataclass(frozen=True)
class Verdict:
    result: Result
    witness: str | None = None

    def __str__(self):
        if self.result is Result.DISTINGUISHED:
            return f"DISTINGUISHED by {self.witness}"
        return self.result.value

    def to_dict(self) -> dict:
        return {"result": self.result.value, "witness": self.witness}


def blocks_match(x: tuple[Block, ...], y: tuple[Block, ...]) -> bool:
    """Is there a one-to-one correspondence of blocks that respects every known value?"""
    if len(x) != len(y):
        return False
    return any(all(p.compatible(q) for p, q in zip(x, perm)) for perm in permutations(y))


_HOMEOMORPHIC = Verdict(Result.HOMEOMORPHIC)
_UNRESOLVED = Verdict(Result.UNRESOLVED)
_DISTINGUISHED = {name: Verdict(Result.DISTINGUISHED, name) for name in WITNESS_ORDER}


def compare_signatures(s: Signature, t: Signature, same_orbit: bool) -> Verdict:
    if same_orbit:
        return _HOMEOMORPHIC
    for name in WITNESS_ORDER[:-1]:
        if s.invariant(name) != t.invariant(name):
            return _DISTINGUISHED[name]
    if not blocks_match(s.blocked_d, t.blocked_d):
        return _DISTINGUISHED["block_matching"]
    return _UNRESOLVED


def cobordant(a: int, b: int, a2: int, b2: int) -> Verdict:
    return compare_signatures(signature(a, b), signature(a2, b2), homeomorphic(a, b, a2, b2))


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairFailure:
    first: tuple[int, int]
    second: tuple[int, int]
    same_orbit: bool
    verdict: Verdict

    def to_dict(self) -> dict:
        return {"first": list(self.first), "second": list(self.second),
                "same_orbit": self.same_orbit, "verdict": self.verdict.to_dict()}


@dataclass
class CensusReport:
    bound: int
    parameters: list[tuple[int, int]]
    classes: list[list[tuple[int, int]]]
    degenerate: list[tuple[int, int]]
    pairs: int = 0
    failures: list[PairFailure] = field(default_factory=list)
    degenerate_failures: list[PairFailure] = field(default_factory=list)
    results: Counter = field(default_factory=Counter)
    witnesses: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "parameters": len(self.parameters),
            "class_count": len(self.classes),
            "classes": [[list(p) for p in cls] for cls in self.classes],
            "degenerate": [list(p) for p in self.degenerate],
            "pairs": self.pairs,
            "results": dict(self.results),
            "witnesses": dict(self.witnesses),
            "failures": [f.to_dict() for f in self.failures],
            "degenerate_failures": [f.to_dict() for f in self.degenerate_failures],
            "signatures": [signature(*p).to_dict() for p in self.parameters],
            "ok": self.ok,
        }

    def to_csv(self) -> str:
        """Pairwise matrix: '=' for homeomorphic pairs, else the witness name."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        labels = [f"{a};{b}" for a, b in self.parameters]
        w.writerow(["a;b"] + labels)
        for p in self.parameters:
            row = [f"{p[0]};{p[1]}"]
            for q in self.parameters:
                v = cobordant(*p, *q)
                row.append("=" if v.result is Result.HOMEOMORPHIC else (v.witness or v.result.value))
            w.writerow(row)
        return buf.getvalue()


def _census_rows(params: list[tuple[int, int]], rows: list[int]) -> list[tuple[int, int, Verdict]]:
    out = []
    sigs = [signature(*p) for p in params]
    keys = [orbit_key(*p) for p in params]
    for i in rows:
        for j in range(i + 1, len(params)):
            out.append((i, j, compare_signatures(sigs[i], sigs[j], keys[i] == keys[j])))
    return out


def census(bound: int, workers: int | None = None) -> CensusReport:
    """
    Compare every pair M_{a,b}, M_{a',b'} with |a|, |b|, |a'|, |b'| <= bound and check
    that the verdict is HOMEOMORPHIC exactly on equal normalized orbits.
    """
    if bound < 1:
        raise ValueError("census bound must be at least 1")
    params = [(a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)]
    groups = defaultdict(list)
    for p in params:
        groups[orbit_key(*p)].append(p)
    degenerate = [p for p in params if SolManifold.m(*p).degenerate]
    report = CensusReport(bound, params, [groups[k] for k in sorted(groups)], degenerate)

    rows = list(range(len(params)))
    if workers and workers > 1:
        chunks = [rows[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            results = [r for part in pool.map(_census_rows, [params] * workers, chunks) for r in part]
    else:
        results = _census_rows(params, rows)

    degenerate_set = set(degenerate)
    keys = [orbit_key(*p) for p in params]
    for i, j, verdict in results:
        report.pairs += 1
        report.results[verdict.result.value] += 1
        if verdict.witness:
            report.witnesses[verdict.witness] += 1
        same = keys[i] == keys[j]
        if (verdict.result is Result.HOMEOMORPHIC) != same or verdict.result is Result.UNRESOLVED:
            failure = PairFailure(params[i], params[j], same, verdict)
            if params[i] in degenerate_set or params[j] in degenerate_set:
                report.degenerate_failures.append(failure)
            else:
                report.failures.append(failure)
    return report
