"""
Heegaard Floer d-invariants of dihedral and Sol manifolds, and the Lescop and
Casson-Walker invariants they are tied to.  Every value is an exact Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParityError
from .manifolds import DihedralManifold, SolManifold, h1_dihedral, h1_sol

Multiset = tuple[Fraction, ...]


def rational_str(x: Fraction) -> str:
    """'p/q', or just 'p' for integers."""
    return str(Fraction(x))


def d_dihedral(n: int) -> Multiset:
    """The four d-invariants of D_n, as a sorted multiset."""
    return tuple(sorted((Fraction(0), Fraction(0), Fraction(n + 2, 4), Fraction(n - 2, 4))))


def _pair_block(n: int) -> Multiset:
    # each non-zero dihedral value shows up twice on the Sol side
    return tuple(sorted([Fraction(n + 2, 4)] * 2 + [Fraction(n - 2, 4)] * 2))


def normalized_parity(a: int, b: int) -> tuple[int, int]:
    case = (a % 2, b % 2)
    if case == (1, 0):
        raise ParityError(f"M_{{{a},{b}}} has parity (1, 0); pass M_{{{-b},{-a}}} instead")
    return case


@dataclass(frozen=True)
class DInvariantProfile:
    a: int
    b: int
    S_ba: Multiset
    S_b: Multiset
    S_a: Multiset
    q_sum: Fraction
    total_sum: Fraction

    def __post_init__(self):
        for block in (self.S_ba, self.S_b, self.S_a):
            if len(block) != 4:
                raise ValueError("every block has four values")
        if sum(self.S_ba) + sum(self.S_b) + sum(self.S_a) + self.q_sum != self.total_sum:
            raise ValueError("block sums do not add up to the total")

    @property
    def blocks(self) -> dict[str, Multiset]:
        return {"S_ba": self.S_ba, "S_b": self.S_b, "S_a": self.S_a}

    @property
    def known_sum(self) -> Fraction:
        return sum(self.S_ba) + sum(self.S_b) + sum(self.S_a)

    def to_dict(self) -> dict:
        out = {k: [rational_str(x) for x in v] for k, v in self.blocks.items()}
        out["q_sum"] = rational_str(self.q_sum)
        out["total"] = rational_str(self.total_sum)
        return out


def d_sol_profile(a: int, b: int) -> DInvariantProfile:
    """
    Blocked d-invariants of M_{a,b}.  The four values on S_empty are not known
    individually; only their sum is recorded.
    """
    normalized_parity(a, b)
    total = Fraction(2 * (a - b))
    S_ba = (Fraction(0),) * 4
    S_b = _pair_block(-b)
    S_a = _pair_block(a)
    q_sum = total - sum(S_b) - sum(S_a)
    return DInvariantProfile(a, b, S_ba, S_b, S_a, q_sum, total)


def lescop(M: SolManifold | DihedralManifold) -> Fraction:
    if isinstance(M, DihedralManifold):
        return Fraction(-M.n, 4)
    if M.c != 1:
        raise ValueError("the Lescop formula here covers M_{a,b} only (c = 1)")
    return Fraction(M.b - M.a)


def casson_walker(M: SolManifold | DihedralManifold) -> Fraction:
    """lambda_W = lambda_L / |H1|."""
    order = h1_dihedral(M).order if isinstance(M, DihedralManifold) else h1_sol(M).order
    return lescop(M) / order


@dataclass(frozen=True)
class DSumReport:
    a: int
    b: int
    total_sum: Fraction
    expected_total: Fraction
    lescop: Fraction
    known_sum: Fraction
    degenerate: bool

    @property
    def passed(self) -> bool:
        return (self.total_sum == self.expected_total == -2 * self.lescop
                and self.known_sum == self.a - self.b)

    def to_dict(self) -> dict:
        return {
            "a": self.a, "b": self.b, "passed": self.passed,
            "total": rational_str(self.total_sum),
            "expected_total": rational_str(self.expected_total),
            "lescop": rational_str(self.lescop),
            "known_sum": rational_str(self.known_sum),
            "degenerate": self.degenerate,
        }


def d_sum_check(a: int, b: int) -> DSumReport:
    """Check that the d-invariants of M_{a,b} sum to -2 lambda_L = 2(a - b)."""
    pa, pb = (-b, -a) if (a % 2, b % 2) == (1, 0) else (a, b)
    profile = d_sol_profile(pa, pb)
    M = SolManifold.m(a, b)
    return DSumReport(a, b, profile.total_sum, Fraction(2 * (a - b)), lescop(M),
                      profile.known_sum, M.degenerate)
