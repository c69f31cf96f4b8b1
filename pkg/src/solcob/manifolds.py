"""
Dihedral manifolds D_{-b/c} and Sol torus semi-bundles S_phi.

A dihedral manifold is the Seifert fibered space S^2(0; (2,1), (2,-1), (b,-c)).
The integer family D_n is the case c = 1, b = -n, and D_0 stands for
RP^3 # -RP^3.

A Sol manifold is given by its gluing matrix A_phi = [[a, c], [d, b]] with
ab - cd = -1; M_{a,b} is the order-16 family c = 1, d = ab + 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .abelian import FinAbGroup, IntMatrix, cokernel
from .contfrac import SpliceChain, splice_chain
from .errors import DeterminantError, ZeroFiberError


@dataclass(frozen=True)
class DihedralManifold:
    b: int
    c: int = 1

    def __post_init__(self):
        if self.c < 1:
            raise ValueError("dihedral manifolds need c >= 1")
        if gcd(self.b, self.c) != 1:
            raise ValueError(f"Seifert invariants ({self.b}, {-self.c}) are not coprime")

    @classmethod
    def d(cls, n: int) -> DihedralManifold:
        """D_n, i.e. S^2(0; (2,1), (2,-1), (-n,-1))."""
        return cls(-n, 1)

    @property
    def n(self) -> int:
        """Index of the integer family D_n; only defined for c = 1."""
        if self.c != 1:
            raise ValueError("D_n notation needs c = 1")
        return -self.b

    @property
    def is_lens_space(self) -> bool:
        return abs(self.b) == 1

    def __str__(self):
        return f"D_{-self.b}" if self.c == 1 else f"D_{{{-self.b}/{self.c}}}"


@dataclass(frozen=True)
class SolManifold:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        det = self.a * self.b - self.c * self.d
        if det != -1:
            raise DeterminantError(f"gluing matrix has determinant {det}, expected -1")

    @classmethod
    def m(cls, a: int, b: int) -> SolManifold:
        """M_{a,b}: gluing matrix [[a, 1], [ab + 1, b]]."""
        return cls(a, b, 1, a * b + 1)

    @property
    def gluing(self) -> IntMatrix:
        return IntMatrix.from_rows([[self.a, self.c], [self.d, self.b]])

    @property
    def degenerate(self) -> bool:
        """True when some entry vanishes, so the manifold is Seifert fibered rather than Sol."""
        return 0 in (self.a, self.b, self.c, self.d)

    @property
    def is_order16(self) -> bool:
        return self.c == 1

    def __str__(self):
        if self.c == 1:
            return f"M_{{{self.a},{self.b}}}"
        return f"S[[{self.a},{self.c}],[{self.d},{self.b}]]"


# ---------------------------------------------------------------------------
# First homology
# ---------------------------------------------------------------------------


def dihedral_presentation(D: DihedralManifold) -> IntMatrix:
    return IntMatrix.from_rows([
        [1, 1, 1, 0],
        [2, 0, 0, 1],
        [0, -2, 0, 1],
        [0, 0, -D.b, D.c],
    ])


def h1_dihedral_closed_form(D: DihedralManifold) -> FinAbGroup:
    if D.b % 2 == 0:
        return FinAbGroup.from_orders([2, 2 * D.c])
    return FinAbGroup.from_orders([4 * D.c])


def h1_dihedral(D: DihedralManifold) -> FinAbGroup:
    """H1 of D_{-b/c}: Z/2 + Z/2c for b even, Z/4c for b odd."""
    group = cokernel(dihedral_presentation(D))
    closed = h1_dihedral_closed_form(D)
    if group != closed:
        raise ArithmeticError(f"cokernel {group} disagrees with closed form {closed} for {D}")
    return group


def sol_presentation(S: SolManifold) -> IntMatrix:
    a, b, c, d = S.a, S.b, S.c, S.d
    return IntMatrix.from_rows([
        [0, 0, -2 * a, -2 * c],
        [2, 0, d, b],
        [0, 0, -2, 0],
        [0, 2, 0, 1],
    ])


def h1_sol_closed_form(S: SolManifold) -> FinAbGroup:
    c = abs(S.c)
    if S.d % 2 == 0:
        return FinAbGroup.from_orders([2, 2, 4 * c])
    return FinAbGroup.from_orders([4, 4 * c])


def h1_sol(S: SolManifold) -> FinAbGroup:
    """H1 of S_phi: Z/2 + Z/2 + Z/4c for d even, Z/4 + Z/4c for d odd."""
    group = cokernel(sol_presentation(S))
    closed = h1_sol_closed_form(S)
    if group != closed:
        raise ArithmeticError(f"cokernel {group} disagrees with closed form {closed} for {S}")
    return group


def euler_number(D: DihedralManifold) -> Fraction:
    if D.b == 0:
        raise ZeroFiberError("e(D) = c/b is undefined for b = 0")
    return Fraction(D.c, D.b)


# ---------------------------------------------------------------------------
# Normal forms
# ---------------------------------------------------------------------------


def orbit(S: SolManifold) -> tuple[SolManifold, ...]:
    """The matrices +-A_phi, +-A_phi^{-1}, all giving the same oriented manifold."""
    a, b, c, d = S.a, S.b, S.c, S.d
    # A^{-1} = [[-b, c], [d, -a]] since det = -1
    quads = {(a, b, c, d), (-a, -b, -c, -d), (-b, -a, c, d), (b, a, -c, -d)}
    return tuple(SolManifold(*q) for q in sorted(quads))


def normalize(S: SolManifold) -> SolManifold:
    """
    Canonical representative of the orientation-preserving diffeomorphism class:
    among the orbit members with c >= 0, the lexicographically smallest (a, b, c, d).
    """
    return min((T for T in orbit(S) if T.c >= 0), key=lambda T: (T.a, T.b, T.c, T.d))


def orbit_key(a: int, b: int) -> tuple[int, int]:
    """Normalized (a, b) for M_{a,b}: the smaller of (a, b) and (-b, -a)."""
    return min((a, b), (-b, -a))


# ---------------------------------------------------------------------------
# Plumbing graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlumbingGraph:
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()
    chain: SpliceChain | None = field(default=None, compare=False)

    def neighbours(self, v: int) -> list[int]:
        return sorted({j for i, j in self.edges if i == v} | {i for i, j in self.edges if j == v})

    @property
    def central_weights(self) -> tuple[int, ...]:
        """Weights strictly between the two junction vertices."""
        return tuple(w for w, lab in zip(self.weights, self.labels) if lab.startswith("chain"))

    def to_dot(self) -> str:
        lines = ["graph plumbing {", "  node [shape=circle];"]
        for i, w in enumerate(self.weights):
            lines.append(f'  v{i} [label="{w}"];')
        for i, j in self.edges:
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "vertices": [{"id": i, "weight": w, "role": lab}
                         for i, (w, lab) in enumerate(zip(self.weights, self.labels))],
            "adjacency": {str(i): self.neighbours(i) for i in range(len(self.weights))},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def splice_presentation(S: SolManifold) -> PlumbingGraph:
    """
    Linear plumbing for S_phi: a 0-framed junction carrying 2 and -2 pendants,
    the chain B, x1, ..., xn, A, and a second 0-framed junction with pendants.
    """
    chain = splice_chain(S.a, S.b, S.c, S.d)
    weights: list[int] = [0, 2, -2]
    labels = ["junction", "pendant", "pendant"]
    edges = [(0, 1), (0, 2)]
    prev = 0
    for k, w in enumerate((chain.B,) + chain.tail + (chain.A,)):
        weights.append(w)
        labels.append(f"chain{k}")
        edges.append((prev, len(weights) - 1))
        prev = len(weights) - 1
    right = len(weights)
    weights += [0, 2, -2]
    labels += ["junction", "pendant", "pendant"]
    edges += [(prev, right), (right, right + 1), (right, right + 2)]
    return PlumbingGraph(tuple(weights), tuple(edges), tuple(labels), chain)
