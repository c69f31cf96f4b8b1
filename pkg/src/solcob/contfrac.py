"""Negative (Hirzebruch-Jung) continued fractions and their 2x2 matrix words."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .abelian import IntMatrix
from .errors import DegenerateError, DeterminantError

ROTATION = IntMatrix.from_rows([[0, -1], [1, 0]])
ANTIDIAGONAL = IntMatrix.from_rows([[0, 1], [1, 0]])


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def evaluate(head: int, tail: Sequence[int]) -> Fraction:
    """head - 1/(x1 - 1/(x2 - ... - 1/xn))."""
    value = None
    for x in reversed(tail):
        value = Fraction(x) if value is None else x - 1 / value
    return Fraction(head) if value is None else head - 1 / value


@dataclass(frozen=True)
class NegContFrac:
    head: int
    tail: tuple[int, ...]
    value: Fraction

    def __post_init__(self):
        if any(x < 2 for x in self.tail):
            raise ValueError(f"tail entries must be >= 2, got {self.tail}")
        if evaluate(self.head, self.tail) != self.value:
            raise ValueError("continued fraction does not evaluate to its value")

    @property
    def coefficients(self) -> tuple[int, ...]:
        return (self.head,) + self.tail

    def __str__(self):
        return f"[{self.head}; {', '.join(map(str, self.tail))}]^-"


def expand(p: int, q: int) -> NegContFrac:
    """Canonical expansion of p/q: head = ceil(p/q), every tail entry >= 2."""
    if q < 1:
        raise ValueError("denominator must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not in lowest terms")
    head = _ceil_div(p, q)
    tail = []
    # head - p/q = r/q with 0 <= r < q; keep expanding q/r
    num, den = q, head * q - p
    while den:
        x = _ceil_div(num, den)
        tail.append(x)
        num, den = den, x * den - num
    return NegContFrac(head, tuple(tail), Fraction(p, q))


@dataclass(frozen=True)
class MatrixWord:
    factors: tuple[IntMatrix, ...]
    product: IntMatrix

    def __post_init__(self):
        prod = IntMatrix.identity(2)
        for f in self.factors:
            prod = prod @ f
        if prod != self.product:
            raise ValueError("product does not match factors")


def cf_matrix(coeffs: Sequence[int]) -> MatrixWord:
    """Ordered product of the factors [[x, -1], [1, 0]]."""
    factors = tuple(IntMatrix.from_rows([[x, -1], [1, 0]]) for x in coeffs)
    prod = IntMatrix.identity(2)
    for f in factors:
        prod = prod @ f
    return MatrixWord(factors, prod)


@dataclass(frozen=True)
class SpliceChain:
    """Chain data for the splice of the two dihedral pieces of a Sol manifold."""

    a: int
    b: int
    c: int
    d: int
    B: int
    tail: tuple[int, ...]
    A: int
    f1: MatrixWord
    f2: MatrixWord
    identity_holds: bool
    # off-diagonal and corner entries of the chain matrix [[-b, c'], [c, b']]
    c_prime: int
    b_prime: int

    @property
    def formula_A(self) -> int:
        """The closed formula a*c' - b'*d as usually stated."""
        return self.a * self.c_prime - self.b_prime * self.d

    @property
    def signed_formula_A(self) -> int:
        """-(a*c' + b'*d), which is what the gluing identity actually forces."""
        return -(self.a * self.c_prime + self.b_prime * self.d)

    @property
    def gluing(self) -> IntMatrix:
        return IntMatrix.from_rows([[self.a, self.c], [self.d, self.b]])

    @property
    def formula_matches(self) -> bool:
        return self.formula_A == self.A


def _glue(f1: IntMatrix, gluing: IntMatrix, A: int) -> IntMatrix:
    f2 = ROTATION @ IntMatrix.from_rows([[A, -1], [1, 0]])
    return f1.inverse() @ gluing @ f2


def splice_chain(a: int, b: int, c: int, d: int) -> SpliceChain:
    """
    Expand -b/c, build f1 and f2 and solve for the integer A such that
    f1^{-1} A_phi f2 = [[0, 1], [1, 0]] with A_phi = [[a, c], [d, b]].
    """
    if a * b - c * d != -1:
        raise DeterminantError(f"ab - cd = {a * b - c * d}, expected -1")
    if 0 in (a, b, d):
        raise DegenerateError("splice description needs a, b, d nonzero")
    if c < 1:
        raise ValueError("splice description needs c >= 1")

    cf = expand(-b, c)
    word = cf_matrix(cf.coefficients)
    f1 = MatrixWord((ROTATION,) + word.factors, ROTATION @ word.product)
    gluing = IntMatrix.from_rows([[a, c], [d, b]])

    # the (0, 0) entry of f1^{-1} A_phi f2 is affine in A; pin it from two samples
    e0 = _glue(f1.product, gluing, 0)[0, 0]
    slope = _glue(f1.product, gluing, 1)[0, 0] - e0
    if slope == 0 or e0 % slope:
        raise ArithmeticError(f"no integer A solves the gluing identity for {(a, b, c, d)}")
    A = -e0 // slope

    f2 = MatrixWord((ROTATION, IntMatrix.from_rows([[A, -1], [1, 0]])),
                    ROTATION @ IntMatrix.from_rows([[A, -1], [1, 0]]))
    holds = f1.product.inverse() @ gluing @ f2.product == ANTIDIAGONAL
    if not holds:
        raise ArithmeticError(f"gluing identity fails for {(a, b, c, d)}")

    # the chain matrix is [[-b, c'], [c, b']]: first column (-b, c), second column (c', b')
    c_prime, b_prime = word.product[0, 1], word.product[1, 1]
    return SpliceChain(a, b, c, d, cf.head, cf.tail, A, f1, f2, holds, c_prime, b_prime)
