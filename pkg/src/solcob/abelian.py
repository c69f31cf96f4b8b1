"""
Exact integer linear algebra for finitely generated abelian groups.

Groups are handled as cokernels Z^m / P Z^n of integer matrices.  The Smith
normal form D = F P C (F, C unimodular) gives a canonical basis for the
cokernel: generator i of coker(D) is the image of F^{-1} e_i.

>>> P = IntMatrix.from_rows([[-2, 0], [0, 0]])
>>> print(cokernel(P))
Z/2 + Z
>>> G = FinAbGroup.from_orders([4, 6])
>>> G.torsion
(2, 12)
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Iterable, Iterator, Sequence

from .errors import InfiniteGroupError, TooLargeError, WellDefinednessError

DEFAULT_ENUM_CAP = 2**16
ENUM_CAP_ENV = "SOLCOB_ENUM_CAP"


def enumeration_cap() -> int:
    """Current cap on group enumeration; ``SOLCOB_ENUM_CAP`` overrides the default."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{ENUM_CAP_ENV} must be positive, got {raw!r}")
    return cap


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    nrows: int
    ncols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.nrows * self.ncols:
            raise ValueError(
                f"{self.nrows}x{self.ncols} matrix needs {self.nrows * self.ncols} "
                f"entries, got {len(self.entries)}"
            )
        for x in self.entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"matrix entries must be int, got {type(x).__name__}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls(nrows, ncols, (0,) * (nrows * ncols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence[int], nrows: int | None = None, ncols: int | None = None) -> IntMatrix:
        n = len(values)
        nrows = n if nrows is None else nrows
        ncols = n if ncols is None else ncols
        rows = [[0] * ncols for _ in range(nrows)]
        for i, v in enumerate(values):
            rows[i][i] = v
        return cls.from_rows(rows, ncols)

    @classmethod
    def column(cls, values: Sequence[int]) -> IntMatrix:
        return cls(len(values), 1, tuple(values))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(ij)
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.ncols] if self.ncols else ()

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.nrows)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix.from_rows([self.col(j) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.ncols)]
        rows = [
            [sum(a * b for a, b in zip(self.row(i), c)) for c in cols]
            for i in range(self.nrows)
        ]
        return IntMatrix.from_rows(rows, other.ncols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.nrows))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.nrows, self.ncols, tuple(-x for x in self.entries))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse(self) -> IntMatrix:
        """Inverse of a unimodular matrix; raises ValueError otherwise."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = [[Fraction(x) for x in self.row(i)] + [Fraction(int(i == j)) for j in range(n)]
               for i in range(n)]
        for k in range(n):
            piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[k], aug[piv] = aug[piv], aug[k]
            p = aug[k][k]
            aug[k] = [x / p for x in aug[k]]
            for i in range(n):
                if i != k and aug[i][k] != 0:
                    f = aug[i][k]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
        inv = [row[n:] for row in aug]
        if any(x.denominator != 1 for r in inv for x in r):
            raise ValueError("matrix is not unimodular")
        return IntMatrix.from_rows([[int(x) for x in r] for r in inv], n)

    def to_json(self) -> str:
        return json.dumps(self.tolist())

    @classmethod
    def from_json(cls, text: str) -> IntMatrix:
        rows = json.loads(text)
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValueError("expected a JSON array of arrays")
        return cls.from_rows(rows)

    def __str__(self):
        return "\n".join(" ".join(f"{x:>4}" for x in self.row(i)) for i in range(self.nrows))


def block_matrix(blocks: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Assemble a matrix from a grid of blocks with compatible shapes."""
    rows: list[list[int]] = []
    for band in blocks:
        h = band[0].nrows
        if any(b.nrows != h for b in band):
            raise ValueError("blocks in a band must share a height")
        for i in range(h):
            rows.append([x for b in band for x in b.row(i)])
    return IntMatrix.from_rows(rows)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """D = F P C with F, C unimodular and diag(D) a divisibility chain."""

    D: IntMatrix
    F: IntMatrix
    C: IntMatrix
    P: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)

    @cached_property
    def F_inv(self) -> IntMatrix:
        return self.F.inverse()

    def check(self) -> bool:
        """Verify every invariant of the decomposition exactly."""
        if self.F @ self.P @ self.C != self.D:
            return False
        if abs(self.F.det()) != 1 or abs(self.C.det()) != 1:
            return False
        m, n = self.D.shape
        if any(self.D[i, j] != 0 for i in range(m) for j in range(n) if i != j):
            return False
        diag = self.diagonal
        if any(x < 0 for x in diag):
            return False
        for x, y in zip(diag, diag[1:]):
            if x == 0 and y != 0:
                return False
            if x != 0 and y % x != 0:
                return False
        return True


def smith_normal_form(P: IntMatrix) -> SmithDecomposition:
    """
    Smith normal form with transformation matrices.

    Pivot rule: the nonzero entry of smallest absolute value in the active
    submatrix, ties broken by lowest (row, col).  The result is therefore a
    deterministic function of P.
    """
    m, n = P.shape
    D = P.tolist()
    F = [[int(i == j) for j in range(m)] for i in range(m)]
    C = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        F[i], F[k] = F[k], F[i]

    def swap_cols(j, k):
        for r in D:
            r[j], r[k] = r[k], r[j]
        for r in C:
            r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        F[dst] = [x + q * y for x, y in zip(F[dst], F[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for r in D:
            r[dst] += q * r[src]
        for r in C:
            r[dst] += q * r[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = D[i]
                for j in range(t, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            if any(D[i][t] for i in range(t + 1, m)) or any(D[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            F[t] = [-x for x in F[t]]

    return SmithDecomposition(
        D=IntMatrix.from_rows(D, n),
        F=IntMatrix.from_rows(F, m),
        C=IntMatrix.from_rows(C, n),
        P=P,
    )


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------


def _canonical_orders(orders: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    orders = [abs(o) for o in orders]
    if not orders:
        return 0, ()
    diag = smith_normal_form(IntMatrix.diag(orders)).diagonal
    free = sum(1 for d in diag if d == 0)
    torsion = tuple(d for d in diag if d > 1)
    return free, torsion


@dataclass(frozen=True)
class FinAbGroup:
    """Z^free_rank + Z/d1 + ... + Z/dk in invariant-factor form (d1 | d2 | ...)."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factors must be >= 2, got {d}")
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x:
                raise ValueError(f"invariant factors must divide each other: {self.torsion}")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> FinAbGroup:
        """Canonical form of a direct sum of cyclic groups Z/o (o = 0 meaning Z)."""
        free, torsion = _canonical_orders(orders)
        return cls(free, torsion)

    @property
    def orders(self) -> tuple[int, ...]:
        return self.torsion + (0,) * self.free_rank

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise InfiniteGroupError(f"{self} is infinite")
        return prod(self.torsion)

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, data: dict) -> FinAbGroup:
        return cls(int(data["free_rank"]), tuple(int(d) for d in data["torsion"]))


def cokernel(P: IntMatrix) -> FinAbGroup:
    """Canonical form of Z^rows / column-span(P)."""
    return SmithPresentation.of(P).group


@dataclass(frozen=True)
class SmithPresentation:
    """
    A cokernel together with its Smith bookkeeping.

    ``index`` lists the rows of D whose diagonal entry is not a unit; these
    carry the canonical generators, in order, with cyclic ``orders``
    (0 for free generators).
    """

    matrix: IntMatrix
    snf: SmithDecomposition
    index: tuple[int, ...]
    orders: tuple[int, ...]

    @classmethod
    def of(cls, P: IntMatrix) -> SmithPresentation:
        snf = smith_normal_form(P)
        diag = snf.diagonal
        index, orders = [], []
        for i in range(P.nrows):
            d = diag[i] if i < len(diag) else 0
            if d != 1:
                index.append(i)
                orders.append(d)
        return cls(P, snf, tuple(index), tuple(orders))

    @property
    def group(self) -> FinAbGroup:
        return FinAbGroup(sum(1 for o in self.orders if o == 0),
                          tuple(o for o in self.orders if o))

    def coords(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of the class of v in the canonical Smith basis."""
        w = self.snf.F.apply(v)
        return tuple(w[i] % o if o else w[i] for i, o in zip(self.index, self.orders))

    def lift(self, coords: Sequence[int]) -> tuple[int, ...]:
        """A vector of Z^rows representing the given canonical coordinates."""
        e = [0] * self.matrix.nrows
        for i, x in zip(self.index, coords):
            e[i] = x
        return self.snf.F_inv.apply(e)

    def contains(self, v: Sequence[int]) -> bool:
        """Whether v lies in the column span of the presentation matrix."""
        w = self.snf.F.apply(v)
        diag = self.snf.diagonal
        for i, x in enumerate(w):
            d = diag[i] if i < len(diag) else 0
            if (d == 0 and x != 0) or (d and x % d):
                return False
        return True


# ---------------------------------------------------------------------------
# Homomorphisms
# ---------------------------------------------------------------------------


def _reduce(x: int, o: int) -> int:
    return x % o if o else x


@dataclass(frozen=True)
class GroupHom:
    """
    Homomorphism between direct sums of cyclic groups.

    ``source`` and ``target`` are the cyclic orders of the chosen generators
    (0 for Z).  Column j of ``matrix`` is the image of source generator j.
    Entries are stored reduced modulo the target orders.
    """

    source: tuple[int, ...]
    target: tuple[int, ...]
    matrix: IntMatrix

    def __post_init__(self):
        src, tgt = tuple(self.source), tuple(self.target)
        object.__setattr__(self, "source", src)
        object.__setattr__(self, "target", tgt)
        if self.matrix.shape != (len(tgt), len(src)):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match "
                f"{len(tgt)} target and {len(src)} source generators"
            )
        rows = [[_reduce(x, o) for x in self.matrix.row(i)] for i, o in enumerate(tgt)]
        object.__setattr__(self, "matrix", IntMatrix.from_rows(rows, len(src)))
        for j, m in enumerate(src):
            if m == 0:
                continue
            for i, o in enumerate(tgt):
                if _reduce(m * rows[i][j], o):
                    raise WellDefinednessError(
                        f"generator {j} of order {m} maps to an element whose "
                        f"coordinate {i} has order not dividing {m}"
                    )

    @classmethod
    def from_rows(cls, source, target, rows) -> GroupHom:
        return cls(tuple(source), tuple(target), IntMatrix.from_rows(rows, len(source)))

    @classmethod
    def identity(cls, orders: Sequence[int]) -> GroupHom:
        return cls(tuple(orders), tuple(orders), IntMatrix.identity(len(orders)))

    @property
    def source_group(self) -> FinAbGroup:
        return FinAbGroup.from_orders(self.source)

    @property
    def target_group(self) -> FinAbGroup:
        return FinAbGroup.from_orders(self.target)

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        y = self.matrix.apply(x)
        return tuple(_reduce(v, o) for v, o in zip(y, self.target))

    def compose(self, first: GroupHom) -> GroupHom:
        """self o first."""
        if first.target != self.source:
            raise ValueError("composition of incompatible maps")
        return GroupHom(first.source, self.target, self.matrix @ first.matrix)

    def image(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self(x) for x in elements(self.source))

    def kernel(self) -> frozenset[tuple[int, ...]]:
        zero = tuple(0 for _ in self.target)
        return frozenset(x for x in elements(self.source) if self(x) == zero)

    def preimage(self, y: Sequence[int]) -> frozenset[tuple[int, ...]]:
        y = tuple(_reduce(v, o) for v, o in zip(y, self.target))
        return frozenset(x for x in elements(self.source) if self(x) == y)

    def is_injective(self) -> bool:
        return len(self.kernel()) == 1

    def is_isomorphism(self) -> bool:
        return self.is_injective() and prod(self.source) == prod(self.target)

    def to_dict(self) -> dict:
        return {"source": list(self.source), "target": list(self.target),
                "matrix": self.matrix.tolist()}


def induced_map(P, P2, h: IntMatrix) -> GroupHom:
    """
    The map coker(P) -> coker(P2) induced by the lattice map h.

    Either presentation may be given as an IntMatrix or a SmithPresentation.
    The result is expressed on the canonical Smith generators of both sides,
    i.e. it is q' o F' o h o F^{-1} o q^T restricted to the non-unit block.
    """
    src = P if isinstance(P, SmithPresentation) else SmithPresentation.of(P)
    tgt = P2 if isinstance(P2, SmithPresentation) else SmithPresentation.of(P2)
    if h.shape != (tgt.matrix.nrows, src.matrix.nrows):
        raise ValueError(f"lattice map shape {h.shape} does not fit the presentations")
    for j in range(src.matrix.ncols):
        image = h.apply(src.matrix.col(j))
        if not tgt.contains(image):
            raise WellDefinednessError(
                f"relation column {j} maps to {image}, outside the target relations"
            )
    cols = []
    for k in range(len(src.index)):
        e = [0] * len(src.index)
        e[k] = 1
        cols.append(tgt.coords(h.apply(src.lift(e))))
    rows = [[c[i] for c in cols] for i in range(len(tgt.index))]
    return GroupHom(src.orders, tgt.orders, IntMatrix.from_rows(rows, len(src.index)))


def ext_dual(f: GroupHom) -> GroupHom:
    """
    Ext(f, Z): Ext(target) -> Ext(source) for finite groups.

    A component gen_j -> k gen_i between Z/m and Z/n dualizes to
    multiplication by k*m/n from Z/n to Z/m.
    """
    if any(o == 0 for o in f.source + f.target):
        raise InfiniteGroupError("Ext duality is only implemented for finite groups")
    rows = []
    for j, m in enumerate(f.source):
        rows.append([(f.matrix[i, j] * m // n) % m for i, n in enumerate(f.target)])
    return GroupHom(f.target, f.source, IntMatrix.from_rows(rows, len(f.target)))


# ---------------------------------------------------------------------------
# Enumeration and isomorphism search
# ---------------------------------------------------------------------------


def elements(orders: Sequence[int], limit: int | None = None) -> list[tuple[int, ...]]:
    """All elements of a finite direct sum of cyclic groups, lexicographically."""
    if any(o == 0 for o in orders):
        raise InfiniteGroupError("cannot enumerate an infinite group")
    cap = enumeration_cap() if limit is None else limit
    size = prod(orders)
    if size > cap:
        raise TooLargeError(f"group of order {size} exceeds enumeration cap {cap}")
    return list(itertools.product(*(range(o) for o in orders)))


def enumerate_elements(G: FinAbGroup, limit: int | None = None) -> list[tuple[int, ...]]:
    """All elements of G as tuples in its canonical basis, lexicographically."""
    if not G.is_finite:
        raise InfiniteGroupError(f"{G} is infinite")
    return elements(G.torsion, limit)


def element_order(x: Sequence[int], orders: Sequence[int]) -> int:
    n = 1
    for v, o in zip(x, orders):
        k = o // gcd(v, o)
        n = n * k // gcd(n, k)
    return n


@lru_cache(maxsize=256)
def _isomorphism_list(source: tuple[int, ...], target: tuple[int, ...]) -> tuple[GroupHom, ...]:
    if prod(source) != prod(target):
        return ()
    tgt_elems = elements(target)
    candidates = [[y for y in tgt_elems if element_order(y, target) == m] for m in source]
    n = prod(source)
    found = []
    for images in itertools.product(*candidates):
        rows = [[img[i] for img in images] for i in range(len(target))]
        f = GroupHom(source, target, IntMatrix.from_rows(rows, len(source)))
        if len(f.image()) == n:
            found.append(f)
    return tuple(found)


def isomorphisms(source: Sequence[int], target: Sequence[int]) -> Iterator[GroupHom]:
    """Every isomorphism between two finite cyclic decompositions, in a fixed order."""
    yield from _isomorphism_list(tuple(source), tuple(target))


def _agree_on_generators(f: GroupHom, g: GroupHom) -> bool:
    return f.matrix == g.matrix


def match_diagram(
    ours: dict[tuple[str, str], GroupHom],
    theirs: dict[tuple[str, str], GroupHom],
) -> dict[str, GroupHom] | None:
    """
    Find isomorphisms iso[v]: theirs-group(v) -> ours-group(v), one per node,
    such that ours[e] o iso[src] == iso[tgt] o theirs[e] for every edge
    e = (src, tgt).  Returns None when no such family exists.
    """
    if set(ours) != set(theirs):
        raise ValueError("diagrams have different edges")
    groups_ours: dict[str, tuple[int, ...]] = {}
    groups_theirs: dict[str, tuple[int, ...]] = {}
    for (s, t), f in ours.items():
        groups_ours.setdefault(s, f.source)
        groups_ours.setdefault(t, f.target)
        if groups_ours[s] != f.source or groups_ours[t] != f.target:
            raise ValueError("inconsistent node groups in diagram")
    for (s, t), g in theirs.items():
        groups_theirs.setdefault(s, g.source)
        groups_theirs.setdefault(t, g.target)
        if groups_theirs[s] != g.source or groups_theirs[t] != g.target:
            raise ValueError("inconsistent node groups in diagram")

    isos = {v: list(isomorphisms(groups_theirs[v], groups_ours[v])) for v in groups_ours}
    order = sorted(isos, key=lambda v: (len(isos[v]), v))
    assigned: dict[str, GroupHom] = {}

    def consistent() -> bool:
        for (s, t), f in ours.items():
            if s in assigned and t in assigned:
                lhs = f.compose(assigned[s])
                rhs = assigned[t].compose(theirs[(s, t)])
                if not _agree_on_generators(lhs, rhs):
                    return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for phi in isos[v]:
            assigned[v] = phi
            if consistent() and search(k + 1):
                return True
        del assigned[v]
        return False

    return dict(assigned) if search(0) else None


def equivalent_maps(ours: GroupHom, theirs: GroupHom) -> tuple[GroupHom, GroupHom] | None:
    """Isomorphisms (alpha, beta) with ours o alpha == beta o theirs, if any exist."""
    found = match_diagram({("s", "t"): ours}, {("s", "t"): theirs})
    if found is None:
        return None
    return found["s"], found["t"]
