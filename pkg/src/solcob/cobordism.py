"""
Homology of the rational homology cobordisms W_{-b/c}: D_{-b/c} -> S_phi and
W_{a/c}: D_{a/c} -> S_phi.

Every space is glued from three pieces along a torus with basis (mu, lambda):

    N  twisted I-bundle over the Klein bottle, H1 = <y, lambda | 2 lambda>
    V  solid torus,                            H1 = <mu, lambda | lambda>
    X  the relative cobordism V -> N,          H1 = <z, lambda | lambda>

and M1 u_phi M2 is presented by [[P1, 0, i1 phi], [0, P2, i2]].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .abelian import (
    FinAbGroup,
    GroupHom,
    IntMatrix,
    SmithPresentation,
    block_matrix,
    cokernel,
    equivalent_maps,
    ext_dual,
    induced_map,
    match_diagram,
)
from .errors import ParityError, WellDefinednessError
from .manifolds import SolManifold


@dataclass(frozen=True)
class Piece:
    name: str
    relations: IntMatrix   # 2x1 presentation column of H1(piece)
    boundary: IntMatrix    # H1(torus) -> H1(piece) on (mu, lambda)


PIECE_N = Piece("N", IntMatrix.column([0, 2]), IntMatrix.from_rows([[-2, 0], [0, 1]]))
PIECE_V = Piece("V", IntMatrix.column([0, 1]), IntMatrix.identity(2))
PIECE_X = Piece("X", IntMatrix.column([0, 1]), IntMatrix.from_rows([[-2, 0], [0, 0]]))

# generator-level maps between pieces, induced by inclusion
N_TO_X = IntMatrix.from_rows([[1, 0], [0, 0]])     # y -> z, lambda -> 0
V_TO_X = IntMatrix.from_rows([[-2, 0], [0, 0]])    # mu -> -2z, lambda -> 0


def glue(left: Piece, right: Piece, gluing: IntMatrix) -> IntMatrix:
    """Mayer-Vietoris presentation of left u_phi right."""
    z = IntMatrix.zeros(2, 1)
    return block_matrix([
        [left.relations, z, left.boundary @ gluing],
        [z, right.relations, right.boundary],
    ])


def block_diag(*blocks: IntMatrix) -> IntMatrix:
    n = sum(b.nrows for b in blocks)
    rows, offset = [], 0
    for b in blocks:
        for i in range(b.nrows):
            row = [0] * n
            row[offset:offset + b.ncols] = b.row(i)
            rows.append(row)
        offset += b.ncols
    return IntMatrix.from_rows(rows, n)


def presentations(S: SolManifold) -> dict[str, IntMatrix]:
    phi = S.gluing
    return {
        "S": glue(PIECE_N, PIECE_N, phi),
        "D_minus_b": glue(PIECE_N, PIECE_V, phi),
        "D_a": glue(PIECE_V, PIECE_N, phi),
        "W_minus_b": glue(PIECE_N, PIECE_X, phi),
        "W_a": glue(PIECE_X, PIECE_N, phi),
    }


def printed_presentations(S: SolManifold) -> dict[str, IntMatrix]:
    """The four cobordism-side presentation matrices exactly as printed."""
    a, b, c, d = S.a, S.b, S.c, S.d
    return {
        "D_minus_b": IntMatrix.from_rows([[0, 0, -2 * a, -2 * c], [2, 0, d, b], [0, 0, 1, 0], [0, 1, 0, 1]]),
        "D_a": IntMatrix.from_rows([[0, 0, a, c], [1, 0, d, b], [0, 0, -2, 0], [0, 2, 0, 1]]),
        "W_minus_b": IntMatrix.from_rows([[0, 0, -2 * a, -2 * c], [2, 0, d, b], [0, 0, -2, 0], [0, 1, 0, 0]]),
        "W_a": IntMatrix.from_rows([[0, 0, -2 * a, -2 * c], [1, 0, d, b], [0, 0, -2, 0], [0, 2, 0, 1]]),
    }


I2 = IntMatrix.identity(2)

LATTICE_MAPS = {
    ("S", "W_minus_b"): block_diag(I2, N_TO_X),
    ("D_minus_b", "W_minus_b"): block_diag(I2, V_TO_X),
    ("S", "W_a"): block_diag(N_TO_X, I2),
    ("D_a", "W_a"): block_diag(V_TO_X, I2),
}


class CobordismSide(enum.Enum):
    W_MINUS_B = "W_minus_b"
    W_A = "W_a"

    @property
    def dihedral(self) -> str:
        return "D_minus_b" if self is CobordismSide.W_MINUS_B else "D_a"


def cobordism_h1_closed_form(S: SolManifold, side: CobordismSide) -> FinAbGroup:
    c = abs(S.c)
    if side is CobordismSide.W_A or S.b % 2:
        return FinAbGroup.from_orders([2, 4 * c])
    return FinAbGroup.from_orders([4, 2 * c])


@dataclass(frozen=True)
class CobordismH1:
    side: CobordismSide
    group: FinAbGroup
    from_sol: GroupHom
    from_dihedral: GroupHom


def inclusion_maps(S: SolManifold) -> dict[tuple[str, str], GroupHom]:
    """All four boundary inclusions on H1, on canonical Smith generators."""
    pres = {k: SmithPresentation.of(P) for k, P in presentations(S).items()}
    return {(src, tgt): induced_map(pres[src], pres[tgt], h)
            for (src, tgt), h in LATTICE_MAPS.items()}


def cobordism_h1(S: SolManifold, side: CobordismSide) -> CobordismH1:
    """H1 of a cobordism and the maps induced by its two boundary inclusions."""
    side = CobordismSide(side)
    maps = inclusion_maps(S)
    from_sol = maps[("S", side.value)]
    from_dih = maps[(side.dihedral, side.value)]
    group = FinAbGroup.from_orders(from_sol.target)
    closed = cobordism_h1_closed_form(S, side)
    if group != closed:
        raise ArithmeticError(f"H1({side.value}) = {group} disagrees with closed form {closed}")
    return CobordismH1(side, group, from_sol, from_dih)


# ---------------------------------------------------------------------------
# Printed table of H1 maps
# ---------------------------------------------------------------------------


def _closed_form_groups(a: int, b: int, c: int, d: int) -> dict[str, tuple[int, ...]]:
    return {
        "S": (2, 2, 4 * c) if d % 2 == 0 else (4, 4 * c),
        "D_minus_b": (2, 2 * c) if b % 2 == 0 else (4 * c,),
        "D_a": (2, 2 * c) if a % 2 == 0 else (4 * c,),
        "W_minus_b": (2, 4 * c) if b % 2 else (4, 2 * c),
        "W_a": (2, 4 * c),
    }


_I = [[1, 0], [0, 1]]
_PROJ = [[0, 1, 0], [0, 0, 1]]

# (a, b, c, d) mod 2 -> column -> matrix as a function of c
MAPS_H1_TABLE: dict[tuple[int, int, int, int], dict[tuple[str, str], Callable[[int], list[list[int]]]]] = {
    (0, 0, 1, 1): {
        ("S", "W_minus_b"): lambda c: _I,
        ("D_minus_b", "W_minus_b"): lambda c: [[2, 0], [0, 1]],
        ("S", "W_a"): lambda c: _I,
        ("D_a", "W_a"): lambda c: [[1, 0], [0, -2]],
    },
    (0, 1, 1, 1): {
        ("S", "W_minus_b"): lambda c: _I,
        ("D_minus_b", "W_minus_b"): lambda c: [[0], [1]],
        ("S", "W_a"): lambda c: [[1, 0], [c, 1]],
        ("D_a", "W_a"): lambda c: [[1, 0], [0, -2]],
    },
    (1, 0, 1, 1): {
        ("S", "W_minus_b"): lambda c: _I,
        ("D_minus_b", "W_minus_b"): lambda c: [[2, 0], [0, 1]],
        ("S", "W_a"): lambda c: _I,
        ("D_a", "W_a"): lambda c: [[1], [-1]],
    },
    (1, 1, 1, 0): {
        ("S", "W_minus_b"): lambda c: _PROJ,
        ("D_minus_b", "W_minus_b"): lambda c: [[0], [1]],
        ("S", "W_a"): lambda c: [[0, 1, 0], [2 * c, 0, 1]],
        ("D_a", "W_a"): lambda c: [[1], [-1]],
    },
    (1, 1, 0, 1): {
        ("S", "W_minus_b"): lambda c: _I,
        ("D_minus_b", "W_minus_b"): lambda c: [[0], [1]],
        ("S", "W_a"): lambda c: [[1, 0], [c, 1]],
        ("D_a", "W_a"): lambda c: [[1], [-1]],
    },
    (1, 1, 0, 0): {
        ("S", "W_minus_b"): lambda c: _PROJ,
        ("D_minus_b", "W_minus_b"): lambda c: [[0], [1]],
        ("S", "W_a"): lambda c: [[0, 1, 0], [2 * c, 0, 1]],
        ("D_a", "W_a"): lambda c: [[1], [-1]],
    },
}


def table_maps(a: int, b: int, c: int, d: int) -> dict[tuple[str, str], GroupHom]:
    """The printed table row for the parities of (a, b, c, d), as homomorphisms."""
    key = (a % 2, b % 2, c % 2, d % 2)
    row = MAPS_H1_TABLE[key]
    groups = _closed_form_groups(a, b, c, d)
    return {(s, t): GroupHom.from_rows(groups[s], groups[t], entry(c))
            for (s, t), entry in row.items()}


def sample_parameters(parity: tuple[int, int, int, int], c: int, count: int = 1,
                      search: int = 25) -> list[SolManifold]:
    """Nondegenerate (a, b, c, d) with the given parities and the given c."""
    found = []
    pairs = sorted(((a, b) for a in range(-search, search + 1) for b in range(-search, search + 1)),
                   key=lambda ab: (abs(ab[0]) + abs(ab[1]), ab))
    for a, b in pairs:
        if (a % 2, b % 2) != parity[:2] or 0 in (a, b) or (a * b + 1) % c:
            continue
        d = (a * b + 1) // c
        if d == 0 or (c % 2, d % 2) != parity[2:]:
            continue
        found.append(SolManifold(a, b, c, d))
        if len(found) == count:
            break
    return found


@dataclass(frozen=True)
class RowCheck:
    parity: tuple[int, int, int, int]
    manifold: SolManifold
    ours: dict
    theirs: dict
    per_map: dict          # edge -> (alpha, beta) or None
    joint: dict | None     # node -> isomorphism, or None
    error: str | None = None

    @property
    def matched(self) -> bool:
        return self.error is None and all(v is not None for v in self.per_map.values())

    def certificate(self) -> dict:
        cert = {}
        for edge, pair in self.per_map.items():
            key = f"{edge[0]}->{edge[1]}"
            cert[key] = None if pair is None else {
                "alpha": pair[0].matrix.tolist(), "beta": pair[1].matrix.tolist()}
        return cert


def check_table_row(S: SolManifold) -> RowCheck:
    """Compare computed H1 inclusion maps with the printed row, up to isomorphism."""
    parity = (S.a % 2, S.b % 2, S.c % 2, S.d % 2)
    ours = inclusion_maps(S)
    try:
        theirs = table_maps(S.a, S.b, S.c, S.d)
    except WellDefinednessError as exc:
        return RowCheck(parity, S, ours, {}, {e: None for e in ours}, None, str(exc))
    per_map = {e: equivalent_maps(ours[e], theirs[e]) for e in ours}
    joint = match_diagram(ours, theirs)
    return RowCheck(parity, S, ours, theirs, per_map, joint)


# ---------------------------------------------------------------------------
# H^2 diagrams
# ---------------------------------------------------------------------------

H2_NODES = ("M", "W_minus_b", "D_minus_b", "W_a", "D_a")
H2_EDGES = {
    "iota_W_minus_b": ("W_minus_b", "M"),
    "iota_D_minus_b": ("W_minus_b", "D_minus_b"),
    "iota_W_a": ("W_a", "M"),
    "iota_D_a": ("W_a", "D_a"),
}
# the H1 map whose Ext dual gives each restriction
H2_FROM_H1 = {
    "iota_W_minus_b": ("S", "W_minus_b"),
    "iota_D_minus_b": ("D_minus_b", "W_minus_b"),
    "iota_W_a": ("S", "W_a"),
    "iota_D_a": ("D_a", "W_a"),
}

H2_DIAGRAM_TABLE: dict[tuple[int, int], dict] = {
    (0, 0): {
        "groups": {"M": (4, 4), "W_minus_b": (4, 2), "D_minus_b": (2, 2), "W_a": (2, 4), "D_a": (2, 2)},
        "maps": {
            "iota_W_minus_b": [[1, 0], [0, 2]],
            "iota_D_minus_b": [[1, 0], [0, 1]],
            "iota_W_a": [[2, 0], [0, 1]],
            "iota_D_a": [[1, 0], [0, 1]],
        },
    },
    (0, 1): {
        "groups": {"M": (4, 4), "W_minus_b": (2, 4), "D_minus_b": (4,), "W_a": (2, 4), "D_a": (2, 2)},
        "maps": {
            "iota_W_minus_b": [[2, 0], [0, 1]],
            "iota_D_minus_b": [[0, 1]],
            "iota_W_a": [[2, 1], [0, 1]],
            "iota_D_a": [[1, 0], [0, 1]],
        },
    },
    (1, 1): {
        "groups": {"M": (2, 2, 4), "W_minus_b": (2, 4), "D_minus_b": (4,), "W_a": (2, 4), "D_a": (4,)},
        "maps": {
            "iota_W_minus_b": [[0, 0], [1, 0], [0, 1]],
            "iota_D_minus_b": [[0, 1]],
            "iota_W_a": [[0, 1], [1, 0], [0, 1]],
            "iota_D_a": [[2, -1]],
        },
    },
}

# representative M_{a,b} for each parity case
PARITY_REPRESENTATIVE = {(0, 0): (2, 2), (0, 1): (2, 3), (1, 1): (1, 1)}


def check_parity(a_parity: int, b_parity: int) -> tuple[int, int]:
    case = (a_parity % 2, b_parity % 2)
    if case == (1, 0):
        raise ParityError("parity case (1, 0) is excluded; use M_{-b,-a} instead")
    return case


@dataclass(frozen=True)
class H2Diagram:
    parity_case: tuple[int, int]
    groups: dict[str, tuple[int, ...]]
    maps: dict[str, GroupHom]

    def image(self, name: str) -> frozenset:
        return self.maps[name].image()

    def to_dict(self) -> dict:
        return {
            "parity_case": list(self.parity_case),
            "groups": {k: FinAbGroup.from_orders(v).to_dict() | {"presentation": list(v)}
                       for k, v in self.groups.items()},
            "maps": {k: f.to_dict() for k, f in self.maps.items()},
        }


def _diagram_from_constants(case: tuple[int, int]) -> H2Diagram:
    data = H2_DIAGRAM_TABLE[case]
    groups = {k: tuple(v) for k, v in data["groups"].items()}
    maps = {}
    for name, (src, tgt) in H2_EDGES.items():
        maps[name] = GroupHom.from_rows(groups[src], groups[tgt], data["maps"][name])
    return H2Diagram(case, groups, maps)


def regenerate_h2_diagram(a_parity: int, b_parity: int) -> H2Diagram:
    """H^2 restriction maps as Ext duals of the printed H1 table at c = 1."""
    case = check_parity(a_parity, b_parity)
    a, b = PARITY_REPRESENTATIVE[case]
    h1 = table_maps(a, b, 1, a * b + 1)
    maps = {name: ext_dual(h1[edge]) for name, edge in H2_FROM_H1.items()}
    groups = {}
    for name, (src, tgt) in H2_EDGES.items():
        groups[src] = maps[name].source
        groups[tgt] = maps[name].target
    return H2Diagram(case, groups, maps)


def computed_h2_maps(a: int, b: int) -> dict[tuple[str, str], GroupHom]:
    """Ext duals of our own Smith-basis inclusion maps for M_{a,b}, keyed by (source, target)."""
    h1 = inclusion_maps(SolManifold.m(a, b))
    out = {}
    for name, edge in H2_FROM_H1.items():
        out[H2_EDGES[name]] = ext_dual(h1[edge])
    return out


def h2_diagram(a_parity: int, b_parity: int) -> H2Diagram:
    """
    The stored H^2 diagram for a parity case, cross-checked against the Ext
    dual of the printed H1 table.  A disagreement raises ArithmeticError.
    """
    case = check_parity(a_parity, b_parity)
    stored = _diagram_from_constants(case)
    regenerated = regenerate_h2_diagram(*case)
    if stored.groups != regenerated.groups or stored.maps != regenerated.maps:
        bad = [k for k in stored.maps if stored.maps[k] != regenerated.maps.get(k)]
        raise ArithmeticError(f"stored H^2 diagram {case} disagrees with its Ext dual in {bad}")
    return stored


def h2_matches_computed(a: int, b: int) -> dict[str, GroupHom] | None:
    """Node isomorphisms identifying the stored diagram with our computed one, if any."""
    case = check_parity(a % 2, b % 2)
    stored = _diagram_from_constants(case)
    theirs = {H2_EDGES[name]: f for name, f in stored.maps.items()}
    return match_diagram(computed_h2_maps(a, b), theirs)


# ---------------------------------------------------------------------------
# Rational homology balls
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalBallReport:
    manifold: SolManifold
    lens_order: int
    h1_sol: FinAbGroup
    h1_lens: FinAbGroup
    h1_cobordism: FinAbGroup
    degenerate: bool

    @property
    def bounds_rational_ball(self) -> bool:
        return self.lens_order == 1

    @property
    def statement(self) -> str:
        if self.bounds_rational_ball:
            return f"{self.manifold} bounds a rational homology ball"
        return (f"{self.manifold} is rationally homology cobordant to a lens space "
                f"of order {self.lens_order}")

    def to_dict(self) -> dict:
        return {
            "manifold": [self.manifold.a, self.manifold.b, self.manifold.c, self.manifold.d],
            "statement": self.statement,
            "lens_order": self.lens_order,
            "h1_sol": self.h1_sol.to_dict(),
            "h1_lens": self.h1_lens.to_dict(),
            "h1_cobordism": self.h1_cobordism.to_dict(),
            "degenerate": self.degenerate,
        }


def rational_ball_chain(S: SolManifold) -> RationalBallReport:
    """Homology evidence that X1 u X2 is a rational cobordism from an order-|c| lens space."""
    phi = S.gluing
    lens = glue(PIECE_V, PIECE_V, phi)
    cob = glue(PIECE_X, PIECE_X, phi)
    sol = glue(PIECE_N, PIECE_N, phi)
    h1_lens = cokernel(lens)
    h1_cob = cokernel(cob)
    h1_s = cokernel(sol)
    order = h1_lens.order if h1_lens.is_finite else 0
    return RationalBallReport(S, order, h1_s, h1_lens, h1_cob, S.degenerate)


# ---------------------------------------------------------------------------
# Printed Smith factorizations for H1(S_phi) and H1(W_{-b/c})
# ---------------------------------------------------------------------------


def _half(x: int) -> int:
    if x % 2:
        raise ValueError(f"{x} is odd; the printed factorization needs b even and d odd")
    return x // 2


def printed_factorization(S: SolManifold) -> dict[str, IntMatrix]:
    """
    The printed F, P, C, D (for S_phi) and F', P', C', D' (for W_{-b/c}), valid
    when a, c, d are odd and b is even, together with the printed F' Delta F^-1.
    """
    a, b, c, d = S.a, S.b, S.c, S.d
    hb, hd = _half(b), _half(1 - d)
    m = IntMatrix.from_rows
    return {
        "D": m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4 * c]]),
        "F": m([[0, 0, 0, 1], [0, 1, 0, 0], [0, 2, 1, 0], [1, 0, -a, 2 * c]]),
        "P": m([[0, 0, -2 * a, -2 * c], [2, 0, d, b], [0, 0, -2, 0], [0, 2, 0, 1]]),
        "C": m([[-hb, hd, d, b], [0, 0, 0, 1], [0, 1, -2, 0], [1, 0, 0, -2]]),
        "D'": m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 4, 0], [0, 0, 0, -2 * c]]),
        "F'": m([[0, 0, 0, 1], [0, 1, 0, 0], [0, 2, 1, 0], [1, 0, -a, 0]]),
        "P'": m([[0, 0, -2 * a, -2 * c], [2, 0, d, b], [0, 0, -2, 0], [0, 1, 0, 0]]),
        "C'": m([[0, hd, d, -hb], [1, 0, 0, 0], [0, 1, -2, 0], [0, 0, 0, 1]]),
        "Delta": IntMatrix.diag([1, 1, 1, 0]),
        "F'DeltaF^-1": m([[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [-2 * c, 0, 0, 1]]),
    }


@dataclass(frozen=True)
class FactorizationCheck:
    sol_product: bool
    cobordism_product: bool
    F_unimodular: bool
    F_prime_unimodular: bool
    transfer_matrix: bool

    @property
    def passed(self) -> bool:
        return all((self.sol_product, self.cobordism_product, self.F_unimodular,
                    self.F_prime_unimodular, self.transfer_matrix))


def check_printed_factorization(S: SolManifold) -> FactorizationCheck:
    m = printed_factorization(S)
    return FactorizationCheck(
        sol_product=m["F"] @ m["P"] @ m["C"] == m["D"] and m["P"] == presentations(S)["S"],
        cobordism_product=m["F'"] @ m["P'"] @ m["C'"] == m["D'"],
        F_unimodular=abs(m["F"].det()) == 1 and abs(m["C"].det()) == 1,
        F_prime_unimodular=abs(m["F'"].det()) == 1 and abs(m["C'"].det()) == 1,
        transfer_matrix=m["F'"] @ m["Delta"] @ m["F"].inverse() == m["F'DeltaF^-1"],
    )
