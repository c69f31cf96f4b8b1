"""
Spin^c bookkeeping on M_{a,b}.

Spin^c(M) is an H^2(M)-torsor.  After fixing a base structure theta that
extends over both cobordisms, a structure theta + x is stored as the element x
of H^2(M) (in the Smith-style coordinates of the stored H^2 diagrams).  The
first Chern class obeys c1(theta + x) = c1(theta) + 2x and conjugation is
x -> -c1(theta) - x.

c1(theta) itself is not transcribed.  It is pinned down by a small model of
Spin^c on the dihedral ends: a structure on M that extends over W_{-b} and W_a
has one d-invariant, so the two restrictions to D_{-b} and D_a must carry equal
d-invariants.  Searching over the (unknown) placement of those restrictions
leaves a single value of c1 on each dihedral end, and hence on theta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable

from .abelian import elements
from .cobordism import H2Diagram, h2_diagram
from .dinv import d_dihedral

CLASS_LABELS = ("S_ba", "S_b", "S_a", "S_empty")

Element = tuple[int, ...]


def _add(x: Element, y: Element, orders) -> Element:
    return tuple((p + q) % o for p, q, o in zip(x, y, orders))


def _scale(k: int, x: Element, orders) -> Element:
    return tuple((k * p) % o for p, o in zip(x, orders))


def _zero(orders) -> Element:
    return (0,) * len(orders)


def conjugate(x: Element, c1_theta: Element, orders) -> Element:
    """Conjugate of theta + x, again written relative to theta."""
    return _add(_scale(-1, c1_theta, orders), _scale(-1, x, orders), orders)


# ---------------------------------------------------------------------------
# Partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpincPartition:
    a: int
    b: int
    diagram: H2Diagram
    orders: tuple[int, ...]
    theta: Element
    image_b: frozenset
    image_a: frozenset
    classes: dict[str, frozenset]

    @property
    def parity_case(self) -> tuple[int, int]:
        return self.diagram.parity_case

    def label_of(self, x: Element) -> str:
        for label, members in self.classes.items():
            if tuple(x) in members:
                return label
        raise KeyError(x)

    def doubled(self, label: str) -> frozenset:
        return frozenset(_scale(2, x, self.orders) for x in self.classes[label])

    def to_dict(self) -> dict:
        return {
            "parity_case": list(self.parity_case),
            "h2": list(self.orders),
            "theta": list(self.theta),
            "classes": {k: sorted(map(list, v)) for k, v in self.classes.items()},
        }


def partition(a: int, b: int) -> SpincPartition:
    """Split Spin^c(M_{a,b}) by which of W_{-b}, W_a each structure extends over."""
    diagram = h2_diagram(a % 2, b % 2)
    orders = diagram.groups["M"]
    img_b = diagram.image("iota_W_minus_b")
    img_a = diagram.image("iota_W_a")
    everything = frozenset(elements(orders))
    classes = {
        "S_ba": img_b & img_a,
        "S_b": img_b - img_a,
        "S_a": img_a - img_b,
        "S_empty": everything - (img_b | img_a),
    }
    for label, members in classes.items():
        if len(members) != 4:
            raise ArithmeticError(f"{label} has {len(members)} elements, expected 4")
    theta = min(classes["S_ba"])
    # re-anchor so that theta sits at the origin (a no-op for subgroup-based classes)
    classes = {k: frozenset(_add(x, _scale(-1, theta, orders), orders) for x in v)
               for k, v in classes.items()}
    return SpincPartition(a, b, diagram, orders, _zero(orders), img_b, img_a, classes)


# ---------------------------------------------------------------------------
# Dihedral ends
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DihedralSpincModel:
    """
    Spin^c(D_n) written relative to an unknown base u, with u at offset zero.
    The d-invariant of u + x is d_values[x]; c1(u + x) = c1_base + 2x.
    """

    n: int
    orders: tuple[int, ...]
    d_values: dict
    c1_base: Element

    def d(self, x: Element) -> Fraction:
        return self.d_values[tuple(x)]


def dihedral_models(n: int) -> Iterable[DihedralSpincModel]:
    """
    Every placement of the restriction u on D_n compatible with what is known:
    for odd n, H^2 = Z/4 with d = (n +- 2)/4 on the two self-conjugate
    structures and 0 on the other two; for even n, H^2 = Z/2 + Z/2, every
    structure is self-conjugate and the four values can sit anywhere.
    """
    values = d_dihedral(n)
    if n % 2:
        hi, lo = Fraction(n + 2, 4), Fraction(n - 2, 4)
        base = {0: hi, 1: Fraction(0), 2: lo, 3: Fraction(0)}
        for t in range(4):
            d_values = {((x - t) % 4,): base[x] for x in range(4)}
            yield DihedralSpincModel(n, (4,), d_values, ((2 * t) % 4,))
    else:
        pts = elements((2, 2))
        for perm in sorted(set(permutations(values))):
            yield DihedralSpincModel(n, (2, 2), dict(zip(pts, perm)), (0, 0))


@lru_cache(maxsize=None)
def _restriction_table(case: tuple[int, int], side: str) -> dict[Element, Element]:
    """x in Im(iota_W) -> offset on the dihedral end of the unique extension of theta + x."""
    diagram = h2_diagram(*case)
    w_map = diagram.maps[f"iota_W_{side}"]
    d_map = diagram.maps[f"iota_D_{side}"]
    if not w_map.is_injective():
        raise ArithmeticError(f"iota_W_{side} is not injective; extensions are not unique")
    return {w_map(y): d_map(y) for y in elements(w_map.source)}


def _restrict(diagram: H2Diagram, side: str, x: Element) -> Element:
    return _restriction_table(diagram.parity_case, side)[tuple(x)]


@dataclass(frozen=True)
class EndConfiguration:
    model_b: DihedralSpincModel
    model_a: DihedralSpincModel


def feasible_configurations(part: SpincPartition) -> list[EndConfiguration]:
    """Dihedral placements under which every structure in S_ba gets one d-invariant."""
    a, b = part.a, part.b
    out = []
    for mb in dihedral_models(-b):
        for ma in dihedral_models(a):
            if all(mb.d(_restrict(part.diagram, "minus_b", x)) == ma.d(_restrict(part.diagram, "a", x))
                   for x in part.classes["S_ba"]):
                out.append(EndConfiguration(mb, ma))
    return out


def model_d_blocks(part: SpincPartition) -> set[tuple[tuple[Fraction, ...], ...]]:
    """(S_ba, S_b, S_a) d-multisets produced by each feasible configuration."""
    found = set()
    for cfg in feasible_configurations(part):
        def d_of(x):
            if x in part.image_b:
                return cfg.model_b.d(_restrict(part.diagram, "minus_b", x))
            return cfg.model_a.d(_restrict(part.diagram, "a", x))
        found.add(tuple(tuple(sorted(d_of(x) for x in part.classes[k])) for k in ("S_ba", "S_b", "S_a")))
    return found


# ---------------------------------------------------------------------------
# Chern classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionData:
    parity_case: tuple[int, int]
    c1_u_b: Element
    c1_u_a: Element
    preimage_b: frozenset   # in H^2(W_{-b})
    preimage_a: frozenset   # in H^2(W_a)
    image_b: frozenset      # in H^2(M)
    image_a: frozenset
    c1_theta: Element

    def to_dict(self) -> dict:
        def s(xs):
            return sorted(map(list, xs))
        return {
            "parity_case": list(self.parity_case),
            "c1_u_b": list(self.c1_u_b), "c1_u_a": list(self.c1_u_a),
            "preimage_b": s(self.preimage_b), "preimage_a": s(self.preimage_a),
            "image_b": s(self.image_b), "image_a": s(self.image_a),
            "c1_theta": list(self.c1_theta),
        }


def _only(values: set, what: str):
    if len(values) != 1:
        raise ArithmeticError(f"{what} is not determined: candidates {sorted(values)}")
    return next(iter(values))


def extension_data(a: int, b: int) -> ExtensionData:
    part = partition(a, b)
    diagram = part.diagram
    configs = feasible_configurations(part)
    c1_u_b = _only({cfg.model_b.c1_base for cfg in configs}, "c1 on D_{-b}")
    c1_u_a = _only({cfg.model_a.c1_base for cfg in configs}, "c1 on D_a")
    pre_b = diagram.maps["iota_D_minus_b"].preimage(c1_u_b)
    pre_a = diagram.maps["iota_D_a"].preimage(c1_u_a)
    img_b = frozenset(diagram.maps["iota_W_minus_b"](x) for x in pre_b)
    img_a = frozenset(diagram.maps["iota_W_a"](x) for x in pre_a)
    c1_theta = _only(set(img_b & img_a), "c1(theta)")
    return ExtensionData(part.parity_case, c1_u_b, c1_u_a, pre_b, pre_a, img_b, img_a, c1_theta)


@dataclass(frozen=True)
class ChernAssignment:
    parity_case: tuple[int, int]
    orders: tuple[int, ...]
    c1_theta: Element
    values: dict[str, Element]

    def to_dict(self) -> dict:
        return {k: list(v) for k, v in self.values.items()}


def chern_classes(a: int, b: int) -> ChernAssignment:
    """c1 on each of the four classes, via c1(theta + x) = c1(theta) + 2x."""
    part = partition(a, b)
    c1_theta = extension_data(a, b).c1_theta
    values = {}
    for label in CLASS_LABELS:
        seen = {_add(c1_theta, _scale(2, x, part.orders), part.orders) for x in part.classes[label]}
        values[label] = _only(seen, f"c1 on {label}")
    return ChernAssignment(part.parity_case, part.orders, c1_theta, values)


def self_conjugate_classes(a: int, b: int) -> frozenset[str]:
    """Labels of the classes whose structures are self-conjugate, i.e. have c1 = 0."""
    chern = chern_classes(a, b)
    zero = _zero(chern.orders)
    return frozenset(k for k, v in chern.values.items() if v == zero)


# printed values, kept for comparison only; nothing above reads them
CHERN_TABLE = {
    (0, 0): {"S_ba": (0, 0), "S_b": (2, 0), "S_a": (0, 2), "S_empty": (2, 2)},
    (0, 1): {"S_ba": (2, 2), "S_b": (2, 0), "S_a": (0, 0), "S_empty": (0, 2)},
    (1, 1): {"S_ba": (0, 0, 2), "S_b": (0, 0, 0), "S_a": (0, 0, 0), "S_empty": (0, 0, 2)},
}

# a printed "0" on a Z/2 + Z/2 end is written as (0, 0)
EXTENDING_THETA_TABLE = {
    (0, 0): {
        "c1_u_b": (0, 0), "c1_u_a": (0, 0),
        "preimage_b": {(0, 0), (2, 0)}, "preimage_a": {(0, 0), (0, 2)},
        "image_b": {(0, 0), (2, 0)}, "image_a": {(0, 0), (0, 2)},
        "c1_theta": (0, 0),
    },
    (0, 1): {
        "c1_u_b": (2,), "c1_u_a": (0, 0),
        "preimage_b": {(1, 2), (0, 2)}, "preimage_a": {(0, 0), (2, 2)},
        "image_b": {(2, 2), (0, 2)}, "image_a": {(0, 0), (2, 2)},
        "c1_theta": (2, 2),
    },
    (1, 1): {
        "c1_u_b": (2,), "c1_u_a": (2,),
        "preimage_b": {(0, 2), (1, 2)}, "preimage_a": {(1, 0), (0, 2)},
        "image_b": {(0, 0, 2), (0, 1, 2)}, "image_a": {(0, 1, 0), (0, 0, 2)},
        "c1_theta": (0, 0, 2),
    },
}

SELF_CONJUGATE_TABLE = {(0, 0): {"S_ba"}, (0, 1): {"S_a"}, (1, 1): {"S_b", "S_a"}}


def _reduce_set(xs, orders) -> frozenset:
    return frozenset(tuple(v % o for v, o in zip(x, orders)) for x in xs)


def compare_extension_row(data: ExtensionData) -> list[str]:
    """Cells of the printed extension table that disagree with a computed row."""
    row = EXTENDING_THETA_TABLE[data.parity_case]
    d = h2_diagram(*data.parity_case)
    w_b, w_a, m = d.groups["W_minus_b"], d.groups["W_a"], d.groups["M"]
    checks = {
        "c1_u_b": (data.c1_u_b, tuple(row["c1_u_b"])),
        "c1_u_a": (data.c1_u_a, tuple(row["c1_u_a"])),
        "preimage_b": (data.preimage_b, _reduce_set(row["preimage_b"], w_b)),
        "preimage_a": (data.preimage_a, _reduce_set(row["preimage_a"], w_a)),
        "image_b": (data.image_b, _reduce_set(row["image_b"], m)),
        "image_a": (data.image_a, _reduce_set(row["image_a"], m)),
        "c1_theta": (data.c1_theta, tuple(row["c1_theta"])),
    }
    return [k for k, (ours, theirs) in checks.items() if ours != theirs]
