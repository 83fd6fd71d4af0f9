"""The binary icosahedral group I (the 120 vertices of the 600-cell).

The group is generated by multiplicative closure from the two order-10
quaternions ``b`` and ``c``; an independent literal list of the nine
conjugacy classes is kept for cross-checking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .golden import ONE, SIGMA, TAU, ZERO, GoldenNumber
from .quaternion import E3, Q_ONE, GoldenQuaternion, q_conjugate, q_mul, q_scalar_product

__all__ = [
    "ClosureDivergedError",
    "NotInGroupError",
    "IcosianGroup",
    "ConjClass",
    "ConjClassTable",
    "B",
    "C",
    "named_constants",
    "listed_conjugacy_classes",
    "build_icosian_group",
    "element_order",
    "classify_table1",
    "icosahedron_of",
    "neighbours_at",
    "conjugacy_classes",
    "default_group",
    "rewriting_identities",
    "icosahedron_around_one",
    "EDGE_SQ",
]

HALF = Fraction(1, 2)

# squared edge length of the 600-cell, sigma^2 = sigma + 1
EDGE_SQ = SIGMA * SIGMA

B = GoldenQuaternion(TAU * HALF, SIGMA * HALF, HALF, 0)
C = GoldenQuaternion(TAU * HALF, -SIGMA * HALF, HALF, 0)


class ClosureDivergedError(RuntimeError):
    pass


class NotInGroupError(ValueError):
    pass


def named_constants() -> tuple[GoldenQuaternion, GoldenQuaternion, GoldenQuaternion]:
    """The quaternions ``b``, ``c`` and ``e3`` everything else is built from."""
    return B, C, E3


def _h(*xs) -> GoldenQuaternion:
    return GoldenQuaternion(*(x * HALF for x in xs))


def _signed(values):
    """All sign choices on the nonzero entries of ``values``."""
    nz = [i for i, v in enumerate(values) if v]
    for signs in itertools.product((1, -1), repeat=len(nz)):
        out = list(values)
        for i, s in zip(nz, signs):
            out[i] = out[i] * s
        yield out


def _cyclic_family(real, u, v):
    """``½(real ± u e_i ± v e_{i+2})`` for the three cyclic placements.

    The 12-element classes are customarily listed as ``½(x ± e1 ± y e3)``:
    unit coefficient on ``e_i``, the other coefficient on ``e_{i-1}``.
    """
    out = []
    for i in range(3):
        imag = [ZERO, ZERO, ZERO]
        imag[i] = u
        imag[(i - 1) % 3] = v
        for s in _signed(imag):
            out.append(_h(real, *s))
    return out


def listed_conjugacy_classes() -> dict[str, tuple[int, list[GoldenQuaternion]]]:
    """Literal transcription of the conjugacy-class table: label -> (order, members)."""
    twelve = {
        "12(1)+": (10, _cyclic_family(TAU, ONE, SIGMA)),
        "12(1)-": (5, _cyclic_family(-TAU, ONE, SIGMA)),
    }
    # ½(σ ± e1 ± τ e2): here the second coefficient sits on e_{i+1}
    def primed(real):
        out = []
        for i in range(3):
            imag = [ZERO, ZERO, ZERO]
            imag[i] = ONE
            imag[(i + 1) % 3] = TAU
            for s in _signed(imag):
                out.append(_h(real, *s))
        return out

    def twenty(real):
        out = [_h(real, *s) for s in _signed([ONE, ONE, ONE])]
        for i in range(3):
            imag = [ZERO, ZERO, ZERO]
            imag[i] = TAU
            imag[(i + 1) % 3] = SIGMA
            out.extend(_h(real, *s) for s in _signed(imag))
        return out

    thirty = []
    for i in range(3):
        imag = [ZERO, ZERO, ZERO]
        imag[i] = ONE
        thirty.extend(GoldenQuaternion(0, *s) for s in _signed(imag))
    for i in range(3):
        imag = [ZERO, ZERO, ZERO]
        imag[i] = SIGMA
        imag[(i + 1) % 3] = TAU
        imag[(i + 2) % 3] = ONE
        thirty.extend(_h(ZERO, *s) for s in _signed(imag))

    return {
        "1": (1, [Q_ONE]),
        "-1": (2, [-Q_ONE]),
        **twelve,
        "12'(1)+": (10, primed(SIGMA)),
        "12'(1)-": (5, primed(-SIGMA)),
        "20(1)+": (6, twenty(ONE)),
        "20(1)-": (3, twenty(-ONE)),
        "30(1)": (4, thirty),
    }


@dataclass(frozen=True)
class IcosianGroup:
    elements: tuple[GoldenQuaternion, ...]
    index: dict = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, q) -> bool:
        return q in self.index

    def position(self, q: GoldenQuaternion) -> int:
        try:
            return self.index[q]
        except KeyError:
            raise NotInGroupError(f"{q!r} is not in the group") from None


def build_icosian_group(generators=(B, C), cap: int = 120) -> IcosianGroup:
    """Multiplicative closure of ``generators``, sorted lexicographically."""
    seen = {Q_ONE}
    frontier = [Q_ONE]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = q_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise ClosureDivergedError(
                            f"closure exceeded {cap} elements; arithmetic is inconsistent"
                        )
        frontier = nxt
    elements = tuple(sorted(seen))
    return IcosianGroup(elements, {q: i for i, q in enumerate(elements)})


_DEFAULT_GROUP: IcosianGroup | None = None


def default_group() -> IcosianGroup:
    global _DEFAULT_GROUP
    if _DEFAULT_GROUP is None:
        _DEFAULT_GROUP = build_icosian_group()
    return _DEFAULT_GROUP


def element_order(q: GoldenQuaternion, group: IcosianGroup | None = None) -> int:
    """Smallest ``n >= 1`` with ``q**n == 1``."""
    group = group or default_group()
    if q not in group:
        raise NotInGroupError(f"{q!r} is not in the group")
    x, n = q, 1
    while x != Q_ONE:
        x = q_mul(x, q)
        n += 1
    return n


@dataclass(frozen=True)
class ConjClass:
    label: str
    order: int
    real_part: GoldenNumber
    members: frozenset  # indices into the group

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ConjClassTable:
    classes: tuple[ConjClass, ...]

    def by_label(self, label: str) -> ConjClass:
        for c in self.classes:
            if c.label == label:
                return c
        raise KeyError(label)

    def by_real_part(self, r) -> ConjClass:
        for c in self.classes:
            if c.real_part == r:
                return c
        raise KeyError(r)

    def label_of(self, index: int) -> str:
        for c in self.classes:
            if index in c.members:
                return c.label
        raise KeyError(index)


_LABEL_BY_REAL = [
    (ONE, "1"),
    (-ONE, "-1"),
    (TAU * HALF, "12(1)+"),
    (-TAU * HALF, "12(1)-"),
    (SIGMA * HALF, "12'(1)+"),
    (-SIGMA * HALF, "12'(1)-"),
    (GoldenNumber(HALF), "20(1)+"),
    (GoldenNumber(-HALF), "20(1)-"),
    (ZERO, "30(1)"),
]


def classify_table1(group: IcosianGroup | None = None) -> ConjClassTable:
    """Partition the group by real part; each block is one conjugacy class."""
    group = group or default_group()
    blocks: dict[GoldenNumber, set[int]] = {}
    for i, q in enumerate(group.elements):
        blocks.setdefault(q.real(), set()).add(i)
    known = dict(_LABEL_BY_REAL)
    if set(blocks) != set(known):
        raise ValueError("unexpected real parts in the group")
    classes = []
    for real, label in _LABEL_BY_REAL:
        members = blocks[real]
        rep = group.elements[min(members)]
        classes.append(ConjClass(label, element_order(rep, group), real, frozenset(members)))
    return ConjClassTable(tuple(classes))


def conjugacy_classes(group: IcosianGroup | None = None) -> list[frozenset]:
    """Conjugacy classes computed from the definition ``{g x g^-1}``."""
    group = group or default_group()
    remaining = set(group.elements)
    out = []
    while remaining:
        x = min(remaining)
        cls = frozenset(q_mul(q_mul(g, x), q_conjugate(g)) for g in group.elements)
        out.append(frozenset(group.position(q) for q in cls))
        remaining -= cls
    return out


def icosahedron_of(q: GoldenQuaternion, group: IcosianGroup | None = None) -> frozenset:
    """The twelve neighbours ``12(1)+ · q`` of ``q`` on the 600-cell."""
    group = group or default_group()
    if q not in group:
        raise NotInGroupError(f"{q!r} is not in the group")
    half_tau = TAU * HALF
    shell = [p for p in group.elements if p.real() == half_tau]
    return frozenset(q_mul(p, q) for p in shell)


def neighbours_at(q: GoldenQuaternion, points, dist_sq=EDGE_SQ) -> list[GoldenQuaternion]:
    """Points of ``points`` at squared distance ``dist_sq`` from ``q``."""
    # |p - q|^2 = |p|^2 + |q|^2 - 2(p, q)
    qq = q_scalar_product(q, q)
    return [p for p in points if q_scalar_product(p, p) + qq - 2 * q_scalar_product(p, q) == dist_sq]


def rewriting_identities() -> dict[str, bool]:
    """The relations between ``b``, ``c`` and ``e3`` used to list icosahedra."""
    b, c, e3 = B, C, E3
    bb, cb_ = q_conjugate(b), q_conjugate(c)
    m = q_mul
    return {
        "b²cb² = -c̄": m(m(m(b, b), c), m(b, b)) == -cb_,
        "b̄cb = cbc̄": m(m(bb, c), b) == m(m(c, b), cb_),
        "c̄bc = bcb̄": m(m(cb_, b), c) == m(m(b, c), bb),
        "e3 b = b̄ e3": m(e3, b) == m(bb, e3),
        "e3 c = c̄ e3": m(e3, c) == m(cb_, e3),
    }


def icosahedron_around_one() -> frozenset:
    """``{b, b̄} ∪ {b̄ᵐ c bᵐ, b̄ᵐ c̄ bᵐ : m = 0..4}``."""
    bb, cb_ = q_conjugate(B), q_conjugate(C)
    pts = {B, bb}
    for k in range(5):
        pts.add(q_mul(q_mul(bb**k, C), B**k))
        pts.add(q_mul(q_mul(bb**k, cb_), B**k))
    return frozenset(pts)
