"""Slices of the grand antiprism by hyperplanes orthogonal to an axis."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .cells import PointSet, ga_vertices
from .expr import parse_golden
from .golden import SIGMA, TAU, GoldenNumber
from .hull import dist_sq, faces_within, polyhedron_structure
from .icosian import B
from .quaternion import E1, E2, E3, GoldenQuaternion, q_conjugate, q_scalar_product
from .symmetry import FiniteGroup, Isometry, group_closure, isometry_apply, orbit_partition

__all__ = [
    "AxisNotFixedError",
    "Slice",
    "AXES",
    "parse_axis",
    "slice_ga",
    "slice_group",
    "decompose_slice",
    "distance_multiset",
    "congruent",
    "shape_of",
    "AntiprismProfile",
    "antiprism_profile",
    "compare_listed",
    "LISTED_TEN_PLUS",
    "LISTED_TEN_PLUS_PRIME",
    "LISTED_EQUATOR",
    "LISTED_P1",
    "LISTED_P2",
]

HALF = Fraction(1, 2)


class AxisNotFixedError(ValueError):
    pass


AXES = {
    "1": GoldenQuaternion(1, 0, 0, 0),
    "e1": E1,
    "e2": E2,
    "e3": E3,
}


def parse_axis(text: str) -> GoldenQuaternion:
    """``1``, ``e1``, ``e2``, ``e3`` or four comma-separated golden expressions
    for a unit quaternion."""
    key = text.strip()
    if key in AXES:
        return AXES[key]
    parts = key.split(",")
    if len(parts) != 4:
        raise ValueError(f"axis must be 1, e1, e2, e3 or x,y,z,w; got {text!r}")
    q = GoldenQuaternion(*(parse_golden(p) for p in parts))
    if q.norm_sq() != 1:
        raise ValueError("axis must be a unit quaternion")
    return q


@dataclass(frozen=True)
class Slice:
    axis: GoldenQuaternion
    level: GoldenNumber
    points: tuple[GoldenQuaternion, ...]
    shape_tag: str = ""

    def __len__(self) -> int:
        return len(self.points)

    def as_dict(self) -> dict:
        return {
            "level": self.level.to_json(),
            "level_float": float(self.level),
            "count": len(self.points),
            "shape": self.shape_tag,
        }


def distance_multiset(points) -> Counter:
    return Counter(dist_sq(p, q) for p, q in itertools.combinations(points, 2))


def congruent(a, b) -> bool:
    """Equal multisets of pairwise squared distances."""
    return distance_multiset(a) == distance_multiset(b)


def _is_dodecahedron(points, axis) -> bool:
    faces = faces_within(points, [axis])
    return len(faces) == 12 and all(len(f) == 5 for f in faces)


@dataclass(frozen=True)
class AntiprismProfile:
    """Edge data of a solid with the faces of a pentagonal antiprism."""

    pentagon_edge_sq: tuple[GoldenNumber, ...]
    lateral_edge_sq: tuple[GoldenNumber, ...]

    @property
    def right(self) -> bool:
        """Two congruent regular pentagons joined by equal lateral edges."""
        return len(set(self.pentagon_edge_sq)) == 1 and len(set(self.lateral_edge_sq)) == 1

    @property
    def uniform(self) -> bool:
        return self.right and self.pentagon_edge_sq[0] == self.lateral_edge_sq[0]

    def as_dict(self) -> dict:
        return {
            "pentagon_edge_sq": sorted({str(x) for x in self.pentagon_edge_sq}),
            "lateral_edge_sq": sorted({str(x) for x in self.lateral_edge_sq}),
            "right": self.right,
            "uniform": self.uniform,
        }


def antiprism_profile(points, axis: GoldenQuaternion) -> AntiprismProfile | None:
    """Pentagon and lateral edge lengths, or ``None`` unless the hull of the
    ten points has 2 pentagons, 10 triangles and 20 edges."""
    pts = list(points)
    if len(pts) != 10:
        return None
    poly = polyhedron_structure(pts, axis)
    if Counter(len(f) for f in poly.faces) != Counter({3: 10, 5: 2}) or len(poly.edges) != 20:
        return None
    pent_edges = set()
    for f in poly.faces:
        if len(f) == 5:
            cyc = poly.face_cycle(f)
            pent_edges.update(tuple(sorted((cyc[k], cyc[(k + 1) % 5]))) for k in range(5))
    pent = tuple(dist_sq(pts[a], pts[b]) for a, b in sorted(pent_edges))
    lat = tuple(dist_sq(pts[a], pts[b]) for a, b in poly.edges if (a, b) not in pent_edges)
    return AntiprismProfile(pent, lat)


def shape_of(points, axis: GoldenQuaternion) -> str:
    """A short name for the solid a slice spans inside its hyperplane:
    ``pentagonal_antiprism`` (all edges equal), ``right_pentagonal_antiprism``
    (regular pentagons, equal lateral edges), ``dodecahedron`` or a point count."""
    pts = list(points)
    if len(pts) == 1:
        return "point"
    prof = antiprism_profile(pts, axis)
    if prof is not None and prof.uniform:
        return "pentagonal_antiprism"
    if prof is not None and prof.right:
        return "right_pentagonal_antiprism"
    if prof is not None:
        return "irregular_pentagonal_antiprism"
    if len(pts) == 20 and _is_dodecahedron(pts, axis):
        return "dodecahedron"
    return f"{len(pts)}-point set"


def slice_ga(axis: GoldenQuaternion, ga: PointSet | None = None, tag: bool = True) -> list[Slice]:
    """Partition of the vertices by the exact value of ``(axis, x)``, highest level first."""
    if axis.norm_sq() != 1:
        raise ValueError("axis must be a unit quaternion")
    ga = ga or ga_vertices()
    levels: dict[GoldenNumber, list] = {}
    for p in ga.points:
        levels.setdefault(q_scalar_product(axis, p), []).append(p)
    out = []
    for lev in sorted(levels, reverse=True):
        pts = tuple(sorted(levels[lev]))
        out.append(Slice(axis, lev, pts, shape_of(pts, axis) if tag else ""))
    return out


def slice_group() -> FiniteGroup:
    """``C2 × W(H2')`` generated by ``[1,1]*``, ``[b̄, b]`` and ``[e3, -e3]*``; it fixes 1."""
    one = GoldenQuaternion(1, 0, 0, 0)
    gens = [Isometry(one, one, True), Isometry(q_conjugate(B), B), Isometry(E3, -E3, True)]
    return group_closure(gens, name="C2xW(H2')")


def decompose_slice(s: Slice, h: FiniteGroup) -> list[Slice]:
    """Orbits of ``h`` on the slice; every element of ``h`` must fix the axis."""
    for g in h.elements:
        if isometry_apply(g, s.axis) != s.axis:
            raise AxisNotFixedError("group does not fix the slicing axis")
    parts = orbit_partition(s.points, tuple(h.elements))
    out = [Slice(s.axis, s.level, tuple(sorted(p)), shape_of(p, s.axis)) for p in parts]
    out.sort(key=lambda x: (-len(x), x.points))
    return out


def _h(*xs) -> GoldenQuaternion:
    return GoldenQuaternion(*(GoldenNumber(0) + x * HALF for x in xs))


def _pm2(*pattern):
    """Expand every list entry ``[x]`` into both signs ``±x``."""
    return [_h(*c) for c in itertools.product(*[(x[0], -x[0]) if isinstance(x, list) else (x,) for x in pattern])]


def _pmq(q):
    return [q, -q]


# the two halves of the dodecahedron at level 1/2, as customarily listed
LISTED_TEN_PLUS = [
    _h(1, 1, 1, 1), _h(1, -1, -1, -1), _h(1, -1, -1, 1), _h(1, 1, 1, -1),
    *_pm2(1, [SIGMA], 0, [TAU]),
    _h(1, TAU, -SIGMA, 0), _h(1, -TAU, SIGMA, 0),
]
LISTED_TEN_PLUS_PRIME = [
    _h(1, -1, 1, -1), _h(1, 1, -1, -1), _h(1, -1, 1, 1), _h(1, 1, -1, -1),
    *_pm2(1, 0, [TAU], [SIGMA]),
    _h(1, TAU, SIGMA, 0), _h(1, -TAU, -SIGMA, 0),
]

# the equatorial slice and its two halves
LISTED_EQUATOR = [
    *_pmq(E1), *_pmq(E2),
    *_pm2(0, [SIGMA], [TAU], [1]),
    *_pmq(_h(0, 1, SIGMA, TAU)), *_pmq(_h(0, 1, SIGMA, -TAU)),
    *_pmq(_h(0, -TAU, 1, SIGMA)), *_pmq(_h(0, TAU, -1, SIGMA)),
]
LISTED_P1 = [
    *_pmq(E1), *_pmq(_h(0, 1, SIGMA, TAU)), *_pmq(_h(0, 1, SIGMA, -TAU)),
    *_pmq(_h(0, -SIGMA, TAU, 1)), *_pmq(_h(0, -SIGMA, TAU, -1)),
]
LISTED_P2 = [
    *_pmq(E2), *_pmq(_h(0, TAU, -1, SIGMA)), *_pmq(_h(0, -TAU, 1, SIGMA)),
    *_pmq(_h(0, SIGMA, TAU, 1)), *_pmq(_h(0, SIGMA, TAU, -1)),
]


def compare_listed(listed_points, computed) -> dict:
    """Compare a hand-written point list with a computed set: duplicates, missing, extra."""
    counts = Counter(listed_points)
    dup = sorted(q for q, n in counts.items() if n > 1)
    got = set(computed)
    listed = set(listed_points)
    return {
        "listed": len(listed_points),
        "distinct": len(listed),
        "duplicates": dup,
        "missing": sorted(got - listed),
        "extra": sorted(listed - got),
        "match": listed == got and not dup,
    }
