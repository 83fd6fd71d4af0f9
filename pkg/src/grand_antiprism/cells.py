"""Vertices, rings and cells of the grand antiprism."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .golden import SIGMA, TAU, GoldenNumber
from .hull import Facet, centroid, dist_sq
from .icosian import B, C, EDGE_SQ, default_group, icosahedron_of, neighbours_at
from .quaternion import (
    E1,
    E2,
    E3,
    Q_ONE,
    GoldenQuaternion,
    OrthonormalBasis,
    q_conjugate,
    q_in_basis,
    q_mul,
    q_scalar_product,
)
from .symmetry import FiniteGroup, h2_roots, orbit_partition, stabilizer_of

__all__ = [
    "CensusMismatchError",
    "PointSet",
    "CellCensus",
    "VertexFigure",
    "ga_vertices",
    "verify_ring_relations",
    "antiprism_ring_centers",
    "check_antiprism_centers",
    "cell_census",
    "vertex_figure",
    "ring_signature",
    "ring_signature_of",
    "tetrahedra_at",
    "literal_tetrahedra_around_c",
    "removed_neighbours",
    "completes_icosahedron",
    "pentagon_edge_directions_ok",
    "antiprisms_from_icosahedra",
    "VERTEX_FIGURE_OF_C",
    "TETRAHEDRA_AROUND_C",
    "DISSECTED_ICOSAHEDRON",
    "VERTEX_FIGURE_ORBITS",
]

HALF = Fraction(1, 2)


class CensusMismatchError(AssertionError):
    pass


def _h(*xs) -> GoldenQuaternion:
    return GoldenQuaternion(*(GoldenNumber(0) + x * HALF for x in xs))


# the ten nearest vertices of c, in their conventional numbering q1..q10
VERTEX_FIGURE_OF_C = (
    _h(1, 1, 1, -1),
    _h(1, 0, TAU, -SIGMA),
    _h(TAU, 1, 0, -SIGMA),
    _h(1, TAU, -SIGMA, 0),
    _h(TAU, 0, -SIGMA, 1),
    _h(-SIGMA, 1, TAU, 0),
    _h(TAU, 1, 0, SIGMA),
    _h(TAU, 0, -SIGMA, -1),
    _h(1, 1, 1, 1),
    _h(1, 0, TAU, SIGMA),
)

# tetrahedra around c as (ring-1 part, ring-2 part), using 1-based q labels;
# 0 stands for c itself.  The (2, 2) cell through q10 is (c, q10; q1, q6): the
# variant with q9 in place of q6 is not a regular tetrahedron, |q1 - q9| = 1.
TETRAHEDRA_AROUND_C = {
    (2, 2): [((0, 2), (6, 9)), ((0, 3), (4, 9)), ((0, 7), (1, 4)), ((0, 10), (1, 6))],
    (3, 1): [
        ((0, 2, 5), (9,)), ((0, 2, 10), (6,)), ((0, 3, 5), (9,)),
        ((0, 3, 7), (4,)), ((0, 7, 8), (1,)), ((0, 8, 10), (1,)),
    ],
    (1, 3): [((0,), (1, 4, 6)), ((0,), (4, 6, 9))],
}

# vertex figure of c in the basis e_i c, first coordinate dropped, scaled by 2
DISSECTED_ICOSAHEDRON = frozenset(
    tuple(GoldenNumber(0) + x for x in t)
    for t in [
        (0, SIGMA, 1), (0, SIGMA, -1), (0, -SIGMA, 1), (0, -SIGMA, -1),
        (-SIGMA, 1, 0), (-SIGMA, -1, 0), (SIGMA, 1, 0),
        (1, 0, SIGMA), (1, 0, -SIGMA), (-1, 0, SIGMA),
    ]
)

# orbits of the stabilizer of c on q1..q10
VERTEX_FIGURE_ORBITS = frozenset(
    frozenset(s) for s in [(1, 9), (2, 3, 7, 10), (4, 6), (5, 8)]
)


@dataclass(frozen=True)
class PointSet:
    points: tuple[GoldenQuaternion, ...]
    labels: tuple[dict, ...] | None = None
    index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate points")
        if self.index is None:
            object.__setattr__(self, "index", {p: i for i, p in enumerate(self.points)})

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, q) -> bool:
        return q in self.index

    def ring(self, q: GoldenQuaternion) -> int:
        return self.labels[self.index[q]]["ring"]

    def ring_members(self, r: int) -> frozenset:
        return frozenset(p for p, lab in zip(self.points, self.labels) if lab["ring"] == r)


def _rings():
    powers = [B**m for m in range(10)]
    e3c = q_mul(E3, C)
    r1 = {q_mul(q_mul(bm, C), bn) for bm in powers for bn in powers}
    r2 = {q_mul(q_mul(bm, e3c), bn) for bm in powers for bn in powers}
    return r1, r2


def ga_vertices() -> PointSet:
    """The hundred vertices ``b^m c b^n`` (ring 1) and ``b^m e3 c b^n`` (ring 2)."""
    r1, r2 = _rings()
    if r1 & r2:
        raise ValueError("rings overlap")
    pts = tuple(sorted(r1 | r2))
    labels = tuple({"ring": 1 if p in r1 else 2} for p in pts)
    return PointSet(pts, labels)


def verify_ring_relations(ga: PointSet) -> dict[str, bool]:
    r1, r2 = ga.ring_members(1), ga.ring_members(2)
    left = lambda s: frozenset(q_mul(E3, x) for x in s)
    right = lambda s: frozenset(q_mul(x, E3) for x in s)
    q = VERTEX_FIGURE_OF_C
    return {
        "|R1| = 50": len(r1) == 50,
        "|R2| = 50": len(r2) == 50,
        "R1 ∩ R2 = ∅": not (r1 & r2),
        "e3 R1 = R2": left(r1) == r2,
        "R1 e3 = R2": right(r1) == r2,
        "e3 R2 = R1": left(r2) == r1,
        "R2 e3 = R1": right(r2) == r1,
        "c, q2, q3, q5, q7, q8, q10 in R1": all(
            x in r1 for x in (C, q[1], q[2], q[4], q[6], q[7], q[9])
        ),
        "q1, q4, q6, q9 in R2": all(x in r2 for x in (q[0], q[3], q[5], q[8])),
    }


def antiprism_ring_centers() -> list[GoldenQuaternion]:
    """Centres ``τ/2 · b^m`` and ``τ/2 · e3 b^m`` of the twenty antiprism cells."""
    return [r.scale(TAU * HALF) for r in h2_roots()]


def check_antiprism_centers(facets, ga: PointSet) -> bool:
    centres = set(antiprism_ring_centers())
    found = {
        centroid(ga.points[i] for i in f.vertex_indices)
        for f in facets if f.cell_type == "pentagonal_antiprism"
    }
    return found == centres


@dataclass(frozen=True)
class CellCensus:
    tetra_22: int
    tetra_31: int
    tetra_13: int
    antiprisms: int
    per_vertex: dict = field(repr=False)

    @property
    def tetrahedra(self) -> int:
        return self.tetra_22 + self.tetra_31 + self.tetra_13

    @property
    def per_vertex_ok(self) -> bool:
        return all(v == (12, 2) for v in self.per_vertex.values())

    def as_dict(self) -> dict:
        return {
            "tetrahedra": self.tetrahedra,
            "tetra_22": self.tetra_22,
            "tetra_31": self.tetra_31,
            "tetra_13": self.tetra_13,
            "antiprisms": self.antiprisms,
            "per_vertex_ok": self.per_vertex_ok,
        }


def ring_signature(facet: Facet, ga: PointSet) -> tuple[int, int]:
    rings = Counter(ga.labels[i]["ring"] for i in facet.vertex_indices)
    return rings[1], rings[2]


def ring_signature_of(points, ga: PointSet) -> tuple[int, int]:
    """Ring signature of a set of vertices given as quaternions."""
    rings = Counter(ga.ring(q) for q in points)
    return rings[1], rings[2]


def cell_census(facets, ga: PointSet, strict: bool = True) -> CellCensus:
    """Count tetrahedra by ring signature and cells per vertex.

    With ``strict`` a census differing from 100/100/100 tetrahedra, 20
    antiprisms and (12, 2) cells at every vertex raises
    :class:`CensusMismatchError` listing the differences.
    """
    sig = Counter()
    antiprisms = 0
    per_vertex = {i: [0, 0] for i in range(len(ga))}
    for f in facets:
        if f.cell_type == "tetrahedron":
            sig[ring_signature(f, ga)] += 1
            for i in f.vertex_indices:
                per_vertex[i][0] += 1
        elif f.cell_type == "pentagonal_antiprism":
            antiprisms += 1
            for i in f.vertex_indices:
                per_vertex[i][1] += 1
    census = CellCensus(
        sig[(2, 2)], sig[(3, 1)], sig[(1, 3)], antiprisms,
        {ga.points[i]: tuple(v) for i, v in per_vertex.items()},
    )
    if strict:
        diff = []
        for name, want in [("tetra_22", 100), ("tetra_31", 100), ("tetra_13", 100), ("antiprisms", 20)]:
            got = getattr(census, name)
            if got != want:
                diff.append(f"{name}: {got} != {want}")
        other = len(facets) - census.tetrahedra - antiprisms
        if other:
            diff.append(f"{other} unclassified facets")
        bad = sum(1 for v in census.per_vertex.values() if v != (12, 2))
        if bad:
            diff.append(f"{bad} vertices without (12, 2) incidences")
        if diff:
            raise CensusMismatchError("; ".join(diff))
    return census


def tetrahedra_at(v: GoldenQuaternion, facets, ga: PointSet) -> list[frozenset]:
    i = ga.index[v]
    return [
        frozenset(ga.points[j] for j in f.vertex_indices)
        for f in facets if f.cell_type == "tetrahedron" and i in f.vertex_indices
    ]


def literal_tetrahedra_around_c() -> dict[tuple[int, int], list[frozenset]]:
    """The twelve tetrahedra at c written out from their q labels."""
    def pt(label):
        return C if label == 0 else VERTEX_FIGURE_OF_C[label - 1]

    return {
        sig: [frozenset(pt(x) for x in a + b) for a, b in tets]
        for sig, tets in TETRAHEDRA_AROUND_C.items()
    }


@dataclass(frozen=True)
class VertexFigure:
    vertex: GoldenQuaternion
    points: tuple[GoldenQuaternion, ...]
    basis: OrthonormalBasis
    coordinates: tuple[tuple[GoldenNumber, ...], ...]
    orbits: tuple[frozenset, ...]

    @property
    def coords3d(self) -> tuple[tuple[GoldenNumber, ...], ...]:
        """Basis coordinates with the first dropped, scaled by 2."""
        return tuple(tuple(2 * x for x in c[1:]) for c in self.coordinates)


def vertex_figure(v: GoldenQuaternion, ga: PointSet, aut: FiniteGroup | None = None) -> VertexFigure:
    """The ten nearest vertices of ``v``, their coordinates in ``e_i v``, and
    their orbits under the stabilizer of ``v`` (when ``aut`` is given)."""
    if v not in ga:
        raise ValueError("vertex is not in the point set")
    near = tuple(sorted(neighbours_at(v, ga.points, EDGE_SQ)))
    basis = OrthonormalBasis.left_translate(v)
    coords = tuple(q_in_basis(q, basis) for q in near)
    orbits = ()
    if aut is not None:
        stab = stabilizer_of(aut, v)
        orbits = tuple(orbit_partition(near, tuple(stab.elements)))
    return VertexFigure(v, near, basis, coords, orbits)


def pentagon_edge_directions_ok() -> bool:
    """Pentagon edges of the antiprism around 1 are orthogonal to 1 and to
    ``σ e1 + e2`` and have squared length σ²."""
    bbar = q_conjugate(B)
    cbar = q_conjugate(C)
    direction = E1.scale(SIGMA) + E2
    ok = True
    for base in (C, cbar):
        ring = [q_mul(q_mul(bbar**m, base), B**m) for m in range(5)]
        ring_set = set(ring)
        # pentagon neighbours are the points at the edge distance inside the ring
        edges = 0
        for p in ring:
            for q in ring_set:
                if q != p and dist_sq(p, q) == EDGE_SQ:
                    d = p - q
                    edges += 1
                    ok &= q_scalar_product(d, Q_ONE) == 0
                    ok &= q_scalar_product(d, direction) == 0
        ok &= len(ring_set) == 5 and edges == 10
    return ok


def removed_neighbours(v: GoldenQuaternion, ga: PointSet) -> list[GoldenQuaternion]:
    """Nearest 600-cell vertices of ``v`` that were deleted to form ``ga``."""
    return sorted(q for q in neighbours_at(v, default_group().elements, EDGE_SQ) if q not in ga)


def completes_icosahedron(fig: VertexFigure, ga: PointSet) -> bool:
    """Adding the two deleted neighbours to the vertex figure gives a regular
    icosahedron: 12 points, each with 5 nearest neighbours at one distance."""
    extra = [
        tuple(2 * x for x in q_in_basis(q, fig.basis)[1:])
        for q in removed_neighbours(fig.vertex, ga)
    ]
    pts = list(fig.coords3d) + extra
    if len(set(pts)) != 12:
        return False

    def d2(p, q):
        return sum(((x - y) * (x - y) for x, y in zip(p, q)), GoldenNumber(0))

    counts = set()
    for p in pts:
        ds = Counter(d2(p, q) for q in pts if q != p)
        counts.add((min(ds), ds[min(ds)]))
    return len(counts) == 1 and next(iter(counts))[1] == 5


def antiprisms_from_icosahedra(facets, ga: PointSet) -> bool:
    """Every antiprism cell is the icosahedron around a root ``r`` with the two
    neighbouring roots removed."""
    expected = set()
    roots = set(h2_roots())
    for r in roots:
        ico = icosahedron_of(r)
        expected.add(frozenset(ico - roots))
    found = {
        frozenset(ga.points[i] for i in f.vertex_indices)
        for f in facets if f.cell_type == "pentagonal_antiprism"
    }
    return all(len(s) == 10 for s in expected) and found == expected
