"""The dual of the grand antiprism, at a global scale of √2.

Scaling every cell centre by √2 keeps all coordinates in Q(√5): tetrahedron
centres land on the sphere of squared radius 2, antiprism centres on the
sphere of squared radius τ².
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .cells import PointSet
from .golden import SIGMA, SQRT5, TAU, GoldenNumber
from .hull import Polyhedron, centroid, dist_sq, polyhedron_structure
from .icosian import B
from .linalg import rank
from .quaternion import E1, E2, E3, GoldenQuaternion, OrthonormalBasis, q_conjugate, q_in_basis, q_mul, q_scalar_product
from .symmetry import (
    FiniteGroup,
    Isometry,
    aut_generators,
    group_closure,
    isometry_apply,
    orbit_partition,
    stabilizer_of,
)

__all__ = [
    "UnknownCellTypeError",
    "UnclassifiableFaceError",
    "SetMismatchError",
    "DualVertex",
    "DualCell",
    "TETRA_SCALE",
    "dual_vertices",
    "dual_cell_of",
    "all_dual_cells",
    "classify_dual_faces",
    "classify_quadrilateral",
    "cell_coordinates",
    "DUAL_CELL_OF_C",
    "DUAL_CELL_COORDS",
    "DUAL_CELL_ORBITS",
    "DUAL_CELL_FACES",
    "label_cell",
    "pair_stabilizer",
    "cells_around_pair",
    "scaled_24cell_parts",
    "conjugation_orbit",
    "cross_check_120cell",
    "dual_orbit_decomposition",
]

HALF = Fraction(1, 2)
TETRA_SCALE = 4 / (TAU * TAU)


class UnknownCellTypeError(ValueError):
    pass


class UnclassifiableFaceError(ValueError):
    pass


class SetMismatchError(AssertionError):
    def __init__(self, message, missing=(), extra=()):
        super().__init__(f"{message}: {len(missing)} missing, {len(extra)} extra")
        self.missing = frozenset(missing)
        self.extra = frozenset(extra)


@dataclass(frozen=True)
class DualVertex:
    position: GoldenQuaternion
    source_cell: int
    shell: str

    def as_dict(self) -> dict:
        return {"position": self.position.to_json(), "cell": self.source_cell, "shell": self.shell}


def dual_vertices(facets, ga: PointSet) -> list[DualVertex]:
    """One dual vertex per cell, in the order of ``facets``."""
    out = []
    for i, f in enumerate(facets):
        centre = centroid(ga.points[j] for j in f.vertex_indices)
        if f.cell_type == "tetrahedron":
            out.append(DualVertex(centre.scale(TETRA_SCALE), i, "inner"))
        elif f.cell_type == "pentagonal_antiprism":
            out.append(DualVertex(centre.scale(2), i, "outer"))
        else:
            raise UnknownCellTypeError(f"cell {i} has type {f.cell_type!r}")
    return out


@dataclass(frozen=True)
class DualCell:
    ga_vertex: GoldenQuaternion
    vertex_ids: tuple[int, ...]
    points: tuple[GoldenQuaternion, ...]
    structure: Polyhedron
    faces: tuple[tuple[tuple[int, ...], str], ...]

    @property
    def face_census(self) -> dict[str, int]:
        return dict(sorted(Counter(kind for _, kind in self.faces).items()))

    def level(self) -> set[GoldenNumber]:
        return {q_scalar_product(p, self.ga_vertex) for p in self.points}


def dual_cell_of(v: GoldenQuaternion, facets, duals: list[DualVertex], ga: PointSet) -> DualCell:
    """Dual cell of ``v``: the centres of the fourteen cells containing ``v``."""
    i = ga.index[v]
    ids = tuple(k for k, f in enumerate(facets) if i in f.vertex_indices)
    pts = tuple(duals[k].position for k in ids)
    poly = polyhedron_structure(pts, v)
    faces = tuple((poly.face_cycle(f), _classify(poly, f)) for f in poly.faces)
    return DualCell(v, ids, pts, poly, faces)


def all_dual_cells(facets, duals, ga: PointSet, threads: int = 1) -> list[DualCell]:
    if threads <= 1:
        return [dual_cell_of(v, facets, duals, ga) for v in ga.points]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda v: dual_cell_of(v, facets, duals, ga), ga.points))


def _parallel(u: GoldenQuaternion, w: GoldenQuaternion) -> bool:
    return rank([list(u.coords), list(w.coords)]) == 1


def classify_quadrilateral(pts) -> str:
    """``kite`` or ``trapezoid`` for four points in boundary order."""
    p = list(pts)
    sides = [dist_sq(p[k], p[(k + 1) % 4]) for k in range(4)]
    for k in range(4):
        a, b, c, d = (sides[(k + j) % 4] for j in range(4))
        if a == b and c == d and a != c:
            return "kite"
    for k in range(2):
        # sides k and k+2 parallel, the other two (legs) equal
        u = p[(k + 1) % 4] - p[k]
        w = p[(k + 3) % 4] - p[(k + 2) % 4]
        if _parallel(u, w) and sides[(k + 1) % 4] == sides[(k + 3) % 4] and sides[k] != sides[k + 2]:
            return "trapezoid"
    raise UnclassifiableFaceError(f"quadrilateral with sides {[str(s) for s in sides]}")


def _classify(poly: Polyhedron, face) -> str:
    cyc = poly.face_cycle(face)
    pts = [poly.points[i] for i in cyc]
    if len(cyc) == 5:
        sides = {dist_sq(pts[k], pts[(k + 1) % 5]) for k in range(5)}
        if len(sides) == 1:
            return "pentagon"
        raise UnclassifiableFaceError("irregular pentagon")
    if len(cyc) == 4:
        return classify_quadrilateral(pts)
    raise UnclassifiableFaceError(f"face with {len(cyc)} vertices")


def classify_dual_faces(cell: DualCell) -> dict:
    """Face classes with their vertex cycles and squared edge lengths."""
    report = {"pentagon": [], "kite": [], "trapezoid": []}
    for cyc, kind in cell.faces:
        pts = [cell.points[i] for i in cyc]
        lengths = [dist_sq(pts[k], pts[(k + 1) % len(pts)]) for k in range(len(pts))]
        report[kind].append({"cycle": cyc, "edge_sq": lengths})
    return report


def _q(*xs) -> GoldenQuaternion:
    return GoldenQuaternion(*(GoldenNumber(0) + x * HALF for x in xs))


# centres of the fourteen cells at c, in the conventional numbering c1..c14
DUAL_CELL_OF_C = (
    _q(TAU, 1, 2, -SIGMA),
    _q(TAU, -SIGMA, SQRT5, 0),
    _q(2, -SIGMA, TAU, 1),
    _q(2, TAU, 1, SIGMA),
    _q(SQRT5, TAU, -SIGMA, 0),
    _q(SQRT5, 1, 1, -1),
    _q(TAU, TAU, TAU, -SIGMA * SIGMA),
    _q(TAU, 1, 2, SIGMA),
    _q(TAU, TAU, TAU, SIGMA * SIGMA),
    _q(2, TAU, 1, -SIGMA),
    _q(SQRT5, 1, 1, 1),
    _q(2, -SIGMA, TAU, -1),
    GoldenQuaternion(TAU, 0, 0, 0),
    B.scale(TAU),
)

_S2 = SIGMA * SIGMA

# the same points in the basis e_i c, first coordinate dropped, scaled by 2
DUAL_CELL_COORDS = tuple(
    tuple(GoldenNumber(0) + x for x in t)
    for t in [
        (-SIGMA, -SIGMA, -SIGMA), (0, 1, _S2), (_S2, 0, 1), (_S2, 0, -1),
        (-SIGMA, SIGMA, SIGMA), (-_S2, 0, -1), (-SIGMA, -SIGMA, SIGMA), (0, 1, -_S2),
        (1, _S2, 0), (1, -_S2, 0), (-SIGMA, SIGMA, -SIGMA), (SIGMA, -SIGMA, SIGMA),
        (-1, -TAU, 0), (-TAU, 0, 1),
    ]
)

DUAL_CELL_ORBITS = frozenset(
    frozenset(s) for s in [(1, 4, 8, 10), (2, 5), (3, 6, 11, 12), (7, 9), (13, 14)]
)

# face cycles of the cell of c, by class, using the c-labels above
DUAL_CELL_FACES = {
    "pentagon": [(1, 2, 8, 7, 9), (8, 12, 6, 4, 7), (7, 4, 5, 10, 9), (9, 10, 11, 3, 1)],
    "kite": [(14, 2, 1, 3), (14, 2, 8, 12), (13, 5, 4, 6), (13, 11, 10, 5)],
    "trapezoid": [(13, 14, 12, 6), (13, 14, 3, 11)],
}


def cell_coordinates(cell: DualCell) -> tuple[tuple[GoldenNumber, ...], ...]:
    """Coordinates in ``e_i v`` with the first (constant) one dropped, times 2."""
    basis = OrthonormalBasis.left_translate(cell.ga_vertex)
    return tuple(tuple(2 * x for x in q_in_basis(p, basis)[1:]) for p in cell.points)


def label_cell(cell: DualCell, reference=DUAL_CELL_OF_C) -> dict[int, int]:
    """Map local point indices to 1-based reference labels; raises on mismatch."""
    pos = {p: k + 1 for k, p in enumerate(reference)}
    missing = set(reference) - set(cell.points)
    extra = set(cell.points) - set(reference)
    if missing or extra:
        raise SetMismatchError("cell points differ from the reference", missing, extra)
    return {i: pos[p] for i, p in enumerate(cell.points)}


def same_cycle(a, b) -> bool:
    """Equality of polygon cycles up to rotation and reversal."""
    if len(a) != len(b) or set(a) != set(b):
        return False
    n = len(a)
    b2 = list(b) + list(b)
    r = list(reversed(b)) * 2
    target = list(a)
    return any(b2[k:k + n] == target or r[k:k + n] == target for k in range(n))


def pair_stabilizer() -> FiniteGroup:
    """``C2 × W(H2')`` built from ``[b̄, b]``, ``[e3, -e3]*`` and ``[b̄², -b̄²]*``."""
    bbar = q_conjugate(B)
    bbar2 = q_mul(bbar, bbar)
    gens = [
        Isometry(bbar, B),
        Isometry(E3, -E3, True),
        Isometry(bbar2, -bbar2, True),
    ]
    return group_closure(gens, name="C2xW(H2')")


def cells_around_pair(cell: DualCell, facets, duals, ga: PointSet) -> list[DualCell]:
    """The cells reached from ``cell`` by powers of ``[b̄, b]``."""
    g = Isometry(q_conjugate(B), B)
    out = []
    v = cell.ga_vertex
    for _ in range(10):
        if any(c.ga_vertex == v for c in out):
            break
        out.append(dual_cell_of(v, facets, duals, ga))
        v = isometry_apply(g, v)
    return out


def conjugation_orbit(seeds) -> frozenset:
    """``{b^i t b^j}`` over all seeds ``t``."""
    powers = [B**k for k in range(10)]
    return frozenset(q_mul(q_mul(bi, t), bj) for t in seeds for bi in powers for bj in powers)


def scaled_24cell_parts() -> tuple[list, list, list]:
    """The three 8-point parts of the 24-cell, scaled by √2."""
    one = GoldenQuaternion(1, 0, 0, 0)
    units = (one, E1, E2, E3)

    def signed_pairs(i, j):
        return [units[i].scale(s) + units[j].scale(t) for s in (1, -1) for t in (1, -1)]

    v1 = signed_pairs(0, 1) + signed_pairs(2, 3)
    v2 = signed_pairs(0, 2) + signed_pairs(3, 1)
    v3 = signed_pairs(0, 3) + signed_pairs(1, 2)
    return v1, v2, v3


def cross_check_120cell(duals: list[DualVertex]) -> dict:
    """Inner dual vertices against the √2-scaled 120-cell pieces."""
    v1, v2, v3 = scaled_24cell_parts()
    one = GoldenQuaternion(1, 0, 0, 0)
    j1 = conjugation_orbit(v1)
    j3p = conjugation_orbit([one.scale(s) + E3.scale(t) for s in (1, -1) for t in (1, -1)])
    j = conjugation_orbit(v1 + v2 + v3)
    inner = frozenset(d.position for d in duals if d.shell == "inner")
    target = j1 | j3p
    if inner != target:
        raise SetMismatchError("inner dual vertices", target - inner, inner - target)
    dec = sorted(len(o) for o in orbit_partition(j, aut_generators()))
    return {
        "J1": len(j1),
        "J3'": len(j3p),
        "J": len(j),
        "J_decomposition": dec,
        "inner_equals_union": True,
        "inner_in_J": inner <= j,
    }


def dual_orbit_decomposition(duals: list[DualVertex]) -> list[int]:
    pts = [d.position for d in duals]
    return sorted(len(o) for o in orbit_partition(pts, aut_generators()))


def cell_vertex_orbits(cell: DualCell, aut: FiniteGroup) -> list[frozenset]:
    """Orbits of the stabilizer of the cell's GA vertex on its fourteen points."""
    stab = stabilizer_of(aut, cell.ga_vertex)
    return orbit_partition(cell.points, tuple(stab.elements))
