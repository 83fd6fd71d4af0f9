"""Exact supporting-hyperplane machinery for point sets in R^4.

Two independent routes find the facets of a convex point configuration:

* :func:`faces_within` tests every affinely independent subset of the right
  size (brute force; also used one or two dimensions down, for the 2-faces of
  a cell or the sides of a polygon);
* :func:`enumerate_facets` gift-wraps: from one facet it rotates the
  supporting hyperplane about each ridge until it meets the next points.

Both use only exact golden-field sign tests.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .golden import GoldenNumber
from .linalg import Hyperplane, affine_rank, hyperplane_through, null_space
from .quaternion import Q_ONE, GoldenQuaternion, q_scalar_product

__all__ = [
    "DegenerateInputError",
    "Facet",
    "Polyhedron",
    "faces_within",
    "enumerate_facets",
    "brute_force_facets",
    "polyhedron_structure",
    "classify_cell",
    "dist_sq",
    "centroid",
]


class DegenerateInputError(ValueError):
    pass


def dist_sq(p: GoldenQuaternion, q: GoldenQuaternion) -> GoldenNumber:
    d = p - q
    return q_scalar_product(d, d)


def centroid(points) -> GoldenQuaternion:
    pts = list(points)
    s = pts[0]
    for p in pts[1:]:
        s = s + p
    return s / len(pts)


def faces_within(points: Sequence[GoldenQuaternion], normals=()) -> list[tuple[int, ...]]:
    """Codimension-one faces of the hull of ``points`` inside their affine span.

    ``normals`` are directions orthogonal to the subspace holding the points
    (empty for full-dimensional input).  Every affinely independent subset of
    size ``4 - len(normals)`` spans a candidate hyperplane; a candidate is a
    face when all points lie weakly on one side of it.  Returns the sorted
    index tuples of the faces, in sorted order.
    """
    pts = list(points)
    k = 4 - len(normals)
    n = len(pts)
    if n < k:
        raise DegenerateInputError("too few points for the subspace dimension")
    found: dict[frozenset, tuple[int, ...]] = {}
    covered: set[tuple[int, ...]] = set()
    for subset in itertools.combinations(range(n), k):
        if subset in covered:
            continue
        plane = hyperplane_through([pts[i] for i in subset], normals)
        if plane is None:
            continue
        signs = [plane.side(p) for p in pts]
        if 1 in signs and -1 in signs:
            continue
        if 1 not in signs and -1 not in signs:
            raise DegenerateInputError("points do not span the subspace")
        face = tuple(i for i, s in enumerate(signs) if s == 0)
        found[frozenset(face)] = face
        covered.update(itertools.combinations(face, k))
    return sorted(found.values())


@dataclass(frozen=True)
class Polyhedron:
    """Face structure of a 3-dimensional cell (indices are local to ``points``)."""

    points: tuple[GoldenQuaternion, ...]
    faces: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def face_cycle(self, face: tuple[int, ...]) -> tuple[int, ...]:
        """Vertices of ``face`` in boundary order, starting at its smallest index."""
        fs = set(face)
        adj = {i: [] for i in face}
        for a, b in self.edges:
            if a in fs and b in fs:
                adj[a].append(b)
                adj[b].append(a)
        start = min(face)
        cycle = [start]
        prev, cur = None, start
        while True:
            nxt = min(x for x in adj[cur] if x != prev)
            if nxt == start:
                break
            cycle.append(nxt)
            prev, cur = cur, nxt
        return tuple(cycle)

    def edge_lengths(self) -> Counter:
        return Counter(dist_sq(self.points[a], self.points[b]) for a, b in self.edges)


def polyhedron_structure(points: Sequence[GoldenQuaternion], normal: GoldenQuaternion) -> Polyhedron:
    """2-faces and edges of a 3-polytope lying in a hyperplane with the given normal."""
    pts = tuple(points)
    faces = faces_within(pts, [normal])
    edges = set()
    for f, g in itertools.combinations(faces, 2):
        common = set(f) & set(g)
        if len(common) == 2:
            edges.add(tuple(sorted(common)))
    return Polyhedron(pts, tuple(faces), tuple(sorted(edges)))


def classify_cell(points: Sequence[GoldenQuaternion], normal: GoldenQuaternion | None = None) -> str:
    """``tetrahedron``, ``pentagonal_antiprism`` (uniform) or ``other``.

    Classification is by distances and incidences only, so any congruent
    copy classifies the same way.
    """
    pts = list(points)
    if len(pts) == 4:
        lengths = {dist_sq(p, q) for p, q in itertools.combinations(pts, 2)}
        return "tetrahedron" if len(lengths) == 1 else "other"
    if len(pts) != 10 or normal is None:
        return "other"
    poly = polyhedron_structure(pts, normal)
    sizes = Counter(len(f) for f in poly.faces)
    if sizes != Counter({3: 10, 5: 2}) or len(poly.edges) != 20:
        return "other"
    if len(poly.edge_lengths()) != 1:
        return "other"
    return "pentagonal_antiprism"


@dataclass(frozen=True)
class Facet:
    vertex_indices: tuple[int, ...]
    plane: Hyperplane = field(compare=False)
    cell_type: str = field(default="other", compare=False)

    def __len__(self) -> int:
        return len(self.vertex_indices)


def _plane_key(plane: Hyperplane):
    return (plane.normal.key, plane.offset.parts)


def _pivot(pts, plane: Hyperplane, keep: Sequence[int], m: GoldenQuaternion) -> Hyperplane:
    """Rotate ``plane`` about the points ``keep``, tilting towards direction ``m``.

    ``m`` must be orthogonal to the plane normal and to the directions spanned
    by ``keep``.  Rotating by an angle ``θ`` in (0, π) gives normals
    ``cot θ · n + m``; a point at depth ``a > 0`` below the plane with slope
    ``s = (m, y - keep)`` is met at ``cot θ = s / a``.  The first point met
    maximises that ratio.
    """
    n, h = plane.normal, plane.offset
    k = q_scalar_product(m, pts[keep[0]])
    nk, mk = n.key, m.key
    ha, hb, hd = h.parts
    ka, kb, kd = k.parts
    best = None  # (slope, depth) as raw (a, b) pairs over positive denominators
    for y in pts:
        yk = y.key
        # depth = h - (n, y), slope = (m, y) - k, both over the common scale
        na, nb, nd = _dot_raw(nk, yk)
        da, db = ha * nd - na * hd, hb * nd - nb * hd
        if not (da or db):
            continue
        ma, mb, md = _dot_raw(mk, yk)
        sa, sb = ma * kd - ka * md, mb * kd - kb * md
        # positive factors nd*hd and md*kd do not affect the ratio's ordering
        # once both are folded in consistently; scale slope by 1/(md kd),
        # depth by 1/(nd hd)
        sd, dd = md * kd, nd * hd
        if best is None or _ratio_gt(sa, sb, sd, da, db, dd, *best):
            best = (sa, sb, sd, da, db, dd)
    if best is None:
        raise DegenerateInputError("all points lie on the hyperplane")
    sa, sb, sd, da, db, dd = best
    ratio = GoldenNumber._raw(sa, sb, sd) / GoldenNumber._raw(da, db, dd)
    return Hyperplane.make(n.scale(ratio) + m, ratio * h + k)


def _dot_raw(pk, qk):
    ra = rb = 0
    for i in range(0, 8, 2):
        x, y, u, v = pk[i], pk[i + 1], qk[i], qk[i + 1]
        ra += x * u + 5 * y * v
        rb += x * v + y * u
    return ra, rb, pk[8] * qk[8]


def _gsign(a, b) -> int:
    if a >= 0 and b >= 0:
        return 0 if (a == 0 and b == 0) else 1
    if a <= 0 and b <= 0:
        return -1
    diff = a * a - 5 * b * b
    s = (diff > 0) - (diff < 0)
    return s if a > 0 else -s


def _ratio_gt(sa, sb, sd, da, db, dd, ta, tb, td, ea, eb, ed) -> bool:
    """``(s/sd)/(d/dd) > (t/td)/(e/ed)`` for depths ``d, e > 0``."""
    # compare s*dd*e*td vs t*ed*d*sd  (all denominators positive)
    lhs_a, lhs_b = sa * ea + 5 * sb * eb, sa * eb + sb * ea
    rhs_a, rhs_b = ta * da + 5 * tb * db, ta * db + tb * da
    f, g = dd * td, ed * sd
    return _gsign(lhs_a * f - rhs_a * g, lhs_b * f - rhs_b * g) > 0


def _on_plane(pts, plane: Hyperplane) -> tuple[int, ...]:
    return tuple(i for i, p in enumerate(pts) if plane.side(p) == 0)


def _direction_orthogonal(vectors) -> list[GoldenQuaternion]:
    ns = null_space([list(v.coords) for v in vectors], 4)
    return [GoldenQuaternion(*v) for v in ns]


def _first_facet(pts) -> Hyperplane:
    top = max(p.q0 for p in pts)
    plane = Hyperplane.make(Q_ONE, top)
    face = _on_plane(pts, plane)
    while affine_rank([pts[i] for i in face]) < 3:
        p0 = pts[face[0]]
        dirs = [plane.normal] + [pts[i] - p0 for i in face[1:]]
        m = _direction_orthogonal(dirs)[0]
        plane = _pivot(pts, plane, face, m)
        face = _on_plane(pts, plane)
    return plane


def _neighbour(pts, plane: Hyperplane, facet: tuple[int, ...], ridge: tuple[int, ...]):
    r0 = pts[ridge[0]]
    dirs = [plane.normal] + [pts[i] - r0 for i in ridge[1:]]
    (m,) = _direction_orthogonal_rank(dirs)
    k = q_scalar_product(m, r0)
    inner = next(i for i in facet if i not in ridge)
    if (q_scalar_product(m, pts[inner]) - k).sign() > 0:
        m = -m
    return _pivot(pts, plane, ridge, m)


def _direction_orthogonal_rank(dirs):
    ms = _direction_orthogonal(dirs)
    if len(ms) != 1:
        raise DegenerateInputError("ridge does not span a 2-plane")
    return ms


def _ridges(pts, plane: Hyperplane, facet: tuple[int, ...]) -> list[tuple[int, ...]]:
    local = faces_within([pts[i] for i in facet], [plane.normal])
    return [tuple(facet[j] for j in f) for f in local]


def enumerate_facets(points: Sequence[GoldenQuaternion], threads: int = 1, classify: bool = True) -> list[Facet]:
    """All facets of the convex hull of ``points`` (exact gift-wrapping).

    Each facet carries its canonical supporting hyperplane, oriented so the
    remaining points are strictly inside.  Output is sorted by vertex indices
    and independent of ``threads``.
    """
    pts = list(points)
    if len(pts) < 5 or affine_rank(pts) < 4:
        raise DegenerateInputError("points do not affinely span 4-space")
    start = _first_facet(pts)
    planes = {_plane_key(start): start}
    vertex_sets = {_plane_key(start): _on_plane(pts, start)}
    frontier = [start]

    def expand(plane):
        facet = _on_plane(pts, plane)
        return [_neighbour(pts, plane, facet, r) for r in _ridges(pts, plane, facet)]

    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while frontier:
            results = pool.map(expand, frontier) if pool else map(expand, frontier)
            nxt = []
            for found in results:
                for p in found:
                    key = _plane_key(p)
                    if key not in planes:
                        planes[key] = p
                        vertex_sets[key] = _on_plane(pts, p)
                        nxt.append(p)
            frontier = sorted(nxt, key=_plane_key)
    finally:
        if pool:
            pool.shutdown()

    facets = []
    for key, plane in planes.items():
        idx = vertex_sets[key]
        kind = classify_cell([pts[i] for i in idx], plane.normal) if classify else "other"
        facets.append(Facet(idx, plane, kind))
    facets.sort(key=lambda f: f.vertex_indices)
    return facets


def brute_force_facets(points: Sequence[GoldenQuaternion]) -> list[tuple[int, ...]]:
    """Facet vertex sets by testing every 4-subset (small inputs only)."""
    return faces_within(points, ())
