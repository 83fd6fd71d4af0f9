import itertools
from collections import Counter

import pytest

from grand_antiprism import cells
from grand_antiprism.cells import (
    DISSECTED_ICOSAHEDRON, VERTEX_FIGURE_OF_C, VERTEX_FIGURE_ORBITS, CensusMismatchError, PointSet,
    cell_census, literal_tetrahedra_around_c, ring_signature_of, tetrahedra_at, vertex_figure,
)
from grand_antiprism.golden import SIGMA, TAU
from grand_antiprism.hull import Facet, centroid, dist_sq, polyhedron_structure
from grand_antiprism.icosian import C, EDGE_SQ, default_group
from grand_antiprism.quaternion import E3, Q_ONE, q_mul
from grand_antiprism.symmetry import h2_roots, isometry_apply, stabilizer_of


def test_vertex_set_is_icosians_minus_roots(ctx):
    ga = ctx.ga
    assert len(ga) == 100
    assert set(ga.points) == set(default_group().elements) - set(h2_roots())
    assert C in ga and Q_ONE not in ga


def test_point_set_rejects_duplicates():
    with pytest.raises(ValueError):
        PointSet((Q_ONE, Q_ONE))


def test_rings(ctx):
    ga = ctx.ga
    rel = cells.verify_ring_relations(ga)
    assert len(rel) == 9 and all(rel.values())
    assert ga.ring(C) == 1 and ga.ring(q_mul(E3, C)) == 2


def test_ga_is_one_aut_orbit(ctx):
    images = {isometry_apply(g, C) for g in ctx.aut.elements}
    assert images == set(ctx.ga.points)
    stab = stabilizer_of(ctx.aut, C)
    assert stab.order == 4


def test_tetrahedra_are_the_surviving_600_cell_cliques(ctx):
    ga = set(ctx.ga.points)
    surviving = {
        frozenset(ctx.group.elements[i] for i in f.vertex_indices)
        for f in ctx.i_facets if all(ctx.group.elements[i] in ga for i in f.vertex_indices)
    }
    assert len(surviving) == 300
    tets = {frozenset(ctx.ga.points[i] for i in f.vertex_indices)
            for f in ctx.ga_facets if f.cell_type == "tetrahedron"}
    assert tets == surviving


def test_census(ctx):
    census = cell_census(ctx.ga_facets, ctx.ga)
    assert census.as_dict() == {"tetrahedra": 300, "tetra_22": 100, "tetra_31": 100, "tetra_13": 100,
                                "antiprisms": 20, "per_vertex_ok": True}


def test_census_mismatch_is_reported(ctx):
    antiprisms = [f for f in ctx.ga_facets if f.cell_type == "pentagonal_antiprism"]
    with pytest.raises(CensusMismatchError, match="antiprisms: 19 != 20"):
        cell_census([f for f in ctx.ga_facets if f is not antiprisms[0]], ctx.ga)
    loose = cell_census(ctx.ga_facets[:10], ctx.ga, strict=False)
    assert not loose.per_vertex_ok


def test_tetrahedra_around_c(ctx):
    found = tetrahedra_at(C, ctx.ga_facets, ctx.ga)
    assert len(found) == 12
    lit = literal_tetrahedra_around_c()
    assert {k: len(v) for k, v in lit.items()} == {(2, 2): 4, (3, 1): 6, (1, 3): 2}
    assert set(itertools.chain(*lit.values())) == set(found)
    for sig, tets in lit.items():
        for t in tets:
            assert ring_signature_of(t, ctx.ga) == sig
            assert {dist_sq(p, q) for p, q in itertools.combinations(t, 2)} == {EDGE_SQ}


def test_antiprism_cells(ctx):
    assert cells.check_antiprism_centers(ctx.ga_facets, ctx.ga)
    assert cells.antiprisms_from_icosahedra(ctx.ga_facets, ctx.ga)
    assert cells.pentagon_edge_directions_ok()
    for f in ctx.ga_facets:
        if f.cell_type == "pentagonal_antiprism":
            c = centroid(ctx.ga.points[i] for i in f.vertex_indices)
            assert c.norm_sq() == TAU * TAU / 4


def test_vertex_figure_of_c(ctx):
    fig = vertex_figure(C, ctx.ga, ctx.aut)
    assert set(fig.points) == set(VERTEX_FIGURE_OF_C)
    assert all(c[0] == TAU / 2 for c in fig.coordinates)
    assert set(fig.coords3d) == DISSECTED_ICOSAHEDRON
    label = {q: i + 1 for i, q in enumerate(VERTEX_FIGURE_OF_C)}
    assert {frozenset(label[q] for q in o) for o in fig.orbits} == VERTEX_FIGURE_ORBITS


def test_vertex_figure_completes_icosahedron(ctx):
    fig = vertex_figure(C, ctx.ga)
    removed = cells.removed_neighbours(C, ctx.ga)
    assert removed == sorted([Q_ONE, cells.B])
    assert cells.completes_icosahedron(fig, ctx.ga)
    # the two deleted neighbours, in the same 2× basis coordinates
    extra = {tuple(2 * x for x in cells.q_in_basis(q, fig.basis)[1:]) for q in removed}
    assert extra == {(SIGMA, -1, 0), (-1, 0, -SIGMA)}


def test_every_vertex_figure_is_dissected(ctx):
    for v in ctx.ga.points[::9]:
        fig = vertex_figure(v, ctx.ga)
        assert len(fig.points) == 10
        assert cells.completes_icosahedron(fig, ctx.ga)
        assert Counter(len(o) for o in vertex_figure(v, ctx.ga, ctx.aut).orbits) == {2: 3, 4: 1}


def test_vertex_figure_errors(ctx):
    with pytest.raises(ValueError):
        vertex_figure(Q_ONE, ctx.ga)


def test_facet_is_hashable_by_indices(ctx):
    f = ctx.ga_facets[0]
    assert f == Facet(f.vertex_indices, ctx.ga_facets[1].plane)


def test_vertex_figure_faces(ctx):
    """The two deleted neighbours are adjacent, leaving 12 triangles and two
    trapezoids that share the unit edge."""
    a, b = cells.removed_neighbours(C, ctx.ga)
    assert dist_sq(a, b) == EDGE_SQ
    fig = vertex_figure(C, ctx.ga)
    poly = polyhedron_structure(fig.points, C)
    assert Counter(len(f) for f in poly.faces) == {3: 12, 4: 2}
    assert poly.edge_lengths() == {EDGE_SQ: 21, 1: 1}
    quads = [f for f in poly.faces if len(f) == 4]
    assert len(set(quads[0]) & set(quads[1])) == 2
    assert len(tetrahedra_at(C, ctx.ga_facets, ctx.ga)) == sum(len(f) == 3 for f in poly.faces)
