"""The invariant suite behind ``grand-antiprism verify``.

Every check returns ``(ok, detail)``; details are deterministic strings, so a
report depends only on the mathematics and not on timing or thread count.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from . import cells, dual, slices
from .golden import SIGMA, TAU, GoldenNumber
from .hull import enumerate_facets
from .icosian import (
    B,
    C,
    EDGE_SQ,
    classify_table1,
    default_group,
    icosahedron_around_one,
    icosahedron_of,
    neighbours_at,
    rewriting_identities,
    listed_conjugacy_classes,
)
from .quaternion import E3, q_conjugate, q_mul
from .roots import DEFAULT_FUNCTIONAL, EXPECTED_WEIGHT_ORBITS, appendix_multiset, appendix_table, root_system_machinery
from .symmetry import (
    Isometry,
    build_standard_groups,
    group_closure,
    h2_roots,
    orbit_partition,
    stabilizer_of,
)

__all__ = ["Context", "Check", "CheckResult", "CHECKS", "run_checks", "format_report", "report_dict"]

FACET_BUDGET_S = 120.0
ORBIT_BUDGET_S = 120.0


class Context:
    """Lazily built, cached objects shared by the checks."""

    def __init__(self, threads: int = 1, functional=DEFAULT_FUNCTIONAL):
        self.threads = max(1, int(threads))
        self.functional = tuple(functional)
        self.timings: dict[str, float] = {}

    def _timed(self, key, fn):
        t = time.perf_counter()
        out = fn()
        self.timings[key] = time.perf_counter() - t
        return out

    @cached_property
    def group(self):
        return default_group()

    @cached_property
    def groups(self):
        return build_standard_groups(include_h4=True)

    @cached_property
    def aut(self):
        return self.groups["Aut(H2+H2')"]

    @cached_property
    def ga(self) -> cells.PointSet:
        return cells.ga_vertices()

    @cached_property
    def ga_facets(self):
        return self._timed("ga_facets", lambda: enumerate_facets(self.ga.points, threads=self.threads))

    @cached_property
    def i_facets(self):
        return self._timed("i_facets", lambda: enumerate_facets(self.group.elements, threads=self.threads))

    @cached_property
    def duals(self):
        return dual.dual_vertices(self.ga_facets, self.ga)

    @cached_property
    def dual_cells(self):
        return dual.all_dual_cells(self.ga_facets, self.duals, self.ga, threads=self.threads)

    @cached_property
    def cell_of_c(self):
        return dual.dual_cell_of(C, self.ga_facets, self.duals, self.ga)

    @cached_property
    def roots(self):
        return root_system_machinery(self.functional)

    @cached_property
    def appendix(self):
        return self._timed("appendix", lambda: appendix_table(self.roots, threads=self.threads))

    @cached_property
    def axis_one_slices(self):
        return slices.slice_ga(slices.AXES["1"], self.ga)


@dataclass(frozen=True)
class Check:
    criterion: int
    name: str
    run: Callable[[Context], tuple[bool, str]]


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    ok: bool
    detail: str


CHECKS: list[Check] = []


def check(criterion: int, name: str):
    def deco(fn):
        CHECKS.append(Check(criterion, name, fn))
        return fn
    return deco


def _sizes(parts) -> str:
    return "+".join(str(n) for n in sorted((len(p) for p in parts), reverse=True))


# ----------------------------------------------------------------- groups


@check(1, "group orders")
def _group_orders(ctx):
    g = ctx.groups
    got = {
        "I": len(ctx.group),
        "W(H2)": g["W(H2)"].order,
        "W(H2')": g["W(H2')"].order,
        "W(H2)xW(H2')": g["W(H2)xW(H2')"].order,
        "Aut(H2+H2')": g["Aut(H2+H2')"].order,
        "W(H3)": g["W(H3)"].order,
        "W(H4)": g["W(H4)"].order,
    }
    want = {"I": 120, "W(H2)": 10, "W(H2')": 10, "W(H2)xW(H2')": 100,
            "Aut(H2+H2')": 400, "W(H3)": 120, "W(H4)": 14400}
    return got == want, ", ".join(f"|{k}|={v}" for k, v in got.items())


@check(2, "conjugacy classes: sizes and element orders")
def _table_sizes(ctx):
    t = classify_table1(ctx.group)
    sizes = [c.size for c in t.classes]
    orders = [c.order for c in t.classes]
    ok = sizes == [1, 1, 12, 12, 12, 12, 20, 20, 30] and orders == [1, 2, 10, 5, 10, 5, 6, 3, 4]
    return ok, f"sizes {sizes}, orders {orders}"


@check(2, "conjugacy classes equal the literal class list")
def _table_literal(ctx):
    t = classify_table1(ctx.group)
    lit = listed_conjugacy_classes()
    ok = True
    for c in t.classes:
        order, members = lit[c.label]
        ok &= order == c.order and frozenset(members) == frozenset(ctx.group.elements[i] for i in c.members)
    return ok, f"{len(lit)} classes compared"


@check(2, "conjugacy classes equal the W(H3) orbits")
def _table_orbits(ctx):
    t = classify_table1(ctx.group)
    mine = {frozenset(ctx.group.elements[i] for i in c.members) for c in t.classes}
    wh3 = ctx.groups["W(H3)"]
    orbits = set(orbit_partition(ctx.group.elements, wh3.generators or tuple(wh3.elements)))
    return mine == orbits, f"{len(orbits)} orbits"


@check(3, "rewriting identities of b, c, e3")
def _identities(ctx):
    res = rewriting_identities()
    bad = [k for k, v in res.items() if not v]
    return not bad, "all five hold" if not bad else f"failed: {bad}"


@check(3, "12(1)+ = {b, b̄, b̄ᵐcbᵐ, b̄ᵐc̄bᵐ}")
def _icosahedron_one(ctx):
    t = classify_table1(ctx.group)
    cls = frozenset(ctx.group.elements[i] for i in t.by_label("12(1)+").members)
    return icosahedron_around_one() == cls, "12 points"


@check(3, "every vertex of the 600-cell has 12 nearest neighbours")
def _edge_regular(ctx):
    els = ctx.group.elements
    ok = all(len(neighbours_at(q, els, EDGE_SQ)) == 12 for q in els)
    ok &= all(icosahedron_of(q) == frozenset(neighbours_at(q, els, EDGE_SQ)) for q in els)
    return ok, "12(1)+ · q is the neighbour set of q"


# ------------------------------------------------------------ construction


@check(4, "vertex set = I minus the 20 roots")
def _ga_complement(ctx):
    roots = set(h2_roots())
    ga = set(ctx.ga.points)
    ok = len(ga) == 100 and len(roots) == 20 and ga | roots == set(ctx.group.elements) and not (ga & roots)
    return ok, f"|GA|={len(ga)}, |roots|={len(roots)}"


@check(4, "vertices form one Aut(H2+H2') orbit")
def _ga_orbit(ctx):
    parts = orbit_partition(ctx.ga.points, ctx.aut.generators)
    return len(parts) == 1, f"orbit sizes {_sizes(parts)}"


@check(4, "vertex stabilizer is C2xC2 = <[e3,-e3]*, [b̄²,-b̄²]*>")
def _ga_stabilizer(ctx):
    stab = stabilizer_of(ctx.aut, C)
    bb2 = q_mul(q_conjugate(B), q_conjugate(B))
    gen = group_closure([Isometry(E3, -E3, True), Isometry(bb2, -bb2, True)])
    klein = all(g.order() <= 2 for g in stab.elements)
    ok = stab.order == 4 and klein and stab.elements == gen.elements
    return ok, f"|Stab(c)|={stab.order}"


@check(5, "ring relations and memberships")
def _rings(ctx):
    res = cells.verify_ring_relations(ctx.ga)
    bad = [k for k, v in res.items() if not v]
    return not bad, f"{len(res)} relations" if not bad else f"failed: {bad}"


# ------------------------------------------------------------------- cells


@check(6, "cells of the grand antiprism")
def _census(ctx):
    facets = ctx.ga_facets
    kinds = Counter(f.cell_type for f in facets)
    try:
        census = cells.cell_census(facets, ctx.ga)
    except cells.CensusMismatchError as exc:
        return False, str(exc)
    ok = len(facets) == 320 and kinds == Counter(tetrahedron=300, pentagonal_antiprism=20)
    d = census.as_dict()
    return ok, (f"{len(facets)} facets: {kinds['tetrahedron']} tetrahedra, "
                f"{kinds['pentagonal_antiprism']} antiprisms; split "
                f"{d['tetra_22']}/{d['tetra_31']}/{d['tetra_13']}; (12, 2) at every vertex")


@check(6, "tetrahedra around c match the literal lists")
def _around_c(ctx):
    actual = set(cells.tetrahedra_at(C, ctx.ga_facets, ctx.ga))
    lit = cells.literal_tetrahedra_around_c()
    ok = all(cells.ring_signature_of(t, ctx.ga) == sig for sig, ts in lit.items() for t in ts)
    listed = {t for ts in lit.values() for t in ts}
    ok &= listed == actual and len(actual) == 12
    split = "+".join(str(len(lit[s])) for s in ((2, 2), (3, 1), (1, 3)))
    return ok, f"{len(actual)} tetrahedra, split {split}"


@check(6, "facet enumeration time for the grand antiprism")
def _facet_time(ctx):
    ctx.ga_facets
    ok = ctx.timings.get("ga_facets", 0.0) < FACET_BUDGET_S
    return ok, f"under {FACET_BUDGET_S:.0f} s"


@check(6, "antiprism cells are centred at τ/2·r and are icosahedra minus two roots")
def _antiprism_centres(ctx):
    ok = cells.check_antiprism_centers(ctx.ga_facets, ctx.ga)
    ok &= cells.antiprisms_from_icosahedra(ctx.ga_facets, ctx.ga)
    ok &= cells.pentagon_edge_directions_ok()
    return ok, "20 centres"


@check(6, "facet list does not depend on the thread count")
def _facet_threads(ctx):
    other = enumerate_facets(ctx.ga.points, threads=1 if ctx.threads > 1 else 4)
    same = [f.vertex_indices for f in other] == [f.vertex_indices for f in ctx.ga_facets]
    return same, "identical"


@check(7, "600-cell has 600 tetrahedral cells")
def _600cell(ctx):
    facets = ctx.i_facets
    kinds = Counter(f.cell_type for f in facets)
    return kinds == Counter(tetrahedron=600), f"{len(facets)} facets, all tetrahedra: {kinds == Counter(tetrahedron=600)}"


# ------------------------------------------------------------ vertex figure


@check(8, "vertex figure of c")
def _vertex_figure(ctx):
    vf = cells.vertex_figure(C, ctx.ga, ctx.aut)
    ok = set(vf.points) == set(cells.VERTEX_FIGURE_OF_C)
    ok &= all(c[0] == TAU / 2 for c in vf.coordinates)
    ok &= set(vf.coords3d) == cells.DISSECTED_ICOSAHEDRON
    labels = {q: i + 1 for i, q in enumerate(cells.VERTEX_FIGURE_OF_C)}
    orbits = frozenset(frozenset(labels[q] for q in o) for o in vf.orbits)
    ok &= orbits == cells.VERTEX_FIGURE_ORBITS
    ok &= cells.completes_icosahedron(vf, ctx.ga)
    shown = " ".join("(" + ",".join(f"q{i}" for i in sorted(o)) + ")" for o in sorted(orbits, key=min))
    return ok, f"10 points at level τ/2, orbits {shown}"


@check(8, "every vertex figure is a dissected icosahedron")
def _all_vertex_figures(ctx):
    ok = all(cells.completes_icosahedron(cells.vertex_figure(v, ctx.ga), ctx.ga) for v in ctx.ga.points)
    return ok, "100 vertices"


# ------------------------------------------------------------------- dual


@check(9, "dual vertices on two shells")
def _dual_shells(ctx):
    norms = Counter(d.position.norm_sq() for d in ctx.duals)
    ok = norms == Counter({GoldenNumber(2): 300, TAU * TAU: 20})
    outer = {d.position for d in ctx.duals if d.shell == "outer"}
    ok &= outer == {r.scale(TAU) for r in h2_roots()}
    return ok, f"{len(ctx.duals)} vertices: 300 with norm² 2, 20 with norm² τ²"


@check(9, "dual cells are flat with 4 pentagons, 4 kites, 2 trapezoids")
def _dual_cells(ctx):
    level = TAU * TAU / 2
    ok = len(ctx.dual_cells) == 100
    for cell in ctx.dual_cells:
        ok &= len(cell.points) == 14 and cell.level() == {level}
        ok &= cell.face_census == {"kite": 4, "pentagon": 4, "trapezoid": 2}
    return ok, "100 cells"


@check(9, "cell of c: points, coordinates, faces")
def _cell_of_c(ctx):
    cell = ctx.cell_of_c
    try:
        lab = dual.label_cell(cell)
    except dual.SetMismatchError as exc:
        return False, str(exc)
    coords = dual.cell_coordinates(cell)
    ok = all(coords[i] == dual.DUAL_CELL_COORDS[lab[i] - 1] for i in range(14))
    for kind, want in dual.DUAL_CELL_FACES.items():
        got = [tuple(lab[i] for i in cyc) for cyc, k in cell.faces if k == kind]
        ok &= len(got) == len(want) and all(any(dual.same_cycle(w, g) for g in got) for w in want)
    return ok, "14 points, faces match by label"


@check(9, "cell of c: stabilizer orbits and the pair group")
def _cell_orbits(ctx):
    cell = ctx.cell_of_c
    lab = dual.label_cell(cell)
    orbits = dual.cell_vertex_orbits(cell, ctx.aut)
    got = frozenset(frozenset(lab[cell.points.index(p)] for p in o) for o in orbits)
    ok = got == dual.DUAL_CELL_ORBITS
    pair_group = dual.pair_stabilizer()
    pair = {cell.points[i] for i in range(14) if lab[i] in (13, 14)}
    ok &= pair_group.order == 20
    ok &= all({g(p) for p in pair} == pair for g in pair_group.elements)
    around = dual.cells_around_pair(cell, ctx.ga_facets, ctx.duals, ctx.ga)
    ok &= len(around) == 5 and all(pair <= set(c.points) for c in around)
    return ok, f"{len(got)} orbits; pair group of order {pair_group.order}; {len(around)} cells share the pair"


@check(9, "inner dual vertices against the 120-cell")
def _dual_120(ctx):
    try:
        rep = dual.cross_check_120cell(ctx.duals)
    except dual.SetMismatchError as exc:
        return False, str(exc)
    ok = rep["J1"] == 200 and rep["J3'"] == 100 and rep["J"] == 600
    ok &= rep["J_decomposition"] == [100, 100, 200, 200]
    dec = dual.dual_orbit_decomposition(ctx.duals)
    ok &= dec == [20, 100, 200]
    j3 = rep["J3'"]
    return ok, f"|J1|={rep['J1']}, |J3'|={j3}, J splits {rep['J_decomposition']}, duals split {dec}"


# ------------------------------------------------------------------ slices


@check(10, "level inventory along 1")
def _levels(ctx):
    got = [(s.level, len(s)) for s in ctx.axis_one_slices]
    h = GoldenNumber(1) / 2
    want = [(TAU * h, 10), (h, 20), (-SIGMA * h, 10), (GoldenNumber(0), 20),
            (SIGMA * h, 10), (-h, 20), (-TAU * h, 10)]
    ok = got == want
    top, bottom = ctx.axis_one_slices[0], ctx.axis_one_slices[-1]
    ok &= slices.congruent(top.points, bottom.points)
    return ok, " ".join(f"{float(lv):+.3f}:{n}" for lv, n in got)


@check(10, "20+ splits 10+10 under C2xW(H2')")
def _twenty_split(ctx):
    g = slices.slice_group()
    half = next(s for s in ctx.axis_one_slices if s.level == GoldenNumber(1) / 2)
    parts = slices.decompose_slice(half, g)
    ok = g.order == 20 and [len(p) for p in parts] == [10, 10] and half.shape_tag == "dodecahedron"
    ok &= any(set(p.points) == set(slices.LISTED_TEN_PLUS) for p in parts)
    return ok, f"{_sizes(parts)} from a dodecahedron"


def _equator_parts(ctx):
    g = slices.slice_group()
    eq = next(s for s in ctx.axis_one_slices if s.level == 0)
    parts = slices.decompose_slice(eq, g)
    e1, e2 = slices.AXES["e1"], slices.AXES["e2"]
    p1 = next((p for p in parts if e1 in p.points), None)
    p2 = next((p for p in parts if e2 in p.points), None)
    return eq, parts, p1, p2


@check(10, "equatorial slice splits into P1 and P2")
def _equator(ctx):
    eq, parts, p1, p2 = _equator_parts(ctx)
    if p1 is None or p2 is None or p1 is p2:
        return False, "±e1 and ±e2 not separated"
    ok = len(parts) == 2 and set(eq.points) == set(slices.LISTED_EQUATOR)
    ok &= set(p1.points) == set(slices.LISTED_P1) and set(p2.points) == set(slices.LISTED_P2)
    ok &= slices.distance_multiset(p1.points) != slices.distance_multiset(p2.points)
    return ok, f"{_sizes(parts)}, distance multisets differ, P1 {p1.shape_tag}, P2 {p2.shape_tag}"


@check(10, "P1 is a regular pentagonal antiprism")
def _p1_regular(ctx):
    _, _, p1, _ = _equator_parts(ctx)
    if p1 is None:
        return False, "no part contains e1"
    prof = slices.antiprism_profile(p1.points, slices.AXES["1"])
    if prof is None:
        return False, "hull is not an antiprism"
    pent = sorted({str(x) for x in prof.pentagon_edge_sq})
    lat = sorted({str(x) for x in prof.lateral_edge_sq})
    return prof.uniform, f"pentagon edge² {', '.join(pent)}; lateral edge² {', '.join(lat)}"


# ---------------------------------------------------------------- appendix


@check(11, "Cartan matrix of the simple roots is that of H4")
def _cartan(ctx):
    m = ctx.roots.cartan
    want = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    # the τ-bond sits at the first end of the chain
    want[0][1] = want[1][0] = -TAU
    ok = all(m[i][j] == want[i][j] for i in range(4) for j in range(4))
    return ok, f"{len(ctx.roots.positive)} positive roots, 4 simple roots"


@check(11, "W(H4) orbit decompositions under Aut(H2+H2')")
def _appendix(ctx):
    lines = ctx.appendix
    ok = appendix_multiset(lines) == appendix_multiset(EXPECTED_WEIGHT_ORBITS)
    big = ctx.timings.get("appendix", 0.0) < ORBIT_BUDGET_S
    sizes = sorted(line.orbit_size for line in lines)
    return ok and big, f"15 orbits {sizes[0]}..{sizes[-1]}, multiset equal: {ok}"


# ------------------------------------------------------------------ runner


def run_checks(ctx: Context, criteria=None) -> list[CheckResult]:
    out = []
    for c in CHECKS:
        if criteria and c.criterion not in criteria:
            continue
        try:
            ok, detail = c.run(ctx)
        except Exception as exc:  # a crash is a failed check, reported as such
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(c.criterion, c.name, bool(ok), detail))
    return out


def format_report(results: list[CheckResult]) -> str:
    lines = [f"[{'PASS' if r.ok else 'FAIL'}] {r.criterion:>2}. {r.name}: {r.detail}" for r in results]
    failed = sum(not r.ok for r in results)
    if failed:
        lines.append(f"{failed} of {len(results)} checks failed")
    else:
        lines.append(f"all {len(results)} checks passed")
    return "\n".join(lines) + "\n"


def report_dict(results: list[CheckResult]) -> dict:
    return {
        "schema_version": 1,
        "checks": [
            {"criterion": r.criterion, "name": r.name, "ok": r.ok, "detail": r.detail}
            for r in results
        ],
        "passed": sum(r.ok for r in results),
        "total": len(results),
    }
