"""Command line interface: ``grand-antiprism <command> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cells, dual, slices
from .export import (
    SCHEMA_VERSION,
    dumps,
    export_off,
    mesh_from_points,
    polytope_two_faces,
)
from .expr import ExpressionError, parse_golden
from .hull import DegenerateInputError, polyhedron_structure
from .icosian import C
from .quaternion import OrthonormalBasis
from .roots import DEFAULT_FUNCTIONAL, EXPECTED_WEIGHT_ORBITS, NonGenericFunctionalError, appendix_multiset
from .symmetry import orbit_partition, stabilizer_of
from .verify import Context, format_report, report_dict, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _functional(text: str):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected four comma-separated integers") from None
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected four comma-separated integers")
    return parts


def _threads(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def _common_options(p: argparse.ArgumentParser, defaults: bool) -> None:
    # subcommands repeat the global flags with suppressed defaults, so that
    # ``verify --threads 8`` and ``--threads 8 verify`` mean the same thing
    def d(v):
        return v if defaults else argparse.SUPPRESS
    p.add_argument("--json", action="store_true", default=d(False), help="print a JSON report instead of text")
    p.add_argument("--threads", type=_threads, default=d(1), metavar="N",
                   help="worker threads (output is independent of N)")
    p.add_argument("--seed-functional", type=_functional, default=d(DEFAULT_FUNCTIONAL),
                   metavar="a,b,c,d", help="linear functional choosing the positive roots")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="grand-antiprism",
        description="Exact construction of the grand antiprism, its cells, dual and slices.",
    )
    _common_options(p, defaults=True)
    common = argparse.ArgumentParser(add_help=False)
    _common_options(common, defaults=False)
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("build", parents=[common], help="build the groups, the 600-cell and the vertex set")
    c = sub.add_parser("cells", parents=[common], help="cell census of the grand antiprism")
    c.add_argument("--facets", action="store_true", help="include the full facet list")
    sub.add_parser("dual", parents=[common], help="dual polytope report")
    s = sub.add_parser("slice", parents=[common], help="slices orthogonal to an axis")
    s.add_argument("--axis", default="1", help="1, e1, e2, e3 or x,y,z,w (golden expressions)")
    s.add_argument("--level", help="only this level, e.g. tau/2 or -1/2")
    o = sub.add_parser("orbits", parents=[common], help="orbit decompositions under Aut(H2+H2')")
    o.add_argument("--appendix", action="store_true", help="decompose the 15 W(H4) weight orbits")
    e = sub.add_parser("export", parents=[common], help="write a mesh")
    e.add_argument("--what", required=True, choices=["ga", "600cell", "vertex-figure", "dual-cell", "slice"])
    e.add_argument("--format", required=True, choices=["off", "json"])
    e.add_argument("--out", required=True, type=Path)
    e.add_argument("--vertex", type=int, help="vertex index for vertex-figure / dual-cell (default: c)")
    e.add_argument("--axis", default="1", help="slice axis")
    e.add_argument("--level", default="tau/2", help="slice level")
    sub.add_parser("verify", parents=[common], help="run the full invariant suite")
    return p


# ---------------------------------------------------------------- commands


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(dumps({"schema_version": SCHEMA_VERSION, **data}) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_build(args, ctx: Context) -> int:
    orders = {name: g.order for name, g in ctx.groups.items()}
    data = {
        "group_orders": orders,
        "icosian_group": len(ctx.group),
        "ga_vertices": len(ctx.ga),
        "rings": {"R1": len(ctx.ga.ring_members(1)), "R2": len(ctx.ga.ring_members(2))},
    }
    lines = [f"|{k}| = {v}" for k, v in orders.items()]
    lines += [f"|I| = {len(ctx.group)}", f"grand antiprism: {len(ctx.ga)} vertices (50 + 50 in two rings)"]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_cells(args, ctx: Context) -> int:
    try:
        census = cells.cell_census(ctx.ga_facets, ctx.ga)
        ok = True
    except cells.CensusMismatchError as exc:
        census = cells.cell_census(ctx.ga_facets, ctx.ga, strict=False)
        ok = False
        sys.stderr.write(f"census mismatch: {exc}\n")
    data = census.as_dict()
    if args.facets:
        data["facets"] = [
            {"vertices": list(f.vertex_indices), "type": f.cell_type,
             "signature": list(cells.ring_signature(f, ctx.ga)) if f.cell_type == "tetrahedron" else None}
            for f in ctx.ga_facets
        ]
    text = (f"{data['tetrahedra']} tetrahedra ({data['tetra_22']} of type (2,2), {data['tetra_31']} of type (3,1), "
            f"{data['tetra_13']} of type (1,3)) and {data['antiprisms']} pentagonal antiprisms; "
            f"per-vertex incidence (12, 2): {data['per_vertex_ok']}")
    _emit(args, data, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dual(args, ctx: Context) -> int:
    duals = ctx.duals
    cells_ = ctx.dual_cells
    data = {
        "vertices": [{"position": d.position, "shell": d.shell, "cell": d.source_cell} for d in duals],
        "cells": [
            {
                "ga_vertex": ctx.ga.index[c.ga_vertex],
                "dual_vertices": list(c.vertex_ids),
                "faces": [{"cycle": [c.vertex_ids[i] for i in cyc], "class": kind} for cyc, kind in c.faces],
            }
            for c in cells_
        ],
        "orbit_decomposition": dual.dual_orbit_decomposition(duals),
    }
    census = {}
    for c in cells_:
        key = ", ".join(f"{v} {k}s" for k, v in c.face_census.items())
        census[key] = census.get(key, 0) + 1
    lines = [
        f"{len(duals)} dual vertices: {sum(d.shell == 'inner' for d in duals)} inner (norm² 2), "
        f"{sum(d.shell == 'outer' for d in duals)} outer (norm² τ²)",
        f"{len(cells_)} cells of 14 vertices",
    ]
    lines += [f"  {n} cells with {k}" for k, n in sorted(census.items())]
    lines.append("orbit sizes under Aut(H2+H2'): " + " + ".join(map(str, data["orbit_decomposition"])))
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _axis(text):
    try:
        return slices.parse_axis(text)
    except (ValueError, ExpressionError) as exc:
        raise UsageError(str(exc)) from None


def _level(text):
    try:
        return parse_golden(text)
    except ExpressionError as exc:
        raise UsageError(str(exc)) from None


def cmd_slice(args, ctx: Context) -> int:
    axis = _axis(args.axis)
    found = slices.slice_ga(axis, ctx.ga)
    if args.level is not None:
        lev = _level(args.level)
        found = [s for s in found if s.level == lev]
        if not found:
            raise UsageError(f"no vertices at level {args.level}")
    stab = stabilizer_of(ctx.aut, axis)
    out, lines = [], []
    for s in found:
        parts = slices.decompose_slice(s, stab)
        entry = s.as_dict()
        entry["points"] = list(s.points)
        entry["parts"] = [{"count": len(p), "shape": p.shape_tag, "points": list(p.points)} for p in parts]
        out.append(entry)
        split = " + ".join(f"{len(p)} ({p.shape_tag})" for p in parts)
        lines.append(f"level {s.level} (≈{float(s.level):+.6f}): {len(s)} points, {s.shape_tag}; splits as {split}")
    data = {"axis": axis, "stabilizer_order": stab.order, "slices": out}
    lines.insert(0, f"stabilizer of the axis in Aut(H2+H2'): order {stab.order}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_orbits(args, ctx: Context) -> int:
    if args.appendix:
        lines_ = ctx.appendix
        match = appendix_multiset(lines_) == appendix_multiset(EXPECTED_WEIGHT_ORBITS)
        data = {
            "lines": [{"weights": list(line.subset), "orbit_size": line.orbit_size,
                       "decomposition": line.decomposition} for line in lines_],
            "matches_reference": match,
        }
        text = []
        for line in lines_:
            dec = " + ".join(f"{m}({s})" if m > 1 else str(s) for s, m in sorted(line.decomposition.items()))
            w = "+".join(f"w{i + 1}" for i in line.subset)
            text.append(f"{w:<12} {line.orbit_size:>5} = {dec}")
        text.append(f"matches the reference table: {match}")
        _emit(args, data, "\n".join(text))
        return EXIT_OK if match else EXIT_FAIL
    gens = ctx.aut.generators
    ga = sorted(len(o) for o in orbit_partition(ctx.ga.points, gens))
    i = sorted(len(o) for o in orbit_partition(ctx.group.elements, gens))
    d = dual.dual_orbit_decomposition(ctx.duals)
    data = {"ga": ga, "600cell": i, "dual": d}
    text = "\n".join(f"{k}: " + " + ".join(map(str, v)) for k, v in data.items())
    _emit(args, data, text)
    return EXIT_OK


def _pick_vertex(args, ctx):
    if args.vertex is None:
        return C
    if not 0 <= args.vertex < len(ctx.ga):
        raise UsageError(f"vertex index must be in 0..{len(ctx.ga) - 1}")
    return ctx.ga.points[args.vertex]


def _mesh(args, ctx):
    if args.what == "ga":
        return mesh_from_points(ctx.ga.points, polytope_two_faces(ctx.ga.points, ctx.ga_facets),
                                description="grand antiprism: vertices and 2-faces")
    if args.what == "600cell":
        pts = ctx.group.elements
        return mesh_from_points(pts, polytope_two_faces(pts, ctx.i_facets),
                                description="600-cell: vertices and 2-faces")
    if args.what == "vertex-figure":
        v = _pick_vertex(args, ctx)
        fig = cells.vertex_figure(v, ctx.ga)
        poly = polyhedron_structure(fig.points, v)
        faces = [poly.face_cycle(f) for f in poly.faces]
        return mesh_from_points(fig.points, faces, fig.basis, drop_first=True,
                                description=f"vertex figure of vertex {ctx.ga.index[v]}")
    if args.what == "dual-cell":
        v = _pick_vertex(args, ctx)
        cell = dual.dual_cell_of(v, ctx.ga_facets, ctx.duals, ctx.ga)
        faces = [cyc for cyc, _ in cell.faces]
        return mesh_from_points(cell.points, faces, OrthonormalBasis.left_translate(v), drop_first=True,
                                description=f"dual cell of vertex {ctx.ga.index[v]}")
    axis = _axis(args.axis)
    lev = _level(args.level)
    s = next((x for x in slices.slice_ga(axis, ctx.ga, tag=False) if x.level == lev), None)
    if s is None:
        raise UsageError(f"no vertices at level {args.level}")
    faces = []
    if len(s) >= 4:
        try:
            poly = polyhedron_structure(s.points, axis)
            faces = [poly.face_cycle(f) for f in poly.faces]
        except DegenerateInputError:
            faces = []
    return mesh_from_points(s.points, faces, OrthonormalBasis.left_translate(axis), drop_first=True,
                            description=f"slice at level {s.level}")


def cmd_export(args, ctx: Context) -> int:
    mesh = _mesh(args, ctx)
    if args.format == "off":
        off, side = export_off(mesh, args.out)
        written = [str(off), str(side)]
    else:
        doc = mesh.sidecar()
        doc["float_vertices"] = [list(v) for v in mesh.float_vertices()]
        args.out.write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n", encoding="utf-8")
        written = [str(args.out)]
    data = {"written": written, "vertices": len(mesh.coords), "faces": len(mesh.faces)}
    _emit(args, data, f"wrote {', '.join(written)} ({len(mesh.coords)} vertices, {len(mesh.faces)} faces)")
    return EXIT_OK


def cmd_verify(args, ctx: Context) -> int:
    results = run_checks(ctx)
    if args.json:
        sys.stdout.write(json.dumps(report_dict(results), sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(format_report(results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


COMMANDS = {
    "build": cmd_build,
    "cells": cmd_cells,
    "dual": cmd_dual,
    "slice": cmd_slice,
    "orbits": cmd_orbits,
    "export": cmd_export,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    ctx = Context(threads=args.threads, functional=args.seed_functional)
    try:
        return COMMANDS[args.command](args, ctx)
    except (UsageError, NonGenericFunctionalError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"grand-antiprism: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
