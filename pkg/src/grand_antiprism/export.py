"""OFF meshes with exact JSON sidecars, and JSON encoding of exact values."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .golden import GoldenNumber
from .hull import polyhedron_structure
from .quaternion import GoldenQuaternion, OrthonormalBasis, q_in_basis

__all__ = [
    "SCHEMA_VERSION",
    "UnequalFirstCoordinateError",
    "MeshDocument",
    "golden_json",
    "quaternion_json",
    "to_jsonable",
    "dumps",
    "mesh_from_points",
    "polytope_two_faces",
    "export_off",
    "load_sidecar",
]

SCHEMA_VERSION = 1


class UnequalFirstCoordinateError(ValueError):
    pass


def golden_json(x: GoldenNumber) -> dict:
    return {"exact": x.to_json(), "float": float(x)}


def quaternion_json(q: GoldenQuaternion) -> dict:
    return {"exact": q.to_json(), "float": list(q.to_floats())}


def to_jsonable(obj):
    """Recursively replace exact values by ``{"exact": ..., "float": ...}``."""
    if isinstance(obj, GoldenNumber):
        return golden_json(obj)
    if isinstance(obj, GoldenQuaternion):
        return quaternion_json(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((to_jsonable(v) for v in obj), key=lambda v: json.dumps(v, sort_keys=True))
    return obj


def dumps(obj) -> str:
    """Deterministic JSON text (sorted keys, fixed separators)."""
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False)


@dataclass(frozen=True)
class MeshDocument:
    """Exact vertex coordinates (3 or 4 per vertex) and index faces."""

    coords: tuple[tuple[GoldenNumber, ...], ...]
    faces: tuple[tuple[int, ...], ...]
    description: str = ""

    @property
    def dimension(self) -> int:
        return len(self.coords[0]) if self.coords else 3

    def float_vertices(self) -> list[tuple[float, ...]]:
        return [tuple(float(x) for x in c) for c in self.coords]

    def off_text(self) -> str:
        header = "OFF" if self.dimension == 3 else f"{self.dimension}OFF"
        lines = [header, f"{len(self.coords)} {len(self.faces)} 0"]
        for v in self.float_vertices():
            lines.append(" ".join(f"{x:.17g}" for x in v))
        for f in self.faces:
            lines.append(" ".join(str(i) for i in (len(f), *f)))
        return "\n".join(lines) + "\n"

    def sidecar(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "description": self.description,
            "dimension": self.dimension,
            "vertices": [[x.to_json() for x in c] for c in self.coords],
            "faces": [list(f) for f in self.faces],
        }


def mesh_from_points(points, faces=(), basis: OrthonormalBasis | None = None,
                     drop_first: bool = False, description: str = "") -> MeshDocument:
    """Coordinates in ``basis`` (standard when ``None``), optionally dropping a
    first coordinate that all points share."""
    pts = list(points)
    coords = [q_in_basis(p, basis) if basis is not None else p.coords for p in pts]
    if drop_first:
        firsts = {c[0] for c in coords}
        if len(firsts) > 1:
            raise UnequalFirstCoordinateError("points do not share their first coordinate")
        coords = [c[1:] for c in coords]
    return MeshDocument(tuple(tuple(c) for c in coords), tuple(tuple(f) for f in faces), description)


def polytope_two_faces(points, facets) -> list[tuple[int, ...]]:
    """Distinct 2-faces of a 4-polytope, as boundary cycles of global indices."""
    seen = {}
    for f in facets:
        local = [points[i] for i in f.vertex_indices]
        poly = polyhedron_structure(local, f.plane.normal)
        for face in poly.faces:
            cyc = tuple(f.vertex_indices[i] for i in poly.face_cycle(face))
            seen.setdefault(frozenset(cyc), cyc)
    return sorted(seen.values(), key=lambda c: (len(c), sorted(c)))


def export_off(mesh: MeshDocument, path) -> tuple[Path, Path]:
    """Write ``path`` (OFF text) and ``path + '.json'`` (exact sidecar)."""
    path = Path(path)
    path.write_text(mesh.off_text(), encoding="ascii")
    side = path.with_name(path.name + ".json")
    side.write_text(json.dumps(mesh.sidecar(), sort_keys=True, indent=1) + "\n", encoding="utf-8")
    return path, side


def load_sidecar(path) -> MeshDocument:
    """Reload exact coordinates from an OFF file's sidecar (or the sidecar itself)."""
    path = Path(path)
    if path.suffix != ".json":
        path = path.with_name(path.name + ".json")
    data = json.loads(path.read_text(encoding="utf-8"))
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {data.get('schema_version')!r}")
    coords = tuple(tuple(GoldenNumber.from_json(x) for x in c) for c in data["vertices"])
    faces = tuple(tuple(f) for f in data["faces"])
    return MeshDocument(coords, faces, data.get("description", ""))
