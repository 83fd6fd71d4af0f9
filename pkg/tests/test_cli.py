import json

import pytest

from grand_antiprism import cli
from grand_antiprism.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from grand_antiprism.export import load_sidecar


@pytest.fixture
def shared(ctx, monkeypatch):
    """Route every command through the session-wide build."""
    monkeypatch.setattr(cli, "Context", lambda threads=1, functional=None: ctx)
    return ctx


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build(shared, capsys):
    code, out, _ = run(capsys, "build")
    assert code == EXIT_OK
    assert "|Aut(H2+H2')| = 400" in out and "100 vertices" in out
    code, out, _ = run(capsys, "--json", "build")
    data = json.loads(out)
    assert data["schema_version"] == 1 and data["ga_vertices"] == 100
    assert data["group_orders"]["W(H4)"] == 14400


def test_flags_after_subcommand(shared, capsys):
    a = run(capsys, "--json", "--threads", "2", "build")
    b = run(capsys, "build", "--json", "--threads", "2")
    assert a == b and a[0] == EXIT_OK


def test_cells(shared, capsys):
    code, out, _ = run(capsys, "--json", "cells", "--facets")
    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["tetra_22"], data["tetra_31"], data["tetra_13"], data["antiprisms"]) == (100, 100, 100, 20)
    assert len(data["facets"]) == 320


def test_dual(shared, capsys):
    code, out, _ = run(capsys, "dual")
    assert code == EXIT_OK
    assert "100 cells with 4 kites, 4 pentagons, 2 trapezoids" in out
    assert "20 + 100 + 200" in out


def test_slice(shared, capsys):
    code, out, _ = run(capsys, "slice", "--axis", "1", "--level", "0")
    assert code == EXIT_OK
    assert "order 20" in out and "10 (right_pentagonal_antiprism) + 10 (right_pentagonal_antiprism)" in out
    code, out, _ = run(capsys, "--json", "slice", "--axis", "1")
    assert [s["count"] for s in json.loads(out)["slices"]] == [10, 20, 10, 20, 10, 20, 10]


def test_orbits(shared, capsys):
    code, out, _ = run(capsys, "orbits")
    assert code == EXIT_OK and "ga: 100" in out and "600cell: 20 + 100" in out
    code, out, _ = run(capsys, "--json", "orbits", "--appendix")
    data = json.loads(out)
    assert code == EXIT_OK and data["matches_reference"] and len(data["lines"]) == 15


@pytest.mark.parametrize("what, n_vertices, n_faces, header", [
    ("ga", 100, 720, "4OFF"),
    ("600cell", 120, 1200, "4OFF"),
    ("vertex-figure", 10, 14, "OFF"),
    ("dual-cell", 14, 10, "OFF"),
    ("slice", 10, 12, "OFF"),
])
def test_export_off(shared, capsys, tmp_path, what, n_vertices, n_faces, header):
    out = tmp_path / f"{what}.off"
    code, text, _ = run(capsys, "export", "--what", what, "--format", "off", "--out", str(out))
    assert code == EXIT_OK and "wrote" in text
    lines = out.read_text().splitlines()
    assert lines[0] == header
    assert lines[1] == f"{n_vertices} {n_faces} 0"
    mesh = load_sidecar(out)
    assert len(mesh.coords) == n_vertices and len(mesh.faces) == n_faces


def test_export_json(shared, capsys, tmp_path):
    out = tmp_path / "fig.json"
    code, _, _ = run(capsys, "export", "--what", "vertex-figure", "--vertex", "5", "--format", "json",
                     "--out", str(out))
    doc = json.loads(out.read_text())
    assert code == EXIT_OK and doc["dimension"] == 3 and len(doc["float_vertices"]) == 10


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    [],
    ["slice", "--axis", "e4"],
    ["slice", "--axis", "1", "--level", "7"],
    ["slice", "--level", "tau**2"],
    ["export", "--what", "ga", "--format", "stl", "--out", "x"],
    ["export", "--what", "slice", "--level", "3", "--format", "off", "--out", "x.off"],
    ["export", "--what", "dual-cell", "--vertex", "100", "--format", "off", "--out", "x.off"],
    ["--threads", "0", "build"],
    ["build", "--threads", "x"],
    ["--seed-functional", "1,2", "build"],
])
def test_usage_errors(shared, capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert "usage:" in err


def test_non_generic_functional(capsys):
    code, _, err = run(capsys, "--seed-functional", "1,0,0,0", "orbits", "--appendix")
    assert code == EXIT_USAGE and "vanishes" in err


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == EXIT_OK
    assert "grand-antiprism" in capsys.readouterr().out


def test_verify_reports_the_failing_check(shared, capsys):
    code, out, _ = run(capsys, "verify")
    assert code == EXIT_FAIL
    assert "[FAIL] 10. P1 is a regular pentagonal antiprism" in out
    assert out.splitlines()[-1] == "1 of 30 checks failed"
    code, out, _ = run(capsys, "--json", "verify")
    data = json.loads(out)
    assert data["total"] == 30 and data["passed"] == 29


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "grand_antiprism", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verify" in proc.stdout
