import hashlib
import json
import subprocess
import sys

import pytest

from opvr import fixtures
from opvr.cli import main
from opvr.graph import dump


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def g9(tmp_path, capsys):
    path = tmp_path / "g9.json"
    code, _ = run(capsys, "generate", "--family", "lowerbound", "--param", 9, "--out", path)
    assert code == 0
    return path


def write(tmp_path, name, g):
    path = tmp_path / f"{name}.json"
    dump(g, path)
    return path


def digest(path):
    return hashlib.sha256(path.read_bytes()).hexdigest()


def test_validate_and_detect_plane(tmp_path, capsys):
    path = write(tmp_path, "k4", fixtures.k4_plane())
    code, out = run(capsys, "validate", "--in", path)
    assert code == 0 and out["valid"] and out["three_connected"]
    code, out = run(capsys, "detect", "--in", path, "--properties")
    assert code == 0 and out["configs"] == 0 and out["properties"]["passed"]


def test_invalid_input_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["a"]}')
    code, out = run(capsys, "validate", "--in", bad)
    assert code == 1 and out["kind"] == "invalid input"
    code, _ = run(capsys, "detect", "--in", tmp_path / "missing.json")
    assert code == 1


def test_failed_verification_exits_2(tmp_path, capsys):
    g = write(tmp_path, "t", fixtures.triangle_t())
    d = tmp_path / "d.json"
    assert run(capsys, "draw", "--in", g, "--out", d)[0] == 0
    doc = json.loads(d.read_text())
    doc["complexity"] = 0
    d.write_text(json.dumps(doc))
    code, out = run(capsys, "verify", "--graph", g, "--drawing", d)
    assert code == 2 and out["kind"] == "property violation"


def test_stage_commands(tmp_path, capsys, g9):
    code, out = run(capsys, "nonredundant", "--in", g9, "--out", tmp_path / "F.json")
    assert code == 0 and out["F"] == len(json.loads((tmp_path / "F.json").read_text())["entries"])
    code, out = run(capsys, "match", "--in", g9, "--out", tmp_path / "A.json")
    assert code == 0 and out["max_load"] <= 5
    code, out = run(capsys, "subdivide", "--in", g9, "--out", tmp_path / "s.json",
                    "--report", tmp_path / "log.json")
    assert code == 0 and out["subdivisions"] > 0
    code, out = run(capsys, "detect", "--in", tmp_path / "s.json")
    assert code == 0 and out["configs"] == 0


def test_pipeline_on_lower_bound_graph(tmp_path, capsys, g9):
    outdir = tmp_path / "run"
    code, out = run(capsys, "pipeline", "--in", g9, "--out", outdir, "--svg",
                    "--report", tmp_path / "summary.json")
    assert code == 0
    assert out["verified"] and out["k*"] in (4, 5) and out["P"] >= 9
    for name in ("drawing.json", "assignment.json", "surgery.json", "subdivided.json",
                 "drawing.svg"):
        assert (outdir / name).exists()


def test_artifacts_are_byte_identical(tmp_path, capsys, g9):
    hashes = []
    for i in range(2):
        d = tmp_path / f"d{i}.json"
        s = tmp_path / f"d{i}.svg"
        assert run(capsys, "draw", "--in", g9, "--out", d, "--svg", s)[0] == 0
        hashes.append((digest(d), digest(s)))
    assert hashes[0] == hashes[1]
    other = tmp_path / "again.json"
    run(capsys, "generate", "--family", "lowerbound", "--param", 9, "--out", other)
    assert digest(other) == digest(g9)


def test_generate_kite_is_seeded(tmp_path, capsys):
    paths = []
    for seed in (1, 1, 2):
        p = tmp_path / f"k{len(paths)}.json"
        run(capsys, "generate", "--family", "kite", "--param", "30,3,1,1", "--seed", seed, "--out", p)
        paths.append(digest(p))
    assert paths[0] == paths[1] != paths[2]


def test_sweep(tmp_path, capsys):
    code, out = run(capsys, "sweep", "--family", "lowerbound", "--np", "9,12",
                    "--out", tmp_path / "sweep.json")
    assert code == 0
    rows = out["rows"]
    assert [r["4np-8"] for r in rows] == [28, 40]
    assert all(r["verified"] and r["k*"] in (4, 5) for r in rows)


def test_module_entry_point(tmp_path):
    path = write(tmp_path, "k4", fixtures.k4_plane())
    res = subprocess.run([sys.executable, "-m", "opvr.cli", "validate", "--in", str(path)],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["valid"]
