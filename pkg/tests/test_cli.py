import json
from importlib.resources import files

import pytest

from gbcanon import bench
from gbcanon.cli import main
from gbcanon.objects import CombinatorialObject
from gbcanon.perms import Permutation

DATA = files("gbcanon") / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(l) for l in out.splitlines() if l.strip()]


def test_canon_example_matches_golden(capsys, tmp_path):
    code, out = run(capsys, "canon", str(DATA / "example-g8-gamma.json"), "--trace", str(tmp_path / "t.dot"))
    assert code == 0
    golden = json.loads((DATA / "example-g8-gamma.golden.json").read_text())
    assert out[-1] == golden
    assert out[-1]["leaves"] == 6
    assert (tmp_path / "t.dot").read_text().startswith("digraph")


def test_canon_json_trace(capsys, tmp_path):
    code, _ = run(capsys, "canon", str(DATA / "example-g8-gamma.json"), "--trace", str(tmp_path / "t.json"))
    assert code == 0
    assert len(json.loads((tmp_path / "t.json").read_text())["leaves"]) == 6


def test_minlist(capsys):
    code, out = run(capsys, "minlist", str(DATA / "g8.json"), "[8,3,4,5,1,2,6,7]")
    assert code == 0
    assert out[0] == {"image": "[1,2,3,6,4,5,7,8]", "perm": "(1,4,3,2,5,6,7,8)"}


def test_orbit_eq(capsys, tmp_path):
    a = json.loads((DATA / "example-g8-gamma.json").read_text())
    g = Permutation.parse("(1,2,3,4,5,6,8)", 8)
    b = dict(a, object=CombinatorialObject.from_json(8, a["object"]).act(g).to_json())
    c = dict(a, object={"type": "graph", "edges": [[1, 2], [1, 3], [2, 3], [5, 6], [6, 7]]})
    for name, d in (("a", a), ("b", b), ("c", c)):
        (tmp_path / f"{name}.json").write_text(json.dumps(d))
    code, out = run(capsys, "orbit-eq", str(tmp_path / "a.json"), str(tmp_path / "b.json"))
    assert code == 0 and out[0]["equal"] is True and out[0]["witness"]
    code, out = run(capsys, "orbit-eq", str(tmp_path / "a.json"), str(tmp_path / "c.json"))
    assert code == 0 and out[0] == {"equal": False, "witness": None}


def test_selftest_quick(capsys):
    code, out = run(capsys, "selftest", "--quick", "--seed", "2")
    assert code == 0 and out[-1]["ok"] and out[-1]["seed"] == 2


def test_bench_small(capsys):
    code, out = run(capsys, "bench", "grid", "--n", "2", "3", "--reps", "2", "--seed", "4")
    assert code == 0
    assert out[-1]["instances"] == 12 and out[-1]["seed"] == 4
    assert all(r["ok"] for r in out[:-1])
    code, out = run(capsys, "bench", "conj", "--n", "4", "--cycles", "3", "--reps", "2")
    assert code == 0 and out[-1]["instances"] == 2


@pytest.mark.parametrize("argv", [
    [],
    ["canon"],
    ["canon", "/nonexistent.json"],
    ["minlist", "sym:4", "[1,2]"],
    ["minlist", "sym:4", "not a list"],
    ["bench", "grid", "--n", "2", "--setsize", "9"],
    ["bench", "conj", "--n", "2", "--cycles", "3"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_invariance_failure_exit_code(capsys, monkeypatch):
    real = bench.grid_instance

    def broken(*a, **kw):
        ok, dt, r = real(*a, **kw)
        return False, dt, r
    monkeypatch.setattr(bench, "grid_instance", broken)
    assert main(["bench", "grid", "--n", "2", "--reps", "1"]) == 1
