"""Golden and exit-code tests for the cdc command-line tool."""

import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

BIN = os.environ.get("CDC_BIN", "cdc")
DATA = Path(__file__).resolve().parent.parent / "data"


def run(*args, input=None):
    return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, input=input, timeout=300)


def box(entry):
    return tuple(Fraction(str(v)) for v in entry)


@pytest.mark.parametrize("a,expected", [("a", "N:NE:E"), ("c", "O"), ("d", "W:O:SW:S")])
def test_drm(a, expected):
    r = run("drm", DATA / "regions.json", a, "b")
    assert r.returncode == 0, r.stderr
    assert r.stdout == expected + "\n"


def test_drm_missing_variable():
    r = run("drm", DATA / "regions.json", "a", "nope")
    assert r.returncode == 2
    assert "nope" in r.stderr


def test_check_exit_codes():
    ok = run("check", DATA / "regions_net.json", DATA / "regions.json")
    assert (ok.returncode, ok.stdout) == (0, "ok\n")
    bad = run("check", DATA / "regions_bad_net.json", DATA / "regions.json")
    assert bad.returncode == 1
    assert bad.stdout == "violation c b expected S actual O\n"
    missing = run("check", DATA / "regions_net.json", DATA / "nonexistent.json")
    assert missing.returncode == 2


def test_check_reports_disconnected(tmp_path):
    geo = json.loads((DATA / "regions.json").read_text())
    geo["regions"]["c"] = [["0.5", 1, "0.5", 1], [1, "1.5", 1, "1.5"]]  # corner touch only
    path = tmp_path / "g.json"
    path.write_text(json.dumps(geo))
    r = run("check", DATA / "regions_net.json", path)
    assert r.returncode == 1
    assert "disconnected c" in r.stdout.splitlines()


def test_malformed_inputs_exit_2(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text('{"format": "cdc-geometry", "version": 99, "regions": {}}')
    assert run("drm", broken, "a", "b").returncode == 2
    assert run("render", broken).returncode == 2
    assert run("bogus-command").returncode == 2
    assert run().returncode == 2
    assert run("solve", DATA / "corner_triple.json", "--grid", "x").returncode == 2


def test_reduce_counts_and_determinism(tmp_path):
    out1, out2, vmap = tmp_path / "n1.json", tmp_path / "n2.json", tmp_path / "map.json"
    r = run("reduce", DATA / "one_clause.cnf", "-o", out1, "--map", vmap)
    assert r.returncode == 0, r.stderr
    assert run("reduce", DATA / "one_clause.cnf", "-o", out2).returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    net = json.loads(out1.read_text())
    assert net["format"] == "cdc-network" and net["version"] == 1
    assert len(net["variables"]) == 53  # 14n + 4 + 7m
    assert len(net["constraints"]) == 161  # 41n + 32m + 6
    assert json.loads(vmap.read_text())["format"] == "cdc-variable-map"
    stdout = run("reduce", DATA / "one_clause.cnf")
    assert stdout.stdout.encode() == out1.read_bytes()


def test_reduce_requires_exact_3sat():
    r = run("reduce", DATA / "short_clauses.cnf")
    assert r.returncode == 2
    assert r.stderr.startswith("error:")
    n = run("reduce", DATA / "short_clauses.cnf", "--normalize")
    assert n.returncode == 0, n.stderr
    assert json.loads(n.stdout)["format"] == "cdc-network"


def test_reduce_disconnected_mode():
    r = run("reduce", DATA / "one_clause.cnf", "--mode", "disconnected")
    assert json.loads(r.stdout)["mode"] == "disconnected"
    assert run("reduce", DATA / "one_clause.cnf", "--mode", "fuzzy").returncode == 2


def test_witness_coordinates(tmp_path):
    r = run("witness", DATA / "one_clause.cnf", "--assign", "1=T,2=T,3=T")
    assert r.returncode == 0, r.stderr
    geo = json.loads(r.stdout)
    assert geo["format"] == "cdc-geometry"
    assert [box(b) for b in geo["regions"]["u1"]] == [(1, Fraction(6, 5), Fraction(1, 2), 1)]

    scaled = json.loads(run("witness", DATA / "one_clause.cnf", "--assign", "1=T,2=T,3=T", "--scale", "20").stdout)
    assert [box(b) for b in scaled["regions"]["u1"]] == [(20, 24, 10, 20)]
    for boxes in scaled["regions"].values():
        for b in boxes:
            assert all(v.denominator == 1 for v in box(b))

    # The witness verifies against the compiled network exactly when the
    # assignment satisfies the formula.
    net = tmp_path / "net.json"
    run("reduce", DATA / "one_clause.cnf", "-o", net)
    for assign, expected in [("1=T,2=T,3=T", 0), ("1=F,2=T,3=F", 1)]:
        geo_path = tmp_path / "w.json"
        run("witness", DATA / "one_clause.cnf", "--assign", assign, "-o", geo_path)
        assert run("check", net, geo_path).returncode == expected


def test_witness_errors():
    assert run("witness", DATA / "one_clause.cnf", "--assign", "1=T,2=F").returncode == 2
    assert run("witness", DATA / "one_clause.cnf", "--assign", "1=T,2=F,3=Q").returncode == 2
    assert run("witness", DATA / "one_clause.cnf", "--assign", "1=T,2=F,3=T", "--scale", "0").returncode == 2
    assert run("witness", DATA / "one_clause.cnf").returncode == 2


@pytest.mark.parametrize("mode,count", [("connected", 218), ("disconnected", 511)])
def test_relations(mode, count):
    lines = run("relations", "--mode", mode).stdout.splitlines()
    assert len(lines) == count == len(set(lines))
    assert "O" in lines
    assert ("N:S" in lines) == (mode == "disconnected")


def test_relations_default_mode():
    assert len(run("relations").stdout.splitlines()) == 218


def test_render(tmp_path):
    geo = tmp_path / "w.json"
    run("witness", DATA / "one_clause.cnf", "--assign", "1=T,2=F,3=T", "-o", geo)
    a = run("render", geo)
    assert a.returncode == 0
    assert a.stdout.startswith("<svg")
    assert '<g id="var-f1"' in a.stdout and '<g id="var-f2"' in a.stdout
    assert run("render", geo).stdout == a.stdout
    net = tmp_path / "net.json"
    run("reduce", DATA / "one_clause.cnf", "-o", net)
    withnet = run("render", geo, net, "--mbr", "--scale", "40")
    assert withnet.returncode == 0
    assert 'class="mbr"' in withnet.stdout and "<desc>" in withnet.stdout
    out = tmp_path / "w.svg"
    assert run("render", geo, "-o", out).returncode == 0
    assert out.read_text() == a.stdout
    assert run("render", geo, "--scale", "-3").returncode == 2

    empty = tmp_path / "empty.json"
    empty.write_text('{"format": "cdc-geometry", "version": 1, "regions": {}}')
    assert run("render", empty).returncode == 2


def test_solve(tmp_path):
    out = tmp_path / "sol.json"
    r = run("solve", DATA / "corner_pair.json", "--cells", "5", "-o", out)
    assert r.returncode == 0, r.stderr
    assert r.stderr.startswith("solved")
    assert run("check", DATA / "corner_pair.json", out).returncode == 0

    neg = run("solve", DATA / "corner_triple.json", "--cells", "5")
    assert neg.returncode == 1
    assert neg.stderr.startswith("no-solution-at-scale")
    assert neg.stdout == ""

    rect = run("solve", DATA / "corner_pair.json")
    assert rect.returncode == 0
    assert run("solve", DATA / "corner_pair.json", "--rectangles").returncode == 1
    assert run("solve", DATA / "corner_triple.json").stderr.startswith("no-rect-solution")
    assert run("solve", DATA / "corner_pair.json", "--cells", "9").returncode == 2


def test_solve_budget(tmp_path):
    net = tmp_path / "net.json"
    run("reduce", DATA / "unsat.cnf", "-o", net)
    r = run("solve", net, "--nodes", "100")
    assert r.returncode == 1
    assert r.stderr.startswith("timeout")
    r = run("solve", net, "--budget", "50")
    assert r.returncode == 1
    assert r.stderr.startswith("timeout")
