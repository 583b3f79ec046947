"""Smoke tests for the Python bindings."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

import cdc

DATA = Path(__file__).resolve().parents[2] / "tests" / "data"
ONE_CLAUSE = (DATA / "one_clause.cnf").read_text()


def test_relations():
    assert len(cdc.relations()) == 218
    assert len(cdc.relations("disconnected")) == 511
    assert cdc.is_basic("N:S", "disconnected") and not cdc.is_basic("N:S")
    with pytest.raises(cdc.ParseError):
        cdc.relations("sideways")


def test_drm_and_check():
    geo = (DATA / "regions.json").read_text()
    assert cdc.drm(geo, "a", "b") == "N:NE:E"
    assert cdc.drm(geo, "d", "b") == "W:O:SW:S"
    with pytest.raises(cdc.MissingVariable):
        cdc.drm(geo, "a", "zz")
    assert cdc.check((DATA / "regions_net.json").read_text(), geo)["ok"]
    report = cdc.check((DATA / "regions_bad_net.json").read_text(), geo)
    assert not report["ok"]
    assert report["violations"] == [("c", "b", "S", "O")]


def test_reduce_and_witness():
    network, vmap = cdc.reduce(ONE_CLAUSE)
    net = json.loads(network)
    assert len(net["variables"]) == 53 and len(net["constraints"]) == 161
    assert json.loads(vmap)["version"] == cdc.FORMAT_VERSION
    assert cdc.reduce(ONE_CLAUSE) == (network, vmap)

    geo = cdc.witness(ONE_CLAUSE, [True, True, True])
    u1 = json.loads(geo)["regions"]["u1"]
    assert [tuple(Fraction(str(v)) for v in b) for b in u1] == [(1, Fraction(6, 5), Fraction(1, 2), 1)]
    assert cdc.check(network, geo)["ok"]
    assert not cdc.check(network, cdc.witness(ONE_CLAUSE, "1=F,2=T,3=F"))["ok"]
    assert cdc.witness_decides(ONE_CLAUSE, [True, False, False])
    assert not cdc.witness_decides(ONE_CLAUSE, [False, True, False])
    assert cdc.brute_force_sat(ONE_CLAUSE) is not None
    assert cdc.brute_force_sat((DATA / "unsat.cnf").read_text()) is None

    with pytest.raises(cdc.NotThreeSat):
        cdc.reduce((DATA / "short_clauses.cnf").read_text())
    cdc.reduce((DATA / "short_clauses.cnf").read_text(), normalize=True)
    with pytest.raises(cdc.CdcError):
        cdc.witness(ONE_CLAUSE, [True])
    assert issubclass(cdc.CdcError, ValueError)


def test_solve_and_render():
    status, geo, nodes = cdc.solve((DATA / "corner_pair.json").read_text(), cells=5)
    assert status == "solved" and nodes > 0
    assert cdc.check((DATA / "corner_pair.json").read_text(), geo)["ok"]
    assert cdc.solve((DATA / "corner_triple.json").read_text(), cells=5)[:2] == ("no-solution-at-scale", None)
    assert cdc.solve((DATA / "corner_triple.json").read_text())[0] == "no-rect-solution"
    with pytest.raises(cdc.TooLarge):
        cdc.solve((DATA / "corner_triple.json").read_text(), cells=9)

    svg = cdc.render(geo, (DATA / "corner_pair.json").read_text(), scale=50, mbr=True)
    assert svg.startswith("<svg") and '<g id="var-x"' in svg
    with pytest.raises(cdc.CdcError):
        cdc.render(geo, scale=0)
