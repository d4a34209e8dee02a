import json
import os
import pathlib

import pytest

import pygql

DATA = pathlib.Path(os.environ.get("GQL_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def test_classify_worked_cases():
    assert pygql.classify("(1 2)", 2, degree=2)["is_general_type"] is False
    d4 = pygql.classify("(1 2 3 4),(1 3)", 5)
    assert d4["m"] == 1 and d4["is_general_type"] is True
    assert any(a["line"].startswith("CONDITIONAL:") for a in d4["advisories"])


def test_errors_map_to_exceptions():
    with pytest.raises(pygql.PreconditionError):
        pygql.classify("(1 2)", 5, degree=3)
    with pytest.raises(pygql.ParseError):
        pygql.classify("(1 2", 5)
    with pytest.raises(pygql.GqlError):
        pygql.genus_from_cover(2, 0, 7)


def test_group_info_and_membership():
    info = pygql.group_info("(1 2 3 4),(1 2)")
    assert info["order"] == 24 and info["solvable"]
    assert len(info["transpositions"]) == 6
    assert pygql.contains("(1 2 3 4),(1 3)", "(2 4)")
    assert not pygql.contains("(1 2 3 4),(1 3)", "(1 2)")


def test_riemann_hurwitz():
    assert pygql.ramification_degree(3, 3, 0) == 10
    assert pygql.genus_from_cover(2, 0, 8) == 3
    assert pygql.genus_from_cover(2, 0, 10) == 4
    assert [pygql.sym_power_kind(3, n) for n in (2, 3, 4)] == ["GeneralType", "BirationalAbelian", "Uniruled"]


def test_census():
    records = pygql.census(json.loads((DATA / "transitive_groups.json").read_text()))
    assert len(records) == 87 and all(r["ok"] for r in records)
    assert pygql.census({"groups": []}) == []


def test_quartics():
    fermat = json.loads((DATA / "fermat.json").read_text())
    out = pygql.quartic_flexes(fermat)
    assert out["flex_count"] == 12 and out["hyperflex_count"] == 12
    klein = (DATA / "klein.json").read_text()
    res = pygql.quartic_flexes(klein, residuals=True)
    assert res["distinct_residuals"]["verdict"] == "Distinct"
    assert pygql.quartic_flexes(klein, residuals=True) == res


def test_certificate():
    assert pygql.certify_irreducible([1, 0, 1])["verdict"] == "Irreducible"
    assert pygql.certify_irreducible([-2, 1, 1])["verdict"] == "Inconclusive"
