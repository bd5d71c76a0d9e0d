import json
import os
import pathlib

import pytest

import fibharm

SCHEMA = pathlib.Path(os.environ.get("FIBHARM_SOURCE_DIR", pathlib.Path(__file__).parents[2])) / "schemas" / "report.schema.json"


def test_sequences():
    assert [fibharm.fibonacci(j) for j in range(-3, 8)] == [2, -1, 1, 0, 1, 1, 2, 3, 5, 8, 13]
    assert fibharm.lucas(10) == 123
    assert fibharm.fibonacci(200) == 280571172992510140037611932413038677189525


def test_harmonic_and_binomial():
    assert fibharm.harmonic("3") == "11/6"
    assert fibharm.harmonic("-1/2") == "(-2)*ln2"
    assert fibharm.binomial("3/2", "2") == "3/8"


def test_catalog():
    ids = fibharm.identities()
    assert len(ids) >= 55
    assert len({e["id"] for e in ids}) == len(ids)
    assert set(fibharm.families()) == {e["family"] for e in ids}
    assert all(e["status"] in ("ConfirmedPass", "Discrepancy") for e in ids)


def test_evaluate():
    r = fibharm.evaluate("shift-simple", "n=3,r=0,s=1")
    assert r["outcome"] == "EQUAL"
    assert r["lhs"] == r["rhs"]
    r = fibharm.evaluate("shift-simple", "n=3,r=0,s=0")
    assert r["outcome"] == "UNEQUAL"
    assert (r["lhs"], r["rhs"]) == ("31/6", "22/3")


def test_errors():
    with pytest.raises(KeyError):
        fibharm.evaluate("no-such-identity", "n=1")
    with pytest.raises(ValueError):
        fibharm.evaluate("shift-simple", "n=1,zz=2")
    with pytest.raises(ValueError):
        fibharm.sweep(["shift-simple"], overrides="n=a..b")
    assert issubclass(fibharm.EncodingBug, fibharm.FibharmError)


def test_sweep_matches_audit_status():
    status = {e["id"]: e["status"] for e in fibharm.identities()}
    for s in fibharm.sweep([i for i in status if i.startswith("rec-")], n_max=12, jobs=2):
        assert s["checked"] == s["equal"] + s["unequal"] + s["skipped"]
        if status[s["id"]] == "ConfirmedPass":
            assert s["unequal"] == 0 and s["first_counterexample"] is None


def test_report_validates_against_schema():
    jsonschema = pytest.importorskip("jsonschema")
    text = fibharm.verify_report(["shift-simple", "rec-FF-part"], overrides="n=1..6", verbose=True)
    doc = json.loads(text)
    jsonschema.validate(doc, json.loads(SCHEMA.read_text()))
    assert [s["id"] for s in doc["summaries"]] == ["rec-FF-part", "shift-simple"]
    assert doc["tool_version"] == fibharm.__version__


def test_audit_single_entry():
    (r,) = fibharm.audit(["shift-simple"], overrides="n=1..4")
    assert r["status"] == "Discrepancy"
    assert r["counterexample"] is not None
