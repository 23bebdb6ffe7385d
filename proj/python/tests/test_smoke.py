import json
import os
from pathlib import Path

import pytest

import qsing

A2 = qsing.quiver_text(2, [(1, 2)])
DATA = Path(os.environ.get("QSING_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_a2_decompose():
    r = qsing.decompose(A2, [1, 1])
    assert r["command"] == "decompose"
    assert r["generic"] == [[[1, 1], 1]]
    assert r["simples"] == [[0, 1]]


def test_a2_end_to_end():
    b = qsing.bfunction(A2, "1,1")
    assert b["family"]["polynomial"] == "s+1"
    v = qsing.singularities(A2, (1, 1))
    assert v["verdict"]["verdict"] == "rational-singularities"
    assert v["verdict"]["largest_root"] == "-1"


def test_e6_certificate_round_trip():
    p = qsing.preset("e6-ex1", 2, 2)
    s = qsing.singularities(p["quiver"], p["alpha"])
    assert s["verdict"]["verdict"] == "rational-singularities"
    cert = s["verdict"]["certificate"]
    assert qsing.verify_certificate(cert) == (True, "")
    cert["root"]["rule"] = "good"
    ok, error = qsing.verify_certificate(cert)
    assert not ok and error


def test_e8_membership():
    p = qsing.preset("e8-pos", 1, 0)
    fam = qsing.bfunction(p["quiver"], p["alpha"], p["selected"])["family"]
    m = qsing.membership(fam, [9, -7])
    assert m["kind"] == "non-member" and m["exact"]
    assert qsing.membership(fam, [7, -6])["kind"] == "member"


def test_errors_map_to_exceptions():
    with pytest.raises(qsing.InvalidInput):
        qsing.decompose("vertices 2\narrow 1\n", "1,1")
    with pytest.raises(qsing.NonDynkin):
        qsing.decompose(qsing.quiver_text(2, [(1, 2), (1, 2)]), "1,1")
    assert issubclass(qsing.InvalidInput, ValueError)


def test_cli_in_process():
    code, out, _ = qsing.run_cli(["nullcone", "--quiver", DATA / "quivers" / "a2.quiver", "--dim", "1,1", "--format", "json"])
    assert code == 0
    assert json.loads(out)["report"]["verdict"] == "reduced"
    code, _, err = qsing.run_cli(["decompose", "--quiver", DATA / "quivers" / "kronecker.quiver", "--dim", "1,1"])
    assert code == 3 and "Dynkin" in err


def _schema(definition=None):
    jsonschema = pytest.importorskip("jsonschema")
    root = Path(__file__).resolve().parents[2] / "docs" / "schemas" / "qsing.schema.json"
    schema = json.loads(root.read_text())
    if definition:
        schema = {"$ref": f"#/$defs/{definition}", "$defs": schema["$defs"]}
    return jsonschema.Draft202012Validator(schema)


def test_reports_match_documented_schema():
    validator = _schema()
    p = qsing.preset("e8-pos", 1, 0)
    docs = [
        qsing.decompose(A2, "1,1"),
        qsing.nullcone(p["quiver"], p["alpha"], p["selected"]),
        qsing.bfunction(p["quiver"], p["alpha"], p["selected"]),
        qsing.singularities(p["quiver"], p["alpha"], p["selected"]),
        qsing.hom(A2, "1,1"),
    ]
    e6 = qsing.preset("e6-ex1", 2, 2)
    docs.append(qsing.singularities(e6["quiver"], e6["alpha"]))
    for doc in docs:
        validator.validate(doc)
    fam = docs[2]["family"]
    _schema("membership").validate(qsing.membership(fam, [9, -7]))
    _schema("certificate").validate(docs[-1]["verdict"]["certificate"])
