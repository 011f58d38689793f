from fastapi.testclient import TestClient

from streampace.service import create_app
from conftest import FIXTURES

client = TestClient(create_app())


def spec_text(name):
    return (FIXTURES / name).read_text()


def test_check_ok():
    resp = client.post("/check", json={"spec": spec_text("battery.spec")})
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "ok"
    assert body["order"] == ["drain", "warning"]


def test_check_type_error():
    resp = client.post("/check", json={"spec": spec_text("invalid.spec")})
    body = resp.json()
    assert body["status"] == "type_error"
    err = body["error"]
    assert err["kind"] == "EntailmentFailure"
    assert (err["must"], err["can"]) == ("a", "b")
    assert err["scenario"] == "when a arrives without b"


def test_check_extension_flags():
    resp = client.post("/check", json={
        "spec": spec_text("reorder.spec"), "reorder": False})
    assert resp.json()["status"] == "type_error"
    resp = client.post("/check", json={"spec": spec_text("reorder.spec")})
    assert resp.json()["order"] == ["y", "x"]


def test_check_invalid_syntax():
    resp = client.post("/check", json={"spec": "output x @"})
    body = resp.json()
    assert body["status"] == "invalid"
    assert "expected" in body["diagnostic"]


def test_run():
    resp = client.post("/run", json={
        "spec": spec_text("hold_fix.spec"),
        "trace_csv": (FIXTURES / "hold_fix_trace.csv").read_text(),
    })
    body = resp.json()
    assert body["status"] == "ok"
    assert body["output_csv"] == "time,x,y\n0,1,\n1,,1\n"


def test_run_missing_column():
    resp = client.post("/run", json={
        "spec": spec_text("hold_fix.spec"),
        "trace_csv": "time,a\n0,1\n",
    })
    body = resp.json()
    assert body["status"] == "invalid"
    assert "missing input column" in body["diagnostic"]


def test_oracle_consistent():
    resp = client.post("/oracle", json={
        "spec": spec_text("hold_fix.spec"), "horizon": 2, "domain": [0]})
    body = resp.json()
    assert body["status"] == "consistent"
    assert body["inputs_checked"] == 16


def test_oracle_counterexample():
    resp = client.post("/oracle", json={
        "spec": spec_text("sync_pair.spec"), "horizon": 2, "domain": [0]})
    body = resp.json()
    assert body["status"] == "counterexample"
    assert body["counterexample_csv"].startswith("time,a,b\n")
