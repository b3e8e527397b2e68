import json
import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from sela.service import app

client = TestClient(app)


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_tsa_matrix2():
    resp = client.post("/tsa", json={"algebra": "matrix:2", "ell": 2})
    assert resp.status_code == 200
    data = resp.json()["claims"][0]["data"]
    assert data["dim"] == 10 and data["center_dim"] == 2


def test_tsa_truncpoly():
    resp = client.post("/tsa", json={"algebra": "truncpoly:2", "ell": 3})
    data = resp.json()["claims"][0]["data"]
    assert data["dim"] == 4


def test_tsa_quaternion_level1():
    resp = client.post("/tsa", json={"algebra": "quaternion:1,1", "ell": 1})
    data = resp.json()["claims"][0]["data"]
    assert data["dim"] == 4


def test_tsa_bad_algebra():
    resp = client.post("/tsa", json={"algebra": "matrix:zero", "ell": 1})
    assert resp.status_code in (400, 422)


def test_symcheck_sym_map_passes():
    resp = client.post("/symcheck", json={"algebra": "matrix:2",
                                          "map": "sym", "ell": 2,
                                          "order": 3, "samples": 40})
    claim = resp.json()["claims"][0]
    assert claim["data"]["holds"] is True
    assert claim["status"] == "certified"


def test_symcheck_trace_parity():
    fail = client.post("/symcheck", json={"algebra": "matrix:2",
                                          "map": "trace", "ell": 1,
                                          "order": 2}).json()
    assert fail["claims"][0]["data"]["holds"] is False
    assert fail["claims"][0]["data"]["failing_sample"]
    good = client.post("/symcheck", json={"algebra": "matrix:2",
                                          "map": "trace", "ell": 2,
                                          "order": 3}).json()
    assert good["claims"][0]["data"]["holds"] is True


def test_symcheck_trace_rejects_nonmatrix():
    resp = client.post("/symcheck", json={"algebra": "truncpoly:2",
                                          "map": "trace", "ell": 1})
    assert resp.status_code == 400


def test_seligman_truncpoly_level2():
    resp = client.post("/seligman", json={"algebra": "truncpoly:2",
                                          "n": 2, "lam": [2]})
    claim = resp.json()["claims"][0]
    assert claim["status"] == "certified"
    assert claim["data"]["dim"] == 3 and claim["data"]["iso"] is True


def test_seligman_vanishing():
    resp = client.post("/seligman", json={"algebra": "matrix:2",
                                          "n": 4, "lam": [0, 1, 0]})
    claim = resp.json()["claims"][0]
    assert claim["status"] == "certified-zero" and claim["data"]["dim"] == 0


def test_seligman_fp_mode():
    resp = client.post("/seligman", json={"algebra": "truncpoly:2",
                                          "n": 2, "lam": [1],
                                          "scalar": "fp"})
    claim = resp.json()["claims"][0]
    assert claim["data"]["dim"] == 2
    assert len(claim["data"]["primes"]) == 2


def test_seligman_bad_lambda():
    resp = client.post("/seligman", json={"algebra": "truncpoly:2",
                                          "n": 2, "lam": [1, 1]})
    assert resp.status_code == 400


def test_weyl_table_and_ann():
    resp = client.post("/weyl", json={"algebra": "field", "n": 2,
                                      "lam": [2], "depth": 4})
    claims = resp.json()["claims"]
    rows = {tuple(r["weight"]): r["dim"] for r in claims[0]["data"]["weights"]}
    assert [rows.get((2 - 2 * d,), 0) for d in range(5)] == [1, 1, 1, 0, 0]

    resp = client.post("/weyl", json={"algebra": "truncpoly:2", "n": 2,
                                      "lam": [1], "depth": 2, "ann_N": 2})
    claims = resp.json()["claims"]
    ann = [c for c in claims if c["tag"] == "annihilator-vs-ideal"][0]
    assert ann["status"] == "certified"


def test_reports_deterministic():
    payload = {"algebra": "truncpoly:2", "n": 2, "lam": [2]}
    a = client.post("/seligman", json=payload).json()
    b = client.post("/seligman", json=payload).json()
    a.pop("timing")
    b.pop("timing")
    assert json.dumps(a, sort_keys=False) == json.dumps(b, sort_keys=False)


def test_verify_quick_profile():
    resp = client.post("/verify", json={"quick": True})
    report = resp.json()
    assert report["command"] == "verify-all"
    by_tag = {c["tag"]: c["status"] for c in report["claims"]}
    assert by_tag["matrix4-vanishing"] == "skipped"
    rest = {t: s for t, s in by_tag.items() if t != "matrix4-vanishing"}
    assert set(rest.values()) == {"pass"}
