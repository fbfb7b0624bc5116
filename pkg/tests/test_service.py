import math

import pytest
from fastapi.testclient import TestClient

from liefock.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_validate_catalog(client):
    r = client.post("/validate", json={"catalog": "l5_7"})
    assert r.status_code == 200
    body = r.json()
    assert body["validation"]["accepted"] is True
    assert body["algebra"]["dim"] == 5


def test_analyze_inline_algebra(client):
    payload = {
        "dim": 3,
        "brackets": [{"i": 0, "j": 1, "coeffs": [[0, 0], [0, 0], [1, 0]]}],
    }
    r = client.post("/analyze", json=payload)
    assert r.status_code == 200
    body = r.json()
    assert body["nilpotency_class"] == 2
    assert body["center"]["dim"] == 1


def test_input_requires_exactly_one_source(client):
    r = client.post("/analyze", json={})
    assert r.status_code == 422
    r = client.post("/analyze", json={"catalog": "a_sh", "dim": 5})
    assert r.status_code == 422


def test_classify_swanson(client):
    r = client.post("/classify", json={"catalog": f"swanson:{math.pi / 8}"})
    assert r.status_code == 200
    assert r.json()["matched"] == "l5_2"


def test_schur_with_audit(client):
    r = client.post("/schur?audit=true", json={"catalog": "a_sh"})
    assert r.status_code == 200
    body = r.json()
    assert body["cohomology"]["h2_dim"] == 7
    assert body["multiplier_audit"]["claimed_h2"] == 5


def test_decompose_endpoint(client):
    zero, one = [0, 0], [1, 0]
    r = client.post("/decompose", json={
        "algebra": {"catalog": "swanson:0.392699081698724"},
        "a_basis": [[one, zero, zero, zero, zero], [zero, zero, zero, zero, one]],
        "b_basis": [
            [zero, one, zero, zero, zero],
            [zero, zero, one, zero, zero],
            [zero, zero, zero, one, zero],
            [zero, zero, zero, zero, one],
        ],
    })
    assert r.status_code == 200
    verdict = r.json()["verdict"]
    assert verdict["is_semidirect"] is False
    assert verdict["is_central"] is True
    assert verdict["intersection_dim"] == 1


def test_model_endpoint(client):
    r = client.post("/model", json={"model": "swanson", "theta": math.pi / 8})
    assert r.status_code == 200
    body = r.json()
    assert body["commutator_defect"] <= 1e-12
    assert body["gram"]["max_deviation_from_identity"] <= 1e-6


def test_model_without_verification(client):
    r = client.post("/model?verify=false", json={"model": "shifted"})
    assert r.status_code == 200
    assert r.json()["gram"] is None


def test_audit_endpoint(client):
    r = client.post("/audit", json={"model": "shifted", "alpha": [0.3, 0.0], "beta": [0.2, 0.0]})
    assert r.status_code == 200
    body = r.json()
    assert body["classification"]["matched"] == "l5_2"
    assert any(c["claim"] == "center_dim" for c in body["claims"])


def test_catalog_endpoint(client):
    r = client.get("/catalog")
    assert r.status_code == 200
    assert "heisenberg:<m>" in r.json()["entries"]


def test_error_code_surfaces(client):
    r = client.post("/model", json={"model": "swanson", "theta": 0.0})
    assert r.status_code == 422
    assert r.json()["error"]["code"] == "BAD_PARAMETER"
    r = client.post("/analyze", json={"catalog": "unknown_thing"})
    assert r.status_code == 422
    assert r.json()["error"]["code"] == "BAD_PARAMETER"
