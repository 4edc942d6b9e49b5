import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from cohfin.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_space_endpoint(client):
    resp = client.post("/space", json={"expr": "dual(path(3))"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["web_size"] == 3
    assert body["space"]["coherent_pairs"] == [[0, 2]]
    assert "graph" in body["dot"]
    assert body["pass"] is True


def test_space_bad_expression(client):
    resp = client.post("/space", json={"expr": "octahedron(3)"})
    assert resp.status_code == 422
    assert "octahedron" in resp.json()["detail"]


def test_space_missing_field(client):
    resp = client.post("/space", json={})
    assert resp.status_code == 422  # pydantic validation


def test_laws_endpoint(client):
    resp = client.post("/laws", json={"max_n": 3, "cases": 10})
    assert resp.status_code == 200
    body = resp.json()
    assert body["suite"] == "laws"
    assert body["pass"] is True
    assert len(body["results"]) == 3
    for res in body["results"]:
        assert set(res) == {"law", "params", "pass", "witness"}
        assert res["pass"] is True and res["witness"] is None


def test_ramsey_upper_endpoint(client):
    resp = client.post("/ramsey/upper", json={"sizes": [3, 3]})
    assert resp.json()["value"] == 6


def test_ramsey_upper_rejects_bad_sizes(client):
    resp = client.post("/ramsey/upper", json={"sizes": [0, 3]})
    assert resp.status_code == 422


def test_ramsey_exact_endpoint(client):
    resp = client.post("/ramsey/exact", json={"sizes": [3, 3]})
    body = resp.json()
    assert body["value"] == 6
    assert body["lower_bound_coloring"]["n"] == 5


def test_ramsey_exact_refuses_over_budget(client):
    resp = client.post("/ramsey/exact", json={"sizes": [4, 4]})
    assert resp.status_code == 422
    assert "budget" in resp.json()["detail"]


def test_ramsey_find_endpoint(client):
    resp = client.post("/ramsey/find",
                       json={"sizes": [3, 3], "n": 6, "seed": 1})
    body = resp.json()
    assert body["pass"] is True
    assert body["witness"] is not None
    assert len(body["witness"]["vertices"]) == 3


def test_functor_endpoint(client):
    resp = client.post("/functor", json={"cases": 20, "seed": 0, "k": 2})
    body = resp.json()
    assert body["pass"] is True
    laws = {r["law"]: r for r in body["results"]}
    w = laws["non-fullness-witness"]["witness"]["relation"]
    assert w["pairs"] == [[0, 0], [0, 1]]


def test_bang_endpoint(client):
    resp = client.post("/bang", json={"n_max": 5, "degree": 3})
    body = resp.json()
    assert body["pass"] is True
    assert body["table"][4]["set_bang_kn"] == 32
    assert body["table"][4]["set_bang_dual_kn"] == 6


def test_presented_endpoint(client):
    resp = client.post("/presented", json={"blocks": 4, "depth": 20})
    body = resp.json()
    assert body["pass"] is True
    assert body["growth_profile"] == [[1, 1, 1], [3, 2, 2], [6, 3, 3],
                                      [10, 4, 4]]
    assert all(row[1] <= 1 and row[2] <= 1
               for row in body["edit_comparison"])


def test_presented_unknown_family(client):
    resp = client.post("/presented", json={"family": "mystery"})
    assert resp.status_code == 422


def test_nonuniform_endpoint(client):
    resp = client.post("/nonuniform", json={"cases": 5})
    body = resp.json()
    assert body["pass"] is True
    assert len(body["results"]) == 6


def test_prop21_endpoint(client):
    resp = client.post("/prop21", json={
        "first": [{"prefix": "", "period": "0"}],
        "second": [{"prefix": "", "period": "1"}],
    })
    body = resp.json()
    assert body["pass"] is True
    witness = body["results"][0]["witness"]
    assert witness["word"] == {"prefix": "", "period": "0"}


def test_prop21_equal_sets_rejected(client):
    w = {"prefix": "", "period": "01"}
    resp = client.post("/prop21", json={"first": [w], "second": [w]})
    assert resp.status_code == 422
    assert "equal" in resp.json()["detail"]


def test_prop21_bad_word(client):
    resp = client.post("/prop21", json={
        "first": [{"prefix": "2", "period": "0"}],
        "second": [{"prefix": "", "period": "1"}],
    })
    assert resp.status_code == 422


def test_reports_are_deterministic(client):
    payload = {"max_n": 4, "m": 1, "k": 1, "seed": 7, "cases": 30}
    a = client.post("/laws", json=payload).json()
    b = client.post("/laws", json=payload).json()
    assert a == b
