import pytest
from fastapi.testclient import TestClient

from palf.datasets import dataset_text
from palf.service.app import app

W1 = dataset_text("w1")
BROKEN = "surface 0 4\ncurve a convex 1 9\npalf p a\n"


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_healthz(client):
    r = client.get("/healthz")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_validate(client):
    r = client.post("/validate", json={"text": W1})
    assert r.status_code == 200
    assert r.json() == {"valid": True, "violations": [], "palfs": ["W1"]}


def test_parse_errors_are_structured_400s(client):
    r = client.post("/validate", json={"text": BROKEN})
    assert r.status_code == 400
    detail = r.json()["detail"]
    assert detail["line"] == 2 and detail["column"] == 16
    assert "out of range" in detail["message"]


def test_invariants(client):
    r = client.post("/invariants", json={"text": W1})
    assert r.status_code == 200
    records = r.json()["records"]
    values = {rec["name"]: rec["value"] for rec in records}
    assert values == {"euler": "1", "h1_total": "0", "h2_total": "0",
                      "h1_boundary": "0", "cycle_count": "4",
                      "fiber_boundaries": "5"}
    assert all(rec["palf"] == "W1" for rec in records)


def test_unknown_palf_name_is_a_plain_400(client):
    r = client.post("/invariants", json={"text": W1, "palf": "nope"})
    assert r.status_code == 400
    assert "nope" in r.json()["detail"]


def test_monodromy_arcs_and_abelianized(client):
    r = client.post("/monodromy", json={"text": W1})
    assert r.status_code == 200
    body = r.json()
    assert body["palf"] == "W1"
    assert len(body["arcs"]) == 4 and body["matrix"] is None
    r = client.post("/monodromy", json={"text": W1, "show": "abelianized"})
    assert r.json()["matrix"] == [[1 if i == j else 0 for j in range(4)]
                                  for i in range(4)]


def test_compare(client):
    c1 = dataset_text("c1", -5)
    c2 = dataset_text("c2", -5)
    r = client.post("/compare", json={"text_a": c1, "text_b": c2})
    assert r.status_code == 200
    body = r.json()
    assert body["invariants_equal"] and body["same_fiber"]
    assert body["relation"] == "neither"
    assert {row["name"] for row in body["rows"]} >= {"euler", "h1_total"}


def test_hurwitz_search(client):
    doc_a = "surface 0 4\ncurve a convex 1 2\ncurve b convex 2 3\npalf p a b\n"
    doc_b = ("surface 0 4\ncurve a convex 1 2\ncurve b convex 2 3\n"
             "curve a2 from a apply +c(2,3)\npalf p b a2\n")
    r = client.post("/hurwitz/search",
                    json={"text_a": doc_a, "text_b": doc_b, "depth": 2})
    assert r.status_code == 200
    body = r.json()
    assert body["found"] is True
    assert body["moves"] == [{"index": 0, "direction": "right"}]
    r = client.post("/hurwitz/search",
                    json={"text_a": doc_a, "text_b": doc_b, "depth": 0})
    assert r.json()["found"] is False
    r = client.post("/hurwitz/search",
                    json={"text_a": doc_a, "text_b": doc_b, "depth": -1})
    assert r.status_code == 422  # schema-level bound


def test_generate(client):
    r = client.post("/datasets/generate", json={"which": "c1", "m": -6})
    assert r.status_code == 200
    assert "surface 0 11" in r.json()["text"]
    r = client.post("/datasets/generate", json={"which": "w1", "m": -5})
    assert r.status_code == 400
    r = client.post("/datasets/generate", json={"which": "k3"})
    assert r.status_code == 422


def test_relations_check(client):
    r = client.post("/relations/check", json={"kind": "lantern"})
    assert r.status_code == 200
    assert r.json() == {"kind": "lantern", "boundaries": 4, "holds": True}
    r = client.post("/relations/check",
                    json={"kind": "commuting", "boundaries": 5})
    assert r.json()["holds"] is True


def test_render(client):
    r = client.post("/render", json={"text": W1})
    assert r.status_code == 200
    assert r.json()["svg"].startswith("<svg ")
