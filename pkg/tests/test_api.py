import pytest
from fastapi.testclient import TestClient

from src.dependencies import get_evaluator
from src.kontsevich.evaluate import IntersectionEvaluator
from src.main import app


@pytest.fixture(scope="module")
def client():
    shared = IntersectionEvaluator()
    app.dependency_overrides[get_evaluator] = lambda: shared
    with TestClient(app) as test_client:
        yield test_client
    app.dependency_overrides.clear()


def test_health(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_space_description(client):
    body = client.get("/spaces/2/4/0").json()
    assert body["dimension"] == 11
    assert body["picard_rank"] == 3
    assert [b["symbol"] for b in body["boundary"]] == ["K{dA=1}", "K{dA=2}"]

    degree_zero = client.get("/spaces/2/0/4").json()
    assert degree_zero["picard_rank"] is None
    assert len(degree_zero["boundary"]) == 3


def test_invalid_space(client):
    response = client.get("/spaces/1/2/0")
    assert response.status_code == 422
    assert response.json()["code"] == "S01"


def test_eval(client):
    response = client.post("/eval", json={"space": "r=2,d=3,n=0", "monomial": "H^3 K{dA=1}^5"})
    assert response.status_code == 200
    assert response.json() == {
        "value": "-2541/4", "integral": False, "space": "r=2,d=3,n=0", "monomial": "H^3 K{dA=1}^5",
    }


def test_eval_errors(client):
    response = client.post("/eval", json={"space": "r=2,d=3,n=0", "monomial": "H^7"})
    assert response.status_code == 422
    assert "not a top product" in response.json()["detail"]

    response = client.post("/eval", json={"space": "r=2,d=3,n=0", "monomial": "H^7 ?"})
    assert response.status_code == 400


def test_gw(client):
    assert client.get("/gw/nd/5").json() == {"value": "87304", "integral": True}
    body = client.post("/gw/invariant", json={"r": 3, "d": 2, "insertions": [2] * 8}).json()
    assert body["value"] == "92"
    assert body["insertions"] == [2] * 8


def test_charnum(client):
    body = client.post("/charnum", json={"r": 3, "d": 2, "alpha": {"2": 4}, "beta": 4}).json()
    assert body["value"] == "64"

    response = client.post("/charnum", json={"r": 3, "d": 2, "alpha": {"2": 4}})
    assert response.status_code == 422


def test_cuspidal_oracle_and_conics(client):
    assert client.get("/charnum/cuspidal/5").json()["value"] == "435168"
    assert client.get("/charnum/boundary-point/3/1").json()["value"] == "42"
    assert client.post("/charnum/conics", json={"conics": 5}).json()["value"] == "3264"
    assert client.post("/charnum/conics", json={"conics": 4}).status_code == 422


def test_table(client):
    body = client.get("/tables/conics-p2").json()
    assert body["table_id"] == "conics-p2"
    assert [row["value"] for row in body["rows"] if row["section"] == "characteristic"] == [
        "1", "2", "4", "4", "2", "1",
    ]
    assert client.get("/tables/sextics-p2").status_code == 422
