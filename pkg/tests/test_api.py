"""
Tests for the HTTP surface
"""
import pytest
from fastapi.testclient import TestClient

from api import app

SESSION = "ring Q[x,y]\nideal I = x^2, x*y\nmodule M = quot(I)\nsop s on M = y\n"


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestEndpoints:
    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json()["status"] == "healthy"

    def test_commands(self, client):
        assert "seq-gcm" in client.get("/commands").json()

    def test_examples(self, client):
        examples = client.get("/examples").json()
        assert [e["id"] for e in examples] == ["4.7", "5.5", "5.6"]
        assert all("ring Q[" in e["session_text"] for e in examples)

    def test_parse(self, client):
        response = client.post("/parse", json={"session_text": SESSION})
        assert response.status_code == 200
        body = response.json()
        assert body["session"]["modules"]["M"]["dimension"] == 1
        assert body["normalized"].startswith("ring Q[x,y]")

    def test_parse_error_location(self, client):
        response = client.post("/parse", json={"session_text": "ring Q[x,y]\nideal I = x + q\n"})
        assert response.status_code == 400
        detail = response.json()["detail"]
        assert (detail["error"], detail["line"], detail["column"]) == ("SessionError", 2, 15)

    def test_run(self, client):
        response = client.post("/run", json={"command": "seq-cm", "session_text": SESSION})
        assert response.status_code == 200
        report = response.json()
        assert report["status"] == "success"
        assert report["invariants"]["I_D"] == 0

    def test_run_reports_errors_in_body(self, client):
        response = client.post(
            "/run", json={"command": "dimfilt", "session_text": SESSION, "options": {"module": "N"}}
        )
        assert response.status_code == 200
        assert response.json()["status"] == "error"

    def test_run_rejects_bad_requests(self, client):
        assert client.post("/run", json={"command": "frobnicate"}).status_code == 400
        assert client.post("/run", json={"command": "dimfilt"}).status_code == 400
        response = client.post("/run", json={"command": "corpus", "options": {"out_dir": "/tmp/x"}})
        assert response.status_code == 400

    def test_run_example_needs_no_session(self, client):
        response = client.post("/run", json={"command": "verify-paper-example", "options": {"example": "9.9"}})
        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "error"
        assert "unknown example '9.9'" in body["message"]

    def test_run_corpus(self, client):
        response = client.post("/run", json={"command": "corpus", "options": {"count": 2}})
        assert response.status_code == 200
        assert len(response.json()["tables"]["corpus"]) == 2
