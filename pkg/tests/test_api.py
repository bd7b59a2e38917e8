import os
import sys

import pytest
from fastapi.testclient import TestClient

# Adiciona o diretório raiz ao path para importação
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from api_server import app
from graphs.generators import path
from strategies.joins import solve_join


@pytest.fixture
def client():
    with TestClient(app) as test_client:
        yield test_client


class TestServerInfo:
    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json()["status"] == "healthy"

    def test_info(self, client):
        data = client.get("/info").json()["data"]
        assert "petersen" in data["families"]
        assert data["methods"] == ["forward", "dual"]
        assert "join" in data["strategies"]
        assert data["engine"]["search_cap"] > 0


class TestGameEndpoints:
    def test_fools(self, client):
        response = client.post("/fools", json={"graph": "path:3"})
        assert response.status_code == 200
        assert response.json()["f_value"] == 2

    def test_fools_dual(self, client):
        response = client.post("/fools", json={"graph": "star:4", "method": "dual"})
        assert response.status_code == 200
        assert response.json()["f_value"] == 4

    def test_fools_errors(self, client):
        assert client.post("/fools", json={"graph": "path:3", "method": "sideways"}).status_code == 400
        assert client.post("/fools", json={"graph": "nope:3"}).status_code == 400
        response = client.post("/fools", json={"graph": "empty:2"})
        assert response.status_code == 422
        assert response.json()["detail"].startswith("Erro ao calcular F")

    def test_profile(self, client):
        data = client.post("/profile", json={"graph": "cycle:6"}).json()
        assert data["freely_nbhd_solvable"] is True

    def test_solve(self, client):
        data = client.post("/solve", json={"graph": "path:3", "holes": [0]}).json()
        assert data == {"solvable": True, "sequence": [[2, 1, 0]]}
        data = client.post("/solve", json={"graph": "path:3", "holes": [1]}).json()
        assert data == {"solvable": False, "sequence": None}

    def test_solve_hole_outside_graph(self, client):
        assert client.post("/solve", json={"graph": "path:3", "holes": [9]}).status_code == 400


class TestStrategyEndpoints:
    def test_unknown_kind(self, client):
        assert client.post("/strategy/spiral", json={"graph": "path:3"}).status_code == 404

    def test_join_needs_other(self, client):
        assert client.post("/strategy/join", json={"graph": "path:3"}).status_code == 400

    def test_product(self, client):
        response = client.post("/strategy/product", json={"graph": "path:2", "other": "path:2"})
        assert response.status_code == 200
        assert response.json()["claim"]["terminal_size"] == 1

    def test_precondition(self, client):
        assert client.post("/strategy/hampath", json={"graph": "path:3"}).status_code == 422

    def test_check(self, client):
        cert = solve_join(path(3), path(2)).model_dump()
        data = client.post("/check", json={"certificate": cert}).json()
        assert data["valid"] is True
        assert data["error"] is None

        cert["jumps"] = list(reversed(cert["jumps"]))
        data = client.post("/check", json={"certificate": cert}).json()
        assert data["valid"] is False
        assert data["end"] is None
