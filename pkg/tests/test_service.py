"""HTTP API: endpoint shapes, status mapping, atomicity, restart."""

import warnings

import pytest

from knottyjones.bracket import StateSumBudget
from knottyjones.oracle import StateSumOracle
from knottyjones.service import create_app

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

TREFOIL_PD = {"crossings": [[1, 4, 2, 3], [3, 6, 4, 5], [5, 2, 6, 1]]}
TREFOIL_WIRE = {
    "variable": "t",
    "terms": [{"exp": 1, "coef": "1"}, {"exp": 3, "coef": "1"},
              {"exp": 4, "coef": "-1"}],
}
WIN_SUBMISSION = {"submission": {"moves": [
    {"kind": "R1Add", "site": {"arc": 0, "side": "L", "chirality": -1}},
    {"kind": "R2Add", "site": {"arc1": 1, "arc2": 2, "over": True}},
    {"kind": "CrossingFlip", "site": {"crossing": 0}},
    {"kind": "CrossingFlip", "site": {"crossing": 1}},
]}}


@pytest.fixture
def client(tmp_path):
    app = create_app(tmp_path)
    with TestClient(app, raise_server_exceptions=False) as c:
        yield c


def new_game(client, **config):
    config.setdefault("seed", 42)
    r = client.post("/games", json={"config": config})
    assert r.status_code == 200
    return r.json()


class TestHealth:
    def test_healthz(self, client):
        r = client.get("/healthz")
        assert r.status_code == 200
        assert r.json() == {"status": "ok"}


class TestGames:
    def test_create_then_get_identical_snapshot(self, client):
        created = new_game(client)
        got = client.get(f"/games/{created['id']}")
        assert got.status_code == 200
        assert got.json()["snapshot"] == created["snapshot"]

    def test_snapshot_shape(self, client):
        snap = new_game(client)["snapshot"]
        assert snap["status"] == "Ongoing"
        assert snap["playerPd"] == ""
        assert snap["playerJp"]["terms"] == [{"exp": 0, "coef": "1"}]
        assert "provenance" not in snap["opponent"]
        assert "pd" in snap["opponent"]

    def test_opponent_diagram_hidden_when_configured(self, client):
        snap = new_game(client, showOpponentDiagram=False)["snapshot"]
        assert "pd" not in snap["opponent"]
        assert snap["opponent"]["jp"]["terms"]

    def test_unknown_id_404(self, client):
        r = client.get("/games/nope")
        assert r.status_code == 404
        assert r.json()["error"]["type"] == "NotFound"

    def test_malformed_body_400(self, client):
        assert client.post("/games", json=[1, 2]).status_code == 400
        r = client.post("/games", json={"config": {"totalRounds": 0}})
        assert r.status_code == 400

    def test_moves_endpoint_lists_sites(self, client):
        created = new_game(client)
        r = client.get(f"/games/{created['id']}/moves")
        assert r.status_code == 200
        sites = r.json()
        assert len(sites["R1Add"]) == 2
        assert sites["R1Remove"] == []
        assert sites["CrossingFlip"] == []


class TestTurns:
    def test_winning_turn(self, client):
        created = new_game(client, totalRounds=1)
        r = client.post(f"/games/{created['id']}/turns", json=WIN_SUBMISSION)
        assert r.status_code == 200
        snap = r.json()["snapshot"]
        assert snap["status"] == "GameWon"
        assert snap["score"] == 600

    def test_budget_violation_422_and_snapshot_unchanged(self, client):
        created = new_game(client)
        over = {"submission": {"moves": [
            {"kind": "R1Add", "site": {"arc": 0, "side": "L", "chirality": 1}}
        ] * 5}}
        r = client.post(f"/games/{created['id']}/turns", json=over)
        assert r.status_code == 422
        assert r.json()["error"]["type"] == "BudgetViolation"
        got = client.get(f"/games/{created['id']}")
        assert got.json()["snapshot"] == created["snapshot"]

    def test_inapplicable_move_422(self, client):
        created = new_game(client)
        bad = {"submission": {"moves": [
            {"kind": "R1Remove", "site": {"crossing": 7}}]}}
        r = client.post(f"/games/{created['id']}/turns", json=bad)
        assert r.status_code == 422
        assert r.json()["error"]["type"] == "InapplicableMove"

    def test_missing_submission_key_400(self, client):
        created = new_game(client)
        r = client.post(f"/games/{created['id']}/turns", json={"moves": []})
        assert r.status_code == 400

    def test_turn_on_unknown_game_404(self, client):
        r = client.post("/games/nope/turns", json=WIN_SUBMISSION)
        assert r.status_code == 404

    def test_concurrent_turn_409(self, client):
        created = new_game(client)
        store = client.app.state.store
        lock = store._lock_for(created["id"])
        assert lock.acquire(blocking=False)
        try:
            r = client.post(f"/games/{created['id']}/turns",
                            json={"submission": {"moves": []}})
            assert r.status_code == 409
            assert r.json()["error"]["type"] == "TurnConflict"
        finally:
            lock.release()


class TestJonesEndpoint:
    def test_trefoil_wire_value(self, client):
        r = client.post("/jones", json=TREFOIL_PD)
        assert r.status_code == 200
        assert r.json() == TREFOIL_WIRE

    def test_unknot(self, client):
        r = client.post("/jones", json={"crossings": []})
        assert r.json()["terms"] == [{"exp": 0, "coef": "1"}]

    def test_shape_error_400(self, client):
        r = client.post("/jones", json={"crossings": [[1, 2, 3]]})
        assert r.status_code == 400
        assert r.json()["error"]["type"] == "PdSyntaxError"

    def test_invalid_diagram_422(self, client):
        r = client.post("/jones", json={"crossings": [[1, 2, 3, 4], [2, 1, 3, 4]]})
        assert r.status_code == 422
        assert r.json()["error"]["type"] == "ValidationError"

    def test_budget_exhaustion_503(self, tmp_path):
        app = create_app(tmp_path / "b", StateSumOracle(StateSumBudget(max_crossings=1)))
        with TestClient(app, raise_server_exceptions=False) as c:
            r = c.post("/jones", json=TREFOIL_PD)
            assert r.status_code == 503
            assert r.json()["error"]["type"] == "BudgetExceeded"


class TestRestart:
    def test_sessions_resume_after_restart(self, tmp_path):
        with TestClient(create_app(tmp_path), raise_server_exceptions=False) as c:
            created = new_game(c, totalRounds=2)
            turn = c.post(f"/games/{created['id']}/turns", json=WIN_SUBMISSION)
            assert turn.json()["snapshot"]["status"] == "RoundWon"
        with TestClient(create_app(tmp_path), raise_server_exceptions=False) as c2:
            got = c2.get(f"/games/{created['id']}")
            assert got.status_code == 200
            assert got.json()["snapshot"] == turn.json()["snapshot"]

    def test_corrupt_file_not_served_after_restart(self, tmp_path):
        with TestClient(create_app(tmp_path), raise_server_exceptions=False) as c:
            created = new_game(c)
        (tmp_path / f"{created['id']}.json").write_text("garbage")
        with TestClient(create_app(tmp_path), raise_server_exceptions=False) as c2:
            assert c2.get(f"/games/{created['id']}").status_code == 404


class TestDebugFlag:
    def test_debug_app_exposes_provenance(self, tmp_path):
        app = create_app(tmp_path, debug=True)
        with TestClient(app, raise_server_exceptions=False) as c:
            snap = new_game(c)["snapshot"]
            prov = snap["opponent"]["provenance"]
            assert isinstance(prov["moves"], list)
            assert prov["moves"]
