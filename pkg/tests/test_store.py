"""Persistence: atomic writes, reload verification, quarantine, locking."""

import json

import pytest

from knottyjones.diagram import build_diagram, parse_pd
from knottyjones.errors import InapplicableMove, TurnConflict
from knottyjones.game import GameConfig, TurnSubmission
from knottyjones.moves import Move
from knottyjones.oracle import StateSumOracle
from knottyjones.pcg import GeneratedOpponent
from knottyjones.store import SessionRecord, SessionStore

ORACLE = StateSumOracle()
TREFOIL = build_diagram(parse_pd("X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]"))
TREFOIL_JP = ORACLE.evaluate(TREFOIL)


def stub_generator(config, player_jp, oracle):
    """Fixed trefoil opponent: keeps store tests fast and deterministic."""
    return GeneratedOpponent(
        diagram=TREFOIL, jp=TREFOIL_JP,
        provenance={"seed": config.seed, "attempt": 1, "moves": ()},
        attempts=1,
    )


def make_store(path, **kw):
    kw.setdefault("generator", stub_generator)
    return SessionStore(path, ORACLE, **kw)


def r1():
    return Move("R1Add", {"arc": 0, "side": "L", "chirality": 1})


class TestCreateAndGet:
    def test_create_writes_one_file(self, tmp_path):
        store = make_store(tmp_path)
        rec = store.create(GameConfig(seed=1))
        assert (tmp_path / f"{rec.id}.json").exists()
        assert store.get(rec.id) == rec

    def test_unknown_id_raises_key_error(self, tmp_path):
        with pytest.raises(KeyError):
            make_store(tmp_path).get("missing")

    def test_many_sessions_unique_files(self, tmp_path):
        store = make_store(tmp_path)
        ids = {store.create(GameConfig(seed=i)).id for i in range(100)}
        assert len(ids) == 100
        assert len(list(tmp_path.glob("*.json"))) == 100

    def test_record_json_round_trip(self, tmp_path):
        store = make_store(tmp_path)
        rec = store.create(GameConfig(seed=1))
        back = SessionRecord.from_json_obj(json.loads(json.dumps(rec.to_json_obj())))
        assert back == rec


class TestPlay:
    def test_play_appends_log_and_persists(self, tmp_path):
        store = make_store(tmp_path)
        rec = store.create(GameConfig(seed=1))
        rec2 = store.play(rec.id, TurnSubmission((r1(),)))
        assert len(rec2.log) == 1
        assert rec2.snapshot.turn_in_round == 2
        on_disk = json.loads((tmp_path / f"{rec.id}.json").read_text())
        assert len(on_disk["log"]) == 1

    def test_failed_play_changes_nothing(self, tmp_path):
        store = make_store(tmp_path)
        rec = store.create(GameConfig(seed=1))
        before = (tmp_path / f"{rec.id}.json").read_text()
        bad = TurnSubmission((Move("R1Remove", {"crossing": 7}),))
        with pytest.raises(InapplicableMove):
            store.play(rec.id, bad)
        assert store.get(rec.id) == rec
        assert (tmp_path / f"{rec.id}.json").read_text() == before

    def test_concurrent_turn_conflicts(self, tmp_path):
        store = make_store(tmp_path)
        rec = store.create(GameConfig(seed=1))
        lock = store._lock_for(rec.id)
        assert lock.acquire(blocking=False)
        try:
            with pytest.raises(TurnConflict):
                store.play(rec.id, TurnSubmission((r1(),)))
        finally:
            lock.release()
        store.play(rec.id, TurnSubmission((r1(),)))


class TestReload:
    def test_restart_resumes_identical_state(self, tmp_path):
        store = make_store(tmp_path)
        rec = store.create(GameConfig(seed=1))
        rec = store.play(rec.id, TurnSubmission((r1(),)))
        again = make_store(tmp_path)
        assert again.get(rec.id).snapshot == rec.snapshot
        assert again.get(rec.id).log == rec.log

    def test_truncated_file_quarantined_others_served(self, tmp_path):
        store = make_store(tmp_path)
        good = store.create(GameConfig(seed=1))
        (tmp_path / "broken.json").write_text("{\"id\": \"broken\", trunc")
        again = make_store(tmp_path)
        assert "broken" in again.quarantined
        assert (tmp_path / "broken.json.corrupt").exists()
        assert not (tmp_path / "broken.json").exists()
        assert good.id in again.ids()

    def test_tampered_snapshot_fails_replay_verification(self, tmp_path):
        store = make_store(tmp_path)
        rec = store.create(GameConfig(seed=1))
        path = tmp_path / f"{rec.id}.json"
        obj = json.loads(path.read_text())
        obj["snapshot"]["score"] = 12345
        path.write_text(json.dumps(obj))
        again = make_store(tmp_path)
        assert rec.id in again.quarantined
        assert rec.id not in again.ids()

    def test_filename_id_mismatch_quarantined(self, tmp_path):
        store = make_store(tmp_path)
        rec = store.create(GameConfig(seed=1))
        src = tmp_path / f"{rec.id}.json"
        (tmp_path / "aliasname.json").write_text(src.read_text())
        again = make_store(tmp_path)
        assert "aliasname" in again.quarantined
        assert rec.id in again.ids()

    def test_verification_can_be_disabled(self, tmp_path):
        store = make_store(tmp_path)
        rec = store.create(GameConfig(seed=1))
        path = tmp_path / f"{rec.id}.json"
        obj = json.loads(path.read_text())
        obj["snapshot"]["score"] = 12345
        path.write_text(json.dumps(obj))
        lax = make_store(tmp_path, verify=False)
        assert lax.get(rec.id).snapshot.score == 12345
