"""File-per-session persistence with replay verification.

Each session lives in `<data_dir>/<id>.json` holding the config, the
ordered submission log, and the latest snapshot. The snapshot is pure
redundancy: the game is deterministic given (config, log), so on load
every record is re-derived by replay and compared. A record that fails
to parse or to verify is quarantined (renamed to `<id>.json.corrupt`)
and never served; other sessions are unaffected.

Writes go through a temp file in the same directory followed by
os.replace, so a crash mid-write leaves either the old record or the
new one, never a torn file. Per-session turn application is guarded by
a non-blocking lock; a second concurrent turn raises TurnConflict
instead of queueing, which the service maps to HTTP 409.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from .errors import CorruptSession, KnotError, TurnConflict
from .game import (
    GameConfig,
    GameState,
    Generator,
    TurnSubmission,
    new_game,
    play_turn,
    state_from_json_obj,
    state_to_json_obj,
)
from .oracle import JonesOracle, StateSumOracle
from .pcg import generate_opponent


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass(frozen=True)
class SessionRecord:
    id: str
    config: GameConfig
    log: Tuple[TurnSubmission, ...]
    snapshot: GameState
    created_at: str
    updated_at: str

    def to_json_obj(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "createdAt": self.created_at,
            "updatedAt": self.updated_at,
            "config": self.config.to_json_obj(),
            "log": [sub.to_json_obj() for sub in self.log],
            "snapshot": state_to_json_obj(
                self.snapshot, include_opponent_diagram=True,
                include_provenance=True),
        }

    @classmethod
    def from_json_obj(cls, obj: Any) -> "SessionRecord":
        if not isinstance(obj, dict):
            raise ValueError("session record must be an object")
        try:
            return cls(
                id=str(obj["id"]),
                config=GameConfig.from_json_obj(obj["config"]),
                log=tuple(TurnSubmission.from_json_obj(s) for s in obj["log"]),
                snapshot=state_from_json_obj(obj["snapshot"]),
                created_at=str(obj["createdAt"]),
                updated_at=str(obj["updatedAt"]),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"bad session record: {exc}") from exc


class SessionStore:
    """In-memory session map backed by one JSON file per session."""

    def __init__(self, data_dir: Path, oracle: Optional[JonesOracle] = None,
                 generator: Generator = generate_opponent, verify: bool = True):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.oracle = oracle if oracle is not None else StateSumOracle()
        self.generator = generator
        self._records: Dict[str, SessionRecord] = {}
        self._locks: Dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self.quarantined: List[str] = []
        self._load_all(verify=verify)

    # -- loading ---------------------------------------------------------

    def _load_all(self, verify: bool) -> None:
        for path in sorted(self.data_dir.glob("*.json")):
            try:
                record = self._load_one(path, verify=verify)
            except CorruptSession:
                self._quarantine(path)
                continue
            self._records[record.id] = record

    def _load_one(self, path: Path, verify: bool) -> SessionRecord:
        try:
            obj = json.loads(path.read_text())
            record = SessionRecord.from_json_obj(obj)
        except (OSError, ValueError, KnotError) as exc:
            raise CorruptSession(f"{path.name}: {exc}") from exc
        if record.id != path.stem:
            raise CorruptSession(f"{path.name}: id field {record.id!r} does not match filename")
        if verify:
            replayed = self._replay(record.config, record.log)
            if replayed != record.snapshot:
                raise CorruptSession(f"{path.name}: snapshot does not match replay of its log")
        return record

    def _replay(self, config: GameConfig, log: Tuple[TurnSubmission, ...]) -> GameState:
        try:
            state = new_game(config, self.oracle, self.generator)
            for sub in log:
                state = play_turn(state, sub, self.oracle, self.generator)
        except KnotError as exc:
            raise CorruptSession(f"log replay failed: {exc}") from exc
        return state

    def _quarantine(self, path: Path) -> None:
        target = path.with_suffix(path.suffix + ".corrupt")
        try:
            os.replace(path, target)
        except OSError:
            pass
        self.quarantined.append(path.stem)

    # -- persistence -----------------------------------------------------

    def _write(self, record: SessionRecord) -> None:
        payload = json.dumps(record.to_json_obj(), indent=1, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.data_dir, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, self.data_dir / f"{record.id}.json")
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    # -- API -------------------------------------------------------------

    def ids(self) -> List[str]:
        return sorted(self._records)

    def get(self, session_id: str) -> SessionRecord:
        try:
            return self._records[session_id]
        except KeyError:
            raise KeyError(f"no session {session_id!r}") from None

    def create(self, config: GameConfig) -> SessionRecord:
        state = new_game(config, self.oracle, self.generator)
        now = _now()
        record = SessionRecord(
            id=uuid.uuid4().hex, config=config, log=(), snapshot=state,
            created_at=now, updated_at=now,
        )
        self._write(record)
        with self._registry_lock:
            self._records[record.id] = record
        return record

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def play(self, session_id: str, submission: TurnSubmission) -> SessionRecord:
        """Apply one turn atomically. The stored record never reflects a
        failed turn: state transitions are computed on immutable values and
        the file is replaced before the in-memory map is updated."""
        record = self.get(session_id)
        lock = self._lock_for(session_id)
        if not lock.acquire(blocking=False):
            raise TurnConflict(f"session {session_id} is applying another turn")
        try:
            record = self.get(session_id)
            state = play_turn(record.snapshot, submission, self.oracle, self.generator)
            updated = SessionRecord(
                id=record.id, config=record.config,
                log=record.log + (submission,), snapshot=state,
                created_at=record.created_at, updated_at=_now(),
            )
            self._write(updated)
            with self._registry_lock:
                self._records[record.id] = updated
            return updated
        finally:
            lock.release()
