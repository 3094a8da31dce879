"""HTTP JSON API over the game store.

Endpoint shapes:

  POST /games           {"config": {...}}        -> {"id", "snapshot"}
  GET  /games/{id}                               -> {"snapshot"}
  POST /games/{id}/turns {"submission": {...}}   -> {"snapshot"}
  GET  /games/{id}/moves                         -> applicable move sites
  POST /jones           {"crossings": [[...]]}   -> Laurent polynomial JSON
  GET  /healthz                                  -> {"status": "ok"}

Status mapping: 400 malformed body (shape-level), 404 unknown session,
409 concurrent turn on one session, 422 domain rejection (bad move,
budget violation, crossing cap, invalid diagram), 503 oracle budget
exhaustion. Error bodies are {"error": {"type", "message"}}.

The health endpoint never touches the oracle. Snapshots returned by the
API hide the opponent's construction provenance unless the app was
created with debug=True; the opponent diagram itself is shown or hidden
per the game config flag.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .diagram import build_diagram
from .errors import (
    BudgetExceeded,
    BudgetViolation,
    CrossingCapExceeded,
    GenerationExhausted,
    InapplicableMove,
    KnotError,
    NonKnotExponent,
    PdSyntaxError,
    TurnConflict,
    ValidationError,
)
from .game import GameConfig, TurnSubmission, state_to_json_obj
from .moves import enumerate_moves
from .oracle import JonesOracle
from .pd import pd_from_json_obj
from .store import SessionRecord, SessionStore

_STATUS_BY_ERROR = (
    (PdSyntaxError, 400),
    (TurnConflict, 409),
    (BudgetExceeded, 503),
    (ValidationError, 422),
    (InapplicableMove, 422),
    (BudgetViolation, 422),
    (CrossingCapExceeded, 422),
    (GenerationExhausted, 422),
    (NonKnotExponent, 422),
)


def error_body(exc: BaseException) -> Dict[str, Any]:
    return {"error": {"type": type(exc).__name__, "message": str(exc)}}


def _status_for(exc: KnotError) -> int:
    for cls, status in _STATUS_BY_ERROR:
        if isinstance(exc, cls):
            return status
    return 422


class NotFound(KeyError):
    pass


def create_app(data_dir: Optional[Path] = None, oracle: Optional[JonesOracle] = None,
               debug: bool = False) -> FastAPI:
    app = FastAPI(title="knotty-jones", docs_url=None, redoc_url=None)
    store = SessionStore(Path(data_dir) if data_dir else Path("data"), oracle)
    app.state.store = store
    app.state.debug = debug

    def snap(record: SessionRecord) -> Dict[str, Any]:
        return state_to_json_obj(record.snapshot, include_provenance=debug)

    def get_or_404(session_id: str) -> SessionRecord:
        try:
            return store.get(session_id)
        except KeyError:
            raise NotFound(session_id)

    @app.exception_handler(RequestValidationError)
    async def on_bad_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={
            "error": {"type": "BadRequest", "message": "malformed request body"}})

    @app.exception_handler(ValueError)
    async def on_value_error(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content=error_body(exc))

    @app.exception_handler(NotFound)
    async def on_not_found(request: Request, exc: NotFound):
        return JSONResponse(status_code=404, content={
            "error": {"type": "NotFound",
                      "message": f"no session {exc.args[0]!r}"}})

    @app.exception_handler(KnotError)
    async def on_knot_error(request: Request, exc: KnotError):
        return JSONResponse(status_code=_status_for(exc), content=error_body(exc))

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/games")
    def create_game(payload: Dict[str, Any] = Body(...)):
        config = GameConfig.from_json_obj(payload.get("config", {}))
        record = store.create(config)
        return {"id": record.id, "snapshot": snap(record)}

    @app.get("/games/{session_id}")
    def get_game(session_id: str):
        record = get_or_404(session_id)
        return {"snapshot": snap(record)}

    @app.post("/games/{session_id}/turns")
    def post_turn(session_id: str, payload: Dict[str, Any] = Body(...)):
        record = get_or_404(session_id)
        if "submission" not in payload:
            raise ValueError("body must carry a \"submission\" object")
        submission = TurnSubmission.from_json_obj(payload["submission"])
        updated = store.play(record.id, submission)
        return {"snapshot": snap(updated)}

    @app.get("/games/{session_id}/moves")
    def get_moves(session_id: str):
        record = get_or_404(session_id)
        return enumerate_moves(record.snapshot.player_diagram).to_json_obj()

    @app.post("/jones")
    def jones_endpoint(payload: Dict[str, Any] = Body(...)):
        diagram = build_diagram(pd_from_json_obj(payload))
        return store.oracle.evaluate(diagram).to_json_obj()

    return app
