"""Command line interface.

Subcommands mirror the library surface: `jones`, `moves`, `apply` for
one-shot diagram work, `generate` and `play` for the game loop, `serve`
for the HTTP API, `bench` for state-sum scaling numbers. All failures
print one machine-readable JSON object to stderr and exit nonzero.

PD input files may contain either PD text (`X[1,4,2,3] ...`) or the
JSON form (`{"crossings": [[1,4,2,3], ...]}`); the parser sniffs the
first non-space byte. `-` reads stdin. Values passed to --config,
--player-jp and --script may be inline JSON or a path to a JSON file.

Environment: KJ_DATA_DIR (serve --data-dir), KJ_PORT (serve --port),
KJ_ORACLE (--oracle everywhere it appears).
"""

from __future__ import annotations

import json
import random
import statistics
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

from . import __version__
from .diagram import Diagram, build_diagram, parse_pd, unknot
from .errors import KnotError
from .game import GameConfig, TurnSubmission, new_game, play_turn, state_to_json_obj
from .laurent import LaurentPoly
from .moves import Move, apply_move, enumerate_moves, move_from_json_obj
from .oracle import StateSumOracle, get_oracle
from .pcg import GeneratedOpponent, GeneratorConfig, generate_opponent, provenance_to_json_obj
from .pd import pd_from_json_obj, pd_to_json_obj, serialize_pd


def _fail(exc: BaseException) -> None:
    body = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    click.echo(json.dumps(body), err=True)
    sys.exit(1)


def _emit(obj: Any) -> None:
    click.echo(json.dumps(obj, indent=1, sort_keys=True))


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def _diagram_from_text(text: str) -> Diagram:
    stripped = text.strip()
    if stripped.startswith("{"):
        return build_diagram(pd_from_json_obj(json.loads(stripped)))
    return build_diagram(parse_pd(stripped))


def _json_value(value: str) -> Any:
    """Inline JSON if it looks like JSON, else a file path to JSON."""
    stripped = value.strip()
    if stripped[:1] in "{[":
        return json.loads(stripped)
    return json.loads(Path(value).read_text())


def _moves_from_obj(obj: Any) -> List[Move]:
    if isinstance(obj, dict) and "moves" in obj:
        obj = obj["moves"]
    if not isinstance(obj, list):
        raise ValueError("moves must be a list (or an object with a \"moves\" list)")
    return [move_from_json_obj(m) for m in obj]


def _opponent_obj(opp: GeneratedOpponent) -> Dict[str, Any]:
    return {
        "diagram": pd_to_json_obj(opp.diagram.pd_code()),
        "pd": opp.diagram.pd_text(),
        "crossings": opp.diagram.n,
        "jp": opp.jp.to_json_obj(),
        "attempts": opp.attempts,
        "provenance": provenance_to_json_obj(opp.provenance),
    }


@click.group()
@click.version_option(__version__, prog_name="knotty-jones")
def main():
    """Knot diagrams, Reidemeister moves, and the Jones polynomial."""


@main.command()
@click.argument("source")
@click.option("--oracle", "oracle_name", default=None, envvar="KJ_ORACLE",
              help="state-sum (default), reference, or remote:URL")
def jones(source: str, oracle_name: Optional[str]):
    """Print the Jones polynomial of the PD code in SOURCE (file or -)."""
    try:
        d = _diagram_from_text(_read_source(source))
        poly = get_oracle(oracle_name).evaluate(d)
        _emit(poly.to_json_obj())
    except (KnotError, ValueError, OSError) as exc:
        _fail(exc)


@main.command()
@click.argument("source")
def moves(source: str):
    """Print every applicable move site for the PD code in SOURCE."""
    try:
        d = _diagram_from_text(_read_source(source))
        _emit(enumerate_moves(d).to_json_obj())
    except (KnotError, ValueError, OSError) as exc:
        _fail(exc)


@main.command()
@click.argument("source")
@click.argument("moves_file")
@click.option("--max-crossings", default=24, show_default=True,
              help="crossing cap enforced while applying")
def apply(source: str, moves_file: str, max_crossings: int):
    """Apply the moves in MOVES_FILE to the PD code in SOURCE, print the result."""
    try:
        d = _diagram_from_text(_read_source(source))
        for m in _moves_from_obj(_json_value(moves_file)):
            d = apply_move(d, m, max_crossings=max_crossings)
        _emit(pd_to_json_obj(d.pd_code()))
    except (KnotError, ValueError, OSError) as exc:
        _fail(exc)


@main.command()
@click.option("--config", "config_value", required=True,
              help="GeneratorConfig JSON (inline or a file path)")
@click.option("--player-jp", "player_jp_value", default=None,
              help="Laurent polynomial JSON to avoid; defaults to the unknot's 1")
@click.option("--oracle", "oracle_name", default=None, envvar="KJ_ORACLE")
def generate(config_value: str, player_jp_value: Optional[str], oracle_name: Optional[str]):
    """Generate one opponent with full provenance."""
    try:
        config = GeneratorConfig.from_json_obj(_json_value(config_value))
        player_jp = (LaurentPoly.one("t") if player_jp_value is None
                     else LaurentPoly.from_json_obj(_json_value(player_jp_value)))
        opp = generate_opponent(config, player_jp, get_oracle(oracle_name))
        _emit(_opponent_obj(opp))
    except (KnotError, ValueError, OSError) as exc:
        _fail(exc)


@main.command()
@click.option("--config", "config_value", required=True,
              help="GameConfig JSON (inline or a file path)")
@click.option("--script", "script_value", required=True,
              help="turn script JSON: {\"turns\": [{\"moves\": [...]}, ...]}")
@click.option("--oracle", "oracle_name", default=None, envvar="KJ_ORACLE")
@click.option("--debug", is_flag=True, help="include opponent provenance in the snapshot")
def play(config_value: str, script_value: str, oracle_name: Optional[str], debug: bool):
    """Replay a scripted game and print the final snapshot."""
    try:
        config = GameConfig.from_json_obj(_json_value(config_value))
        script = _json_value(script_value)
        if isinstance(script, dict) and "turns" in script:
            script = script["turns"]
        if not isinstance(script, list):
            raise ValueError("script must be a list of turns (or {\"turns\": [...]})")
        submissions = [TurnSubmission.from_json_obj(t) for t in script]
        oracle = get_oracle(oracle_name)
        state = new_game(config, oracle)
        for sub in submissions:
            state = play_turn(state, sub, oracle)
        _emit(state_to_json_obj(state, include_provenance=debug))
    except (KnotError, ValueError, OSError) as exc:
        _fail(exc)


@main.command()
@click.option("--port", default=8000, envvar="KJ_PORT", show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--data-dir", default="data", envvar="KJ_DATA_DIR", show_default=True)
@click.option("--oracle", "oracle_name", default=None, envvar="KJ_ORACLE")
@click.option("--debug", is_flag=True, help="expose opponent provenance in snapshots")
def serve(port: int, host: str, data_dir: str, oracle_name: Optional[str], debug: bool):
    """Start the HTTP JSON API."""
    try:
        import uvicorn

        from .service import create_app

        app = create_app(Path(data_dir), get_oracle(oracle_name), debug=debug)
        uvicorn.run(app, host=host, port=port, log_level="warning")
    except (KnotError, ValueError, OSError) as exc:
        _fail(exc)


def _bench_diagram(n: int, seed: int = 0) -> Diagram:
    """Deterministic n-crossing diagram: a seeded grow-only move walk."""
    rng = random.Random(seed * 1000003 + n)
    d = unknot()
    while d.n < n:
        sites = enumerate_moves(d)
        pool = [m for m in list(sites.r1_add) + list(sites.r2_add)
                if d.n + (1 if m.kind == "R1Add" else 2) <= n]
        if not pool:
            pool = list(sites.r1_add)
        d = apply_move(d, pool[rng.randrange(len(pool))], max_crossings=n)
    return d


@main.command()
@click.option("--max-crossings", default=20, show_default=True)
@click.option("--min-crossings", default=3, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--repeats", default=1, show_default=True,
              help="runs per size; the reported time is the median")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def bench(max_crossings: int, min_crossings: int, seed: int, repeats: int, as_json: bool):
    """Time the state-sum oracle on diagrams of growing crossing count."""
    try:
        if repeats < 1:
            raise ValueError("--repeats must be at least 1")
        oracle = StateSumOracle()
        rows = []
        for n in range(min_crossings, max_crossings + 1):
            d = _bench_diagram(n, seed)
            times = []
            for _ in range(repeats):
                t0 = time.perf_counter()
                poly = oracle.evaluate(d)
                times.append((time.perf_counter() - t0) * 1000.0)
            millis = statistics.median(times)
            rows.append({"crossings": n, "millis": round(millis, 3),
                         "terms": poly.term_count})
        if as_json:
            _emit(rows)
        else:
            click.echo(f"{'crossings':>9}  {'millis':>12}  {'terms':>5}")
            for row in rows:
                click.echo(f"{row['crossings']:>9}  {row['millis']:>12.3f}  {row['terms']:>5}")
    except (KnotError, ValueError, OSError) as exc:
        _fail(exc)


if __name__ == "__main__":
    main()
