"""Turn and round state machine.

The player starts as the unknot and wins a round by matching the
opponent's Jones polynomial at the end of a turn. States are immutable;
play_turn returns a new state and raises without side effects, so error
atomicity is structural. Status values:

  Ongoing   round in progress.
  RoundWon  the previous turn won a round; the next round's opponent is
            already generated and play continues from this state.
  GameWon   the final round was won. Terminal.
  GameLost  a round hit the turn limit. Terminal.

The score accrues a closeness component every turn, max(0, 100 -
jp_distance), plus a flat bonus of 500 per round won. The Jones
polynomial is computed once per turn, after the whole move sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .diagram import Diagram, diagram_from_pd_text, unknot
from .errors import BudgetViolation, InapplicableMove
from .laurent import LaurentPoly, jp_distance
from .moves import Move, apply_move, move_from_json_obj, move_to_json_obj
from .oracle import JonesOracle
from .pcg import (
    GeneratedOpponent,
    GeneratorConfig,
    difficulty_schedule,
    generate_opponent,
    provenance_from_json_obj,
    provenance_to_json_obj,
)

ONGOING = "Ongoing"
ROUND_WON = "RoundWon"
GAME_WON = "GameWon"
GAME_LOST = "GameLost"

MAX_TURN_SCORE = 100
ROUND_BONUS = 500

Generator = Callable[[GeneratorConfig, LaurentPoly, JonesOracle], GeneratedOpponent]


@dataclass(frozen=True)
class GameConfig:
    r_moves_per_turn: int = 4
    inversions_per_turn: int = 2
    max_turns_per_round: int = 10
    total_rounds: int = 3
    crossing_cap: int = 24
    seed: int = 0
    show_opponent_diagram: bool = True

    def __post_init__(self):
        for name in ("r_moves_per_turn", "inversions_per_turn",
                     "max_turns_per_round", "total_rounds", "crossing_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")

    def to_json_obj(self) -> Dict[str, Any]:
        return {
            "rMovesPerTurn": self.r_moves_per_turn,
            "inversionsPerTurn": self.inversions_per_turn,
            "maxTurnsPerRound": self.max_turns_per_round,
            "totalRounds": self.total_rounds,
            "crossingCap": self.crossing_cap,
            "seed": self.seed,
            "showOpponentDiagram": self.show_opponent_diagram,
        }

    @classmethod
    def from_json_obj(cls, obj: Any) -> "GameConfig":
        if not isinstance(obj, dict):
            raise ValueError("game config must be an object")
        kw = {}
        mapping = {
            "rMovesPerTurn": "r_moves_per_turn",
            "inversionsPerTurn": "inversions_per_turn",
            "maxTurnsPerRound": "max_turns_per_round",
            "totalRounds": "total_rounds",
            "crossingCap": "crossing_cap",
            "seed": "seed",
            "showOpponentDiagram": "show_opponent_diagram",
        }
        for json_name, attr in mapping.items():
            if json_name in obj:
                kw[attr] = obj[json_name]
        try:
            return cls(**kw)
        except TypeError as exc:
            raise ValueError(f"bad game config: {exc}") from exc


@dataclass(frozen=True)
class TurnSubmission:
    moves: Tuple[Move, ...]

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))

    @property
    def r_moves(self) -> int:
        return sum(1 for m in self.moves if m.kind != "CrossingFlip")

    @property
    def inversions(self) -> int:
        return sum(1 for m in self.moves if m.kind == "CrossingFlip")

    def to_json_obj(self) -> Dict[str, Any]:
        return {"moves": [move_to_json_obj(m) for m in self.moves]}

    @classmethod
    def from_json_obj(cls, obj: Any) -> "TurnSubmission":
        if not isinstance(obj, dict) or not isinstance(obj.get("moves"), list):
            raise ValueError("turn submission must be {\"moves\": [...]}")
        return cls(tuple(move_from_json_obj(m) for m in obj["moves"]))


@dataclass(frozen=True)
class GameState:
    config: GameConfig
    player_diagram: Diagram
    player_jp: LaurentPoly
    opponent: GeneratedOpponent
    round_no: int
    turn_in_round: int
    status: str
    score: int

    @property
    def is_terminal(self) -> bool:
        return self.status in (GAME_WON, GAME_LOST)


def _mix_seed(seed: int, round_no: int) -> int:
    z = (seed + round_no * 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & 0xFFFFFFFFFFFFFFFF
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & 0xFFFFFFFFFFFFFFFF
    return z ^ (z >> 31)


def _round_config(config: GameConfig, round_no: int) -> GeneratorConfig:
    base = difficulty_schedule(round_no)
    return replace(base, seed=_mix_seed(config.seed, round_no))


def score_turn(player_jp: LaurentPoly, opponent_jp: LaurentPoly) -> int:
    """Closeness score: max at equality, monotone non-increasing in distance."""
    return max(0, MAX_TURN_SCORE - jp_distance(player_jp, opponent_jp))


def new_game(config: GameConfig, oracle: JonesOracle,
             generator: Generator = generate_opponent) -> GameState:
    player = unknot()
    jp = oracle.evaluate(player)
    opponent = generator(_round_config(config, 1), jp, oracle)
    return GameState(config, player, jp, opponent, 1, 1, ONGOING, 0)


def play_turn(state: GameState, submission: TurnSubmission, oracle: JonesOracle,
              generator: Generator = generate_opponent) -> GameState:
    """Apply a turn. The input state is never modified; errors leave no trace."""
    if state.is_terminal:
        raise InapplicableMove(f"game is over (status {state.status})")
    if submission.r_moves > state.config.r_moves_per_turn:
        raise BudgetViolation(
            f"{submission.r_moves} R-moves exceed the per-turn budget of "
            f"{state.config.r_moves_per_turn}"
        )
    if submission.inversions > state.config.inversions_per_turn:
        raise BudgetViolation(
            f"{submission.inversions} inversions exceed the per-turn budget of "
            f"{state.config.inversions_per_turn}"
        )
    d = state.player_diagram
    for m in submission.moves:
        d = apply_move(d, m, max_crossings=state.config.crossing_cap)
    jp = oracle.evaluate(d)
    score = state.score + score_turn(jp, state.opponent.jp)

    if jp == state.opponent.jp:
        score += ROUND_BONUS
        if state.round_no >= state.config.total_rounds:
            return replace(state, player_diagram=d, player_jp=jp, score=score,
                           status=GAME_WON)
        nxt = generator(_round_config(state.config, state.round_no + 1), jp, oracle)
        return replace(state, player_diagram=d, player_jp=jp, score=score,
                       opponent=nxt, round_no=state.round_no + 1,
                       turn_in_round=1, status=ROUND_WON)

    if state.turn_in_round + 1 > state.config.max_turns_per_round:
        return replace(state, player_diagram=d, player_jp=jp, score=score,
                       status=GAME_LOST)
    return replace(state, player_diagram=d, player_jp=jp, score=score,
                   turn_in_round=state.turn_in_round + 1, status=ONGOING)


def state_to_json_obj(state: GameState, include_opponent_diagram: Optional[bool] = None,
                      include_provenance: bool = False) -> Dict[str, Any]:
    """Snapshot a state. Opponent diagram visibility defaults to the config
    flag; provenance is withheld unless explicitly requested (it spoils the
    puzzle by listing the exact move construction)."""
    show_diag = (state.config.show_opponent_diagram
                 if include_opponent_diagram is None else include_opponent_diagram)
    opp: Dict[str, Any] = {
        "jp": state.opponent.jp.to_json_obj(),
        "attempts": state.opponent.attempts,
    }
    if show_diag:
        opp["pd"] = state.opponent.diagram.pd_text()
        opp["crossings"] = state.opponent.diagram.n
    if include_provenance:
        opp["provenance"] = provenance_to_json_obj(state.opponent.provenance)
    return {
        "config": state.config.to_json_obj(),
        "playerPd": state.player_diagram.pd_text(),
        "playerJp": state.player_jp.to_json_obj(),
        "opponent": opp,
        "round": state.round_no,
        "turnInRound": state.turn_in_round,
        "status": state.status,
        "score": state.score,
    }


def state_from_json_obj(obj: Any) -> GameState:
    """Rebuild a full state snapshot (requires provenance and diagram)."""
    if not isinstance(obj, dict):
        raise ValueError("state must be an object")
    config = GameConfig.from_json_obj(obj["config"])
    player = diagram_from_pd_text(obj["playerPd"])
    player_jp = LaurentPoly.from_json_obj(obj["playerJp"])
    opp_obj = obj["opponent"]
    opponent = GeneratedOpponent(
        diagram=diagram_from_pd_text(opp_obj["pd"]),
        jp=LaurentPoly.from_json_obj(opp_obj["jp"]),
        provenance=provenance_from_json_obj(opp_obj["provenance"]),
        attempts=int(opp_obj["attempts"]),
    )
    return GameState(
        config=config,
        player_diagram=player,
        player_jp=player_jp,
        opponent=opponent,
        round_no=int(obj["round"]),
        turn_in_round=int(obj["turnInRound"]),
        status=str(obj["status"]),
        score=int(obj["score"]),
    )


def replay(config: GameConfig, submissions: Sequence[TurnSubmission],
           oracle: JonesOracle,
           generator: Generator = generate_opponent) -> GameState:
    """Recompute the state a submission log should produce."""
    state = new_game(config, oracle, generator)
    for sub in submissions:
        state = play_turn(state, sub, oracle, generator)
    return state
