"""Knotty Jones: knot diagrams, Reidemeister moves, and the Jones polynomial."""

from .errors import (
    BudgetExceeded,
    BudgetViolation,
    CorruptSession,
    CrossingCapExceeded,
    GenerationExhausted,
    InapplicableMove,
    KnotError,
    NonKnotExponent,
    PdSyntaxError,
    ProtocolError,
    TransportError,
    ValidationError,
    VariableMismatch,
)
from .laurent import LaurentPoly, jp_distance
from .pd import PdCode, parse_pd_text, serialize_pd, pd_from_json_obj, pd_to_json_obj
from .diagram import (
    Diagram,
    Face,
    build_diagram,
    diagram_from_pd_text,
    diagram_from_rot,
    faces,
    mirror,
    parse_pd,
    unknot,
    writhe,
)
from .moves import (
    DEFAULT_CROSSING_CAP,
    Move,
    MoveSiteList,
    apply_move,
    enumerate_moves,
    move_from_json_obj,
    move_to_json_obj,
    simplify,
)
from .bracket import StateSumBudget, kauffman_bracket
from .oracle import (
    JonesOracle,
    ReferenceOracle,
    RemoteOracle,
    StateSumOracle,
    get_oracle,
    jones,
    jones_from_bracket,
    remote_oracle_stub,
)
from .pcg import (
    GeneratedOpponent,
    GeneratorConfig,
    difficulty_schedule,
    generate_opponent,
    random_walk,
    replay_provenance,
)
from .game import (
    GameConfig,
    GameState,
    TurnSubmission,
    new_game,
    play_turn,
    score_turn,
    state_from_json_obj,
    state_to_json_obj,
)

__version__ = "0.1.0"
