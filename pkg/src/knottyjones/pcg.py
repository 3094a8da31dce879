"""Opponent generation: seeded random move walks with post-selection.

A walk starts from the unknot, draws a configured number of Reidemeister
moves (never crossing flips; those are the separate inversion step), and
after each move flips a uniformly random crossing with probability
pInversion. Draws are biased toward the crossing-increasing kinds (R1Add,
R2Add) by growthBias, since unbiased walks collapse back to the unknot
far too often. Sites that would break the crossing cap are excluded from
the draw, which is equivalent to redrawing. The result is simplified
before post-selection so trivially reducible padding never reaches the
bands.

Candidates are accepted when the Jones polynomial differs from the
player's, its term count lies in termBand, and the simplified crossing
count lies in crossingBand. Identical (config, playerJp) inputs always
produce the identical opponent, byte-for-byte provenance included.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .diagram import Diagram, unknot
from .errors import GenerationExhausted
from .laurent import LaurentPoly
from .moves import DEFAULT_CROSSING_CAP, Move, apply_move, enumerate_moves, move_from_json_obj, move_to_json_obj, simplify
from .oracle import JonesOracle

_GROWTH = {"R1Add": 1, "R2Add": 2}
_SHRINK_OR_SLIDE = {"R1Remove": -1, "R2Remove": -2, "R3": 0}


@dataclass(frozen=True)
class GeneratorConfig:
    n_moves: int
    p_inversion: float
    term_band: Tuple[int, int]
    crossing_band: Tuple[int, int]
    max_attempts: int = 500
    seed: int = 0
    growth_bias: float = 0.7

    def __post_init__(self):
        if self.n_moves < 0:
            raise ValueError("nMoves must be >= 0")
        if not 0.0 <= self.p_inversion <= 1.0:
            raise ValueError("pInversion must lie in [0, 1]")
        if not 0.0 <= self.growth_bias <= 1.0:
            raise ValueError("growthBias must lie in [0, 1]")
        for name, band in (("termBand", self.term_band), ("crossingBand", self.crossing_band)):
            if len(band) != 2 or band[0] > band[1] or band[0] < 1:
                raise ValueError(f"{name} must be an inclusive range with low >= 1")
        if self.max_attempts < 1:
            raise ValueError("maxAttempts must be >= 1")
        object.__setattr__(self, "term_band", tuple(self.term_band))
        object.__setattr__(self, "crossing_band", tuple(self.crossing_band))

    def to_json_obj(self) -> Dict[str, Any]:
        return {
            "nMoves": self.n_moves,
            "pInversion": self.p_inversion,
            "termBand": list(self.term_band),
            "crossingBand": list(self.crossing_band),
            "maxAttempts": self.max_attempts,
            "seed": self.seed,
            "growthBias": self.growth_bias,
        }

    @classmethod
    def from_json_obj(cls, obj: Any) -> "GeneratorConfig":
        if not isinstance(obj, dict):
            raise ValueError("generator config must be an object")
        try:
            return cls(
                n_moves=int(obj["nMoves"]),
                p_inversion=float(obj["pInversion"]),
                term_band=tuple(int(x) for x in obj["termBand"]),
                crossing_band=tuple(int(x) for x in obj["crossingBand"]),
                max_attempts=int(obj.get("maxAttempts", 500)),
                seed=int(obj.get("seed", 0)),
                growth_bias=float(obj.get("growthBias", 0.7)),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"bad generator config: {exc}") from exc


@dataclass(frozen=True)
class GeneratedOpponent:
    diagram: Diagram
    jp: LaurentPoly
    provenance: Dict[str, Any]
    attempts: int


def _walk(config: GeneratorConfig, rng: random.Random, cap: int) -> Tuple[Diagram, List[Move]]:
    d = unknot()
    log: List[Move] = []
    for _ in range(config.n_moves):
        sites = enumerate_moves(d)
        grow = [m for m in list(sites.r1_add) + list(sites.r2_add)
                if d.n + _GROWTH[m.kind] <= cap]
        other = list(sites.r1_remove) + list(sites.r2_remove) + list(sites.r3)
        if grow and (not other or rng.random() < config.growth_bias):
            pool = grow
        else:
            pool = other or grow
        if not pool:
            break
        m = pool[rng.randrange(len(pool))]
        d = apply_move(d, m, max_crossings=cap)
        log.append(m)
        if rng.random() < config.p_inversion and d.n > 0:
            flip = Move("CrossingFlip", {"crossing": rng.randrange(d.n)})
            d = apply_move(d, flip, max_crossings=cap)
            log.append(flip)
    return d, log


def random_walk(config: GeneratorConfig, rng: Optional[random.Random] = None,
                cap: int = DEFAULT_CROSSING_CAP) -> Diagram:
    """One seeded walk from the unknot, simplified. Deterministic per seed."""
    if rng is None:
        rng = random.Random(config.seed)
    d, _ = _walk(config, rng, cap)
    return simplify(d)


def replay_provenance(moves: Sequence[Move], cap: int = DEFAULT_CROSSING_CAP) -> Diagram:
    """Re-run a provenance move log from the unknot, simplifying at the end."""
    d = unknot()
    for m in moves:
        d = apply_move(d, m, max_crossings=cap)
    return simplify(d)


def provenance_to_json_obj(prov: Dict[str, Any]) -> Dict[str, Any]:
    return {"seed": prov["seed"], "attempt": prov["attempt"],
            "moves": [move_to_json_obj(m) for m in prov["moves"]]}


def provenance_from_json_obj(obj: Any) -> Dict[str, Any]:
    if not isinstance(obj, dict) or not isinstance(obj.get("moves"), list):
        raise ValueError("bad provenance object")
    return {
        "seed": int(obj["seed"]),
        "attempt": int(obj["attempt"]),
        "moves": tuple(move_from_json_obj(m) for m in obj["moves"]),
    }


def generate_opponent(config: GeneratorConfig, player_jp: LaurentPoly,
                      oracle: JonesOracle,
                      cap: int = DEFAULT_CROSSING_CAP) -> GeneratedOpponent:
    """Loop seeded walks until one passes post-selection.

    Acceptance: jones(d) != playerJp, term count within termBand, and the
    simplified crossing count within crossingBand. Raises
    GenerationExhausted after maxAttempts rejections; widening the bands
    is the usual fix. Rejected candidates' polynomials are cached by
    canonical key, so repeated shapes cost one oracle call.
    """
    rng = random.Random(config.seed)
    jp_cache: Dict[str, LaurentPoly] = {}
    lo_t, hi_t = config.term_band
    lo_c, hi_c = config.crossing_band
    for attempt in range(1, config.max_attempts + 1):
        d, log = _walk(config, rng, cap)
        d = simplify(d)
        if not lo_c <= d.n <= hi_c:
            continue
        key = d.canonical_key()
        jp = jp_cache.get(key)
        if jp is None:
            jp = oracle.evaluate(d)
            jp_cache[key] = jp
        if jp == player_jp:
            continue
        if not lo_t <= jp.term_count <= hi_t:
            continue
        provenance = {"seed": config.seed, "attempt": attempt, "moves": tuple(log)}
        return GeneratedOpponent(d, jp, provenance, attempt)
    raise GenerationExhausted(
        f"no opponent found in {config.max_attempts} attempts; widen termBand "
        f"{list(config.term_band)} or crossingBand {list(config.crossing_band)}"
    )


def difficulty_schedule(round_no: int) -> GeneratorConfig:
    """Shipped default difficulty ramp; every knob is overridable.

    Term and crossing bands and the walk length grow with the round and
    stay inside the global crossing cap.
    """
    if round_no < 1:
        raise ValueError("round must be >= 1")
    r = round_no - 1
    return GeneratorConfig(
        n_moves=10 + 2 * min(r, 7),
        p_inversion=0.35,
        term_band=(3 + r // 2, 3 + r),
        crossing_band=(3, min(8 + 2 * r, 20)),
        max_attempts=500,
        seed=0,
        growth_bias=0.7,
    )
