"""PD codes: the interchange format for knot diagrams.

Text grammar: whitespace-separated terms ``X[a,b,c,d]`` with positive
integers; the empty string is the 0-crossing unknot. JSON form:
``{"crossings": [[a, b, c, d], ...]}``.

Quadruple semantics: ``a`` is the arc entering the crossing on the under
strand and ``b`` the arc leaving it; ``c`` and ``d`` are the over-strand
arcs, with ``c`` at the rotational position counterclockwise-before the
under-in arc and ``d`` counterclockwise-after it. Equivalently the
counterclockwise rotation order around the crossing is (a, d, b, c).

Arcs of an n-crossing code must be exactly 1..2n, each appearing twice.
Full structural validation (single component, orientability, planarity)
happens in :mod:`knottyjones.diagram`; this module checks syntax and arc
counts only.
"""

from __future__ import annotations

import re
from typing import Dict, List, Tuple

from .errors import PdSyntaxError, ValidationError

Quad = Tuple[int, int, int, int]

_TERM = re.compile(r"X\[(\d+),(\d+),(\d+),(\d+)\]\Z")


class PdCode:
    """Validated (syntax + arc counts) planar-diagram code."""

    __slots__ = ("crossings",)

    def __init__(self, crossings: Tuple[Quad, ...]):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in q) for q in crossings))
        _check_arcs(self.crossings)

    @property
    def n(self) -> int:
        return len(self.crossings)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PdCode):
            return NotImplemented
        return self.crossings == other.crossings

    def __hash__(self) -> int:
        return hash(self.crossings)

    def __setattr__(self, name, value):
        raise AttributeError("PdCode is immutable")

    def __repr__(self) -> str:
        return f"PdCode({serialize_pd(self)!r})"


def _check_arcs(crossings: Tuple[Quad, ...]) -> None:
    n = len(crossings)
    counts: Dict[int, int] = {}
    for quad in crossings:
        if len(quad) != 4:
            raise PdSyntaxError("each crossing needs exactly four arc labels")
        for arc in quad:
            if arc < 1:
                raise ValidationError(f"arc labels must be positive, got {arc}")
            counts[arc] = counts.get(arc, 0) + 1
    if not n:
        return
    expected = set(range(1, 2 * n + 1))
    if set(counts) != expected:
        missing = sorted(expected - set(counts))
        extra = sorted(set(counts) - expected)
        raise ValidationError(
            f"arc ids must be exactly 1..{2 * n}: missing {missing}, unexpected {extra}"
        )
    bad = sorted(a for a, k in counts.items() if k != 2)
    if bad:
        raise ValidationError(f"arcs must appear exactly twice, violated by {bad}")


def parse_pd_text(text: str) -> PdCode:
    """Tokenize the text grammar into a PdCode (syntax + arc counts only)."""
    quads: List[Quad] = []
    for token in text.split():
        m = _TERM.match(token)
        if not m:
            raise PdSyntaxError(f"bad PD term {token!r}, expected X[a,b,c,d]")
        quads.append(tuple(int(g) for g in m.groups()))
    return PdCode(tuple(quads))


def serialize_pd(code: PdCode) -> str:
    """Inverse of parsing: 0 crossings serialize to the empty string."""
    return " ".join("X[%d,%d,%d,%d]" % quad for quad in code.crossings)


def pd_to_json_obj(code: PdCode) -> dict:
    return {"crossings": [list(q) for q in code.crossings]}


def pd_from_json_obj(obj: object) -> PdCode:
    if not isinstance(obj, dict) or "crossings" not in obj:
        raise PdSyntaxError("PD JSON must be an object with a 'crossings' list")
    raw = obj["crossings"]
    if not isinstance(raw, list):
        raise PdSyntaxError("'crossings' must be a list")
    quads: List[Quad] = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 4:
            raise PdSyntaxError("each crossing must be a list of four arc labels")
        for x in item:
            if isinstance(x, bool) or not isinstance(x, int):
                raise PdSyntaxError("arc labels must be integers")
        quads.append(tuple(item))
    return PdCode(tuple(quads))
