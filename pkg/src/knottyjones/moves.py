"""Reidemeister moves, crossing flips, and the greedy simplifier.

All surgeries operate on rotation tables (one counterclockwise 4-tuple of
arc ids per crossing plus an over-diagonal flag) and finish through
diagram_from_rot, which relabels and revalidates. Working from a Diagram
the tables arrive in slot form, where the over strand always occupies the
odd diagonal (flag 1) and a dart at position k is on top iff k is odd.

Move sites:
  R1Add        {"arc": int, "side": "L"|"R", "chirality": 1|-1}
               (on the unknot the trivial loop is addressed as arc 0)
  R1Remove     {"crossing": int}
  R2Add        {"arc1": int, "arc2": int, "over": bool}
               (arc1 passes over arc2 when over is true; the arcs must
               share a face, and the smallest common face is used)
  R2Remove     {"face": int}
  R3           {"face": int, "edge": int}  (edge = arc id of the slide edge)
  CrossingFlip {"crossing": int}

Face ids index Diagram.faces and are only stable for the diagram they
were enumerated from; every application renumbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from .diagram import Diagram, diagram_from_rot, unknot
from .errors import CrossingCapExceeded, InapplicableMove
from .pd import PdCode

KINDS = ("R1Add", "R1Remove", "R2Add", "R2Remove", "R3", "CrossingFlip")
DEFAULT_CROSSING_CAP = 24

_SITE_FIELDS = {
    "R1Add": {"arc": int, "side": str, "chirality": int},
    "R1Remove": {"crossing": int},
    "R2Add": {"arc1": int, "arc2": int, "over": bool},
    "R2Remove": {"face": int},
    "R3": {"face": int, "edge": int},
    "CrossingFlip": {"crossing": int},
}


@dataclass(frozen=True)
class Move:
    kind: str
    site: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in _SITE_FIELDS:
            raise ValueError(f"unknown move kind {self.kind!r}")

    def __hash__(self) -> int:
        return hash((self.kind, tuple(sorted(self.site.items()))))

    def __getitem__(self, key: str) -> Any:
        return self.site[key]

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}={v!r}" for k, v in sorted(self.site.items()))
        return f"Move({self.kind}: {inner})"


def move_to_json_obj(m: Move) -> Dict[str, Any]:
    return {"kind": m.kind, "site": dict(m.site)}


def move_from_json_obj(obj: Any) -> Move:
    if not isinstance(obj, dict):
        raise ValueError("move must be an object")
    kind = obj.get("kind")
    if kind not in _SITE_FIELDS:
        raise ValueError(f"unknown move kind {kind!r}")
    site = obj.get("site")
    if not isinstance(site, dict):
        raise ValueError("move site must be an object")
    schema = _SITE_FIELDS[kind]
    if set(site) != set(schema):
        raise ValueError(
            f"{kind} site needs fields {sorted(schema)}, got {sorted(site)}"
        )
    clean: Dict[str, Any] = {}
    for name, typ in schema.items():
        value = site[name]
        if typ is int:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"{kind} site field {name!r} must be an integer")
        elif not isinstance(value, typ):
            raise ValueError(f"{kind} site field {name!r} must be {typ.__name__}")
        clean[name] = value
    return Move(kind, clean)


@dataclass(frozen=True)
class MoveSiteList:
    r1_add: Tuple[Move, ...]
    r1_remove: Tuple[Move, ...]
    r2_add: Tuple[Move, ...]
    r2_remove: Tuple[Move, ...]
    r3: Tuple[Move, ...]
    crossing_flip: Tuple[Move, ...]

    def all_moves(self) -> Iterator[Move]:
        yield from self.r1_add
        yield from self.r1_remove
        yield from self.r2_add
        yield from self.r2_remove
        yield from self.r3
        yield from self.crossing_flip

    def __len__(self) -> int:
        return sum(1 for _ in self.all_moves())

    def to_json_obj(self) -> Dict[str, List[Dict[str, Any]]]:
        return {
            "R1Add": [move_to_json_obj(m) for m in self.r1_add],
            "R1Remove": [move_to_json_obj(m) for m in self.r1_remove],
            "R2Add": [move_to_json_obj(m) for m in self.r2_add],
            "R2Remove": [move_to_json_obj(m) for m in self.r2_remove],
            "R3": [move_to_json_obj(m) for m in self.r3],
            "CrossingFlip": [move_to_json_obj(m) for m in self.crossing_flip],
        }


def _is_over(k: int, od: int) -> bool:
    return (k & 1) == od


def _kink_sites(d: Diagram) -> List[int]:
    return [c for c in range(d.n) if len(set(d.slots[c])) < 4]


def _bigon_ok(d: Diagram, f) -> bool:
    if f.size != 2:
        return False
    (cA, cB) = f.crossings
    if cA == cB:
        return False
    kA = f.darts[0] & 3
    kB = f.darts[1] & 3
    # Arc u sits at dart (cA,kA) and position (kB+3)%4 of cB; it is the
    # over strand at both crossings iff kA is odd and kB is even. Arc v
    # is over at both iff the reverse. The mixed-parity cases are clasps.
    return (kA & 1) != (kB & 1)


def _triangle_edges(d: Diagram, f) -> List[int]:
    if f.size != 3:
        return []
    if len(set(f.crossings)) != 3 or len(set(f.arcs)) != 3:
        return []
    out = []
    for i in range(3):
        ki = f.darts[i] & 3
        kj = f.darts[(i + 1) % 3] & 3
        over_p1 = _is_over(ki, 1)
        over_p2 = _is_over((kj + 3) & 3, 1)
        if over_p1 == over_p2:
            out.append(f.arcs[i])
    return out


def _common_faces(d: Diagram, a1: int, a2: int) -> List[int]:
    out = []
    for idx, f in enumerate(d.faces):
        arcs = f.arcs
        if a1 in arcs and a2 in arcs:
            out.append(idx)
    return out


def enumerate_moves(d: Diagram) -> MoveSiteList:
    r1_add: List[Move] = []
    if d.is_unknot:
        for ch in (1, -1):
            r1_add.append(Move("R1Add", {"arc": 0, "side": "L", "chirality": ch}))
        return MoveSiteList(tuple(r1_add), (), (), (), (), ())

    arcs = range(1, 2 * d.n + 1)
    for arc in arcs:
        for side in ("L", "R"):
            for ch in (1, -1):
                r1_add.append(Move("R1Add", {"arc": arc, "side": side, "chirality": ch}))

    r1_remove = [Move("R1Remove", {"crossing": c}) for c in _kink_sites(d)]

    pairs = set()
    for f in d.faces:
        face_arcs = sorted(set(f.arcs))
        for a1 in face_arcs:
            for a2 in face_arcs:
                if a1 != a2:
                    pairs.add((a1, a2))
    r2_add = [
        Move("R2Add", {"arc1": a1, "arc2": a2, "over": True})
        for a1, a2 in sorted(pairs)
    ]

    r2_remove = [
        Move("R2Remove", {"face": idx})
        for idx, f in enumerate(d.faces)
        if _bigon_ok(d, f)
    ]

    r3 = [
        Move("R3", {"face": idx, "edge": edge})
        for idx, f in enumerate(d.faces)
        for edge in _triangle_edges(d, f)
    ]

    flips = [Move("CrossingFlip", {"crossing": c}) for c in range(d.n)]
    return MoveSiteList(
        tuple(r1_add), tuple(r1_remove), tuple(r2_add), tuple(r2_remove),
        tuple(r3), tuple(flips),
    )


def _fresh_arcs(rots: Sequence[Sequence[int]], count: int) -> List[int]:
    top = max((a for r in rots for a in r), default=0)
    return [top + 1 + i for i in range(count)]


def _delete_smoothing(rots: List[List[int]], ods: List[int], victims: set) -> Tuple[List[List[int]], List[int]]:
    """Remove crossings, reconnecting each strand passage straight through."""
    parent: Dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for c in victims:
        union(rots[c][0], rots[c][2])
        union(rots[c][1], rots[c][3])
    new_rots = [
        [find(a) for a in rots[c]] for c in range(len(rots)) if c not in victims
    ]
    new_ods = [ods[c] for c in range(len(rots)) if c not in victims]
    return new_rots, new_ods


def _face_or_fail(d: Diagram, idx: Any) -> Any:
    if not isinstance(idx, int) or isinstance(idx, bool) or not (0 <= idx < len(d.faces)):
        raise InapplicableMove(f"face {idx!r} does not exist")
    return d.faces[idx]


def _apply_r1_add(d: Diagram, site: Dict[str, Any]) -> Diagram:
    arc, side, ch = site.get("arc"), site.get("side"), site.get("chirality")
    if side not in ("L", "R") or ch not in (1, -1):
        raise InapplicableMove(f"bad R1Add site {site!r}")
    if d.is_unknot:
        if arc != 0:
            raise InapplicableMove("the unknot has only the trivial loop, arc 0")
        od = (1 if ch == 1 else 0) if side == "L" else (0 if ch == 1 else 1)
        if side == "L":
            return diagram_from_rot([(1, 1, 2, 2)], [od])
        return diagram_from_rot([(1, 2, 2, 1)], [od])
    if not (isinstance(arc, int) and 1 <= arc <= 2 * d.n):
        raise InapplicableMove(f"arc {arc!r} does not exist")
    rots, ods = d.rot_tables()
    head, tail = d.arc_ends()
    hd = head[arc]
    x2, loop = _fresh_arcs(rots, 2)
    rots[hd >> 2][hd & 3] = x2
    if side == "L":
        rots.append([arc, x2, loop, loop])
        ods.append(1 if ch == 1 else 0)
    else:
        rots.append([arc, loop, loop, x2])
        ods.append(0 if ch == 1 else 1)
    return diagram_from_rot(rots, ods)


def _apply_r1_remove(d: Diagram, site: Dict[str, Any]) -> Diagram:
    c = site.get("crossing")
    if not (isinstance(c, int) and not isinstance(c, bool) and 0 <= c < d.n):
        raise InapplicableMove(f"crossing {c!r} does not exist")
    if len(set(d.slots[c])) == 4:
        raise InapplicableMove(f"crossing {c} is not a kink")
    rots, ods = d.rot_tables()
    new_rots, new_ods = _delete_smoothing(rots, ods, {c})
    return diagram_from_rot(new_rots, new_ods)


def _apply_r2_add(d: Diagram, site: Dict[str, Any]) -> Diagram:
    a1, a2, over = site.get("arc1"), site.get("arc2"), site.get("over")
    if not isinstance(over, bool):
        raise InapplicableMove(f"bad R2Add site {site!r}")
    if d.is_unknot:
        raise InapplicableMove("R2Add needs two distinct arcs")
    valid = range(1, 2 * d.n + 1)
    if a1 not in valid or a2 not in valid or a1 == a2:
        raise InapplicableMove(f"R2Add needs two distinct existing arcs, got {a1!r}, {a2!r}")
    commons = _common_faces(d, a1, a2)
    if not commons:
        raise InapplicableMove(f"arcs {a1} and {a2} do not bound a common face")
    f = d.faces[commons[0]]
    # over=False means arc1 passes under arc2: same surgery with roles swapped.
    x, y = (a1, a2) if over else (a2, a1)
    dx = next(dart for dart in f.darts if d.arc_at(dart) == x)
    dy = next(dart for dart in f.darts if d.arc_at(dart) == y)

    rots, ods = d.rot_tables()
    x2, xm, y2, ym = _fresh_arcs(rots, 4)
    x_ends = [dart for dart in range(4 * d.n) if d.arc_at(dart) == x]
    y_ends = [dart for dart in range(4 * d.n) if d.arc_at(dart) == y]
    x_far = x_ends[1] if x_ends[0] == dx else x_ends[0]
    y_far = y_ends[1] if y_ends[0] == dy else y_ends[0]
    rots[x_far >> 2][x_far & 3] = x2
    rots[y_far >> 2][y_far & 3] = y2
    rots.append([x, y2, xm, ym])
    ods.append(0)
    rots.append([x2, ym, xm, y])
    ods.append(0)
    return diagram_from_rot(rots, ods)


def _apply_r2_remove(d: Diagram, site: Dict[str, Any]) -> Diagram:
    f = _face_or_fail(d, site.get("face"))
    if not _bigon_ok(d, f):
        raise InapplicableMove(f"face {site['face']} is not a removable bigon")
    rots, ods = d.rot_tables()
    new_rots, new_ods = _delete_smoothing(rots, ods, set(f.crossings))
    return diagram_from_rot(new_rots, new_ods)


def _apply_r3(d: Diagram, site: Dict[str, Any]) -> Diagram:
    f = _face_or_fail(d, site.get("face"))
    edge = site.get("edge")
    if edge not in _triangle_edges(d, f):
        raise InapplicableMove(
            f"face {site['face']} with slide edge {edge!r} is not an R3 site"
        )
    i = f.arcs.index(edge)
    darts = [f.darts[(i + j) % 3] for j in range(3)]
    p1, p2, q = (dart >> 2 for dart in darts)
    k0, k1, k2 = (dart & 3 for dart in darts)

    a_s, a_m = k0, (k0 + 3) & 3
    q_s, q_b = (k1 + 3) & 3, k1
    r_m, r_b = k2, (k2 + 3) & 3

    rots, ods = d.rot_tables()
    sw = rots[p2][(q_s + 2) & 3]
    mw = rots[q][(r_m + 2) & 3]
    bw = rots[q][(r_b + 2) & 3]
    su = rots[p1][(a_s + 2) & 3]
    mu = rots[p1][(a_m + 2) & 3]
    bu = rots[p2][(q_b + 2) & 3]
    s2, m2, b2 = _fresh_arcs(rots, 3)

    rots[p1][a_s] = sw
    rots[p1][(a_s + 2) & 3] = s2
    rots[p1][a_m] = mw
    rots[p1][(a_m + 2) & 3] = m2
    rots[p2][q_s] = su
    rots[p2][(q_s + 2) & 3] = s2
    rots[p2][q_b] = bw
    rots[p2][(q_b + 2) & 3] = b2
    rots[q][r_m] = mu
    rots[q][(r_m + 2) & 3] = m2
    rots[q][r_b] = bu
    rots[q][(r_b + 2) & 3] = b2
    return diagram_from_rot(rots, ods)


def _apply_flip(d: Diagram, site: Dict[str, Any]) -> Diagram:
    c = site.get("crossing")
    if not (isinstance(c, int) and not isinstance(c, bool) and 0 <= c < d.n):
        raise InapplicableMove(f"crossing {c!r} does not exist")
    rots, ods = d.rot_tables()
    ods[c] ^= 1
    return diagram_from_rot(rots, ods)


_DELTAS = {"R1Add": 1, "R1Remove": -1, "R2Add": 2, "R2Remove": -2, "R3": 0, "CrossingFlip": 0}

_APPLIERS = {
    "R1Add": _apply_r1_add,
    "R1Remove": _apply_r1_remove,
    "R2Add": _apply_r2_add,
    "R2Remove": _apply_r2_remove,
    "R3": _apply_r3,
    "CrossingFlip": _apply_flip,
}


def apply_move(d: Diagram, m: Move, max_crossings: int = DEFAULT_CROSSING_CAP) -> Diagram:
    """Validate the move against its predicate and perform it.

    Raises InapplicableMove when the site predicate fails and
    CrossingCapExceeded when the result would exceed max_crossings.
    """
    if m.kind not in _APPLIERS:
        raise InapplicableMove(f"unknown move kind {m.kind!r}")
    if d.n + _DELTAS[m.kind] > max_crossings:
        raise CrossingCapExceeded(
            f"{m.kind} would exceed the cap of {max_crossings} crossings"
        )
    return _APPLIERS[m.kind](d, m.site)


def simplify(d: Diagram) -> Diagram:
    """Apply R1Remove/R2Remove greedily until neither applies.

    Deterministic: the lowest-numbered kink goes first, then the
    lowest-numbered bigon.
    """
    while True:
        kinks = _kink_sites(d)
        if kinks:
            d = _apply_r1_remove(d, {"crossing": kinks[0]})
            continue
        bigon = next(
            (idx for idx, f in enumerate(d.faces) if _bigon_ok(d, f)), None
        )
        if bigon is None:
            return d
        d = _apply_r2_remove(d, {"face": bigon})
