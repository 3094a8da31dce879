"""Knot diagrams as combinatorial maps.

A diagram with n crossings has 4n darts (arc ends), dart id = 4*crossing +
slot. Slots are rotational positions counterclockwise around the crossing
with the under strand entering at slot 0 and leaving at slot 2; the over
strand occupies slots 1 and 3. A quadruple X[a,b,c,d] places a at slot 0,
d at slot 1, b at slot 2 and c at slot 3.

Faces are orbits of phi = sigma o alpha, where alpha pairs the two darts
of each arc and sigma rotates one slot counterclockwise; the face of dart
(c, k) is the corner between slots k-1 and k, and the phi walk keeps the
face on the right of the direction of travel. A connected 4-valent map is
planar iff it has exactly n + 2 faces, which is the validation gate here.

The crossing sign is +1 when the over strand enters at slot 3 and -1 when
it enters at slot 1.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import ValidationError
from .pd import PdCode, parse_pd_text, serialize_pd

Quad = Tuple[int, int, int, int]
Rot = Tuple[int, int, int, int]


class Face:
    """One face: darts in boundary-walk order starting from the smallest."""

    __slots__ = ("darts", "arcs", "crossings")

    def __init__(self, darts: Tuple[int, ...], arcs: Tuple[int, ...], crossings: Tuple[int, ...]):
        object.__setattr__(self, "darts", darts)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "crossings", crossings)

    @property
    def size(self) -> int:
        return len(self.darts)

    def __setattr__(self, name, value):
        raise AttributeError("Face is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Face):
            return NotImplemented
        return self.darts == other.darts

    def __hash__(self) -> int:
        return hash(self.darts)

    def __repr__(self) -> str:
        return f"Face(size={self.size}, arcs={self.arcs})"


class Diagram:
    """Immutable validated knot diagram.

    Fields:
      quads:   the PD quadruples, one per crossing.
      slots:   arc id at each rotational slot, per crossing.
      over_in: slot (1 or 3) where the over strand enters, per crossing.
      signs:   crossing signs derived from over_in.
      strand:  the traversal as (crossing, entry_slot) passages in order.
      faces:   phi orbits, canonically ordered by smallest dart.
    """

    __slots__ = ("n", "quads", "slots", "over_in", "signs", "strand", "alpha", "faces", "_key")

    def __init__(self, quads, slots, over_in, strand, alpha, faces):
        object.__setattr__(self, "n", len(quads))
        object.__setattr__(self, "quads", quads)
        object.__setattr__(self, "slots", slots)
        object.__setattr__(self, "over_in", over_in)
        object.__setattr__(self, "signs", tuple(1 if s == 3 else -1 for s in over_in))
        object.__setattr__(self, "strand", strand)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("Diagram is immutable")

    @property
    def is_unknot(self) -> bool:
        return self.n == 0

    @property
    def arc_count(self) -> int:
        return 2 * self.n

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def pd_code(self) -> PdCode:
        return PdCode(self.quads)

    def pd_text(self) -> str:
        return serialize_pd(self.pd_code())

    def arc_at(self, dart: int) -> int:
        return self.slots[dart >> 2][dart & 3]

    def arc_ends(self) -> Tuple[Dict[int, int], Dict[int, int]]:
        """Maps arc -> head dart (arc enters crossing) and arc -> tail dart."""
        head: Dict[int, int] = {}
        tail: Dict[int, int] = {}
        for c in range(self.n):
            s = self.slots[c]
            oi = self.over_in[c]
            head[s[0]] = 4 * c
            head[s[oi]] = 4 * c + oi
            tail[s[2]] = 4 * c + 2
            oo = (oi + 2) & 3
            tail[s[oo]] = 4 * c + oo
        return head, tail

    def rot_tables(self) -> Tuple[List[List[int]], List[int]]:
        """Mutable rotation tables + over-diagonal flags for move surgery.

        In slot form the over strand always sits on the odd diagonal, so
        every flag starts at 1.
        """
        return [list(s) for s in self.slots], [1] * self.n

    def canonical_key(self) -> str:
        """Label-independent identity: minimal serialization over all
        traversal starts and both directions. Equal keys iff the diagrams
        agree up to relabeling."""
        if self._key is not None:
            return self._key
        if self.n == 0:
            key = ""
        else:
            rots = self.slots
            best = None
            for c in range(self.n):
                for p in range(4):
                    quads = _walk_rot(rots, [1] * self.n, (c, p), strict=False)
                    if quads is None:
                        continue
                    text = ";".join("%d,%d,%d,%d" % q for q in quads)
                    if best is None or text < best:
                        best = text
            assert best is not None
            key = best
        object.__setattr__(self, "_key", key)
        return key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.quads == other.quads

    def __hash__(self) -> int:
        return hash(self.quads)

    def __repr__(self) -> str:
        return f"Diagram({self.pd_text()!r})"


def unknot() -> Diagram:
    return Diagram((), (), (), (), (), (Face((), (), ()),))


def build_diagram(code: PdCode) -> Diagram:
    """Validate a PdCode into a Diagram.

    Checks beyond arc counts: a single consistently oriented strand
    covering every arc exactly once, and planarity via the Euler face
    count F = n + 2.
    """
    n = code.n
    if n == 0:
        return unknot()
    quads = code.crossings

    occ: Dict[int, List[Tuple[int, int]]] = {}
    for c, quad in enumerate(quads):
        for qpos, arc in enumerate(quad):
            occ.setdefault(arc, []).append((c, qpos))

    def attempt(start: Tuple[int, int]):
        over_entry: Dict[int, int] = {}
        strand_qpos: List[Tuple[int, int]] = []
        arcs_seen = set()
        arc, target = 1, start
        while True:
            c, p = target
            if p == 1:
                raise ValidationError(
                    f"arc {arc} flows into the under-out position of crossing {c}: "
                    "inconsistent orientation"
                )
            if p == 0:
                exit_pos = 1
            elif p == 2:
                exit_pos = 3
                if c in over_entry:
                    raise ValidationError(f"crossing {c} entered twice on the over strand")
                over_entry[c] = 2
            else:
                exit_pos = 2
                if c in over_entry:
                    raise ValidationError(f"crossing {c} entered twice on the over strand")
                over_entry[c] = 3
            strand_qpos.append((c, p))
            arcs_seen.add(arc)
            out_arc = quads[c][exit_pos]
            ends = occ[out_arc]
            nxt = ends[1] if ends[0] == (c, exit_pos) else ends[0]
            if out_arc == 1 and nxt == start:
                break
            if len(strand_qpos) > 2 * n:
                raise ValidationError("traversal failed to close: inconsistent code")
            arc, target = out_arc, nxt
        return strand_qpos, over_entry, arcs_seen

    # Orient arc 1 toward its head. An under-in end is definitely the
    # head, an under-out end definitely the tail; when both ends are over
    # positions the direction is ambiguous, so try both (a backward walk
    # cannot close: it dies at the first under-out arrival).
    first = occ[1]
    if first[0][1] == 0:
        candidates = [first[0]]
    elif first[1][1] == 0:
        candidates = [first[1]]
    elif first[0][1] == 1:
        candidates = [first[1]]
    elif first[1][1] == 1:
        candidates = [first[0]]
    else:
        candidates = [first[0], first[1]]

    result = None
    err: ValidationError | None = None
    for start in candidates:
        try:
            result = attempt(start)
            break
        except ValidationError as exc:
            err = exc
    if result is None:
        assert err is not None
        raise err
    strand_qpos, over_entry, arcs_seen = result

    if len(arcs_seen) != 2 * n:
        raise ValidationError(
            f"multi-component or disconnected: traversal covered {len(arcs_seen)} "
            f"of {2 * n} arcs"
        )

    # Quad positions (a,b,c,d) sit at rotational slots (0,2,3,1).
    slots = tuple((q[0], q[3], q[1], q[2]) for q in quads)
    over_in = tuple(3 if over_entry[c] == 2 else 1 for c in range(n))
    qpos_to_slot = (0, 2, 3, 1)
    strand = tuple((c, qpos_to_slot[p]) for c, p in strand_qpos)

    alpha = _alpha_from_slots(slots)
    faces = _faces_from_alpha(slots, alpha)
    if len(faces) != n + 2:
        raise ValidationError(
            f"non-planar pairing: {len(faces)} faces where {n + 2} expected"
        )
    return Diagram(quads, slots, over_in, strand, alpha, faces)


def parse_pd(text: str) -> PdCode:
    """Parse and fully validate PD text (including traversal and planarity)."""
    code = parse_pd_text(text)
    build_diagram(code)
    return code


def _alpha_from_slots(slots: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    ends: Dict[int, List[int]] = {}
    for c, table in enumerate(slots):
        for k, arc in enumerate(table):
            ends.setdefault(arc, []).append(4 * c + k)
    alpha = [0] * (4 * len(slots))
    for pair in ends.values():
        a, b = pair
        alpha[a] = b
        alpha[b] = a
    return tuple(alpha)


def _faces_from_alpha(slots: Sequence[Sequence[int]], alpha: Sequence[int]) -> Tuple[Face, ...]:
    m = 4 * len(slots)
    seen = [False] * m
    faces: List[Face] = []
    for d0 in range(m):
        if seen[d0]:
            continue
        orbit: List[int] = []
        d = d0
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            a = alpha[d]
            d = (a & ~3) | ((a + 1) & 3)
        darts = tuple(orbit)
        arcs = tuple(slots[d >> 2][d & 3] for d in darts)
        crossings = tuple(d >> 2 for d in darts)
        faces.append(Face(darts, arcs, crossings))
    return tuple(faces)


def _walk_rot(rots, over_diags, start, strict=True):
    """Traverse rotation tables from an entry dart, relabeling as it goes.

    Returns canonical quadruples (crossings reindexed by first visit, arcs
    renumbered 1..2n along the strand), or None when the walk does not
    close over every arc (strict=False) instead of raising.
    """
    n = len(rots)
    occ: Dict[int, List[Tuple[int, int]]] = {}
    for c, table in enumerate(rots):
        for p, arc in enumerate(table):
            occ.setdefault(arc, []).append((c, p))
    for arc, ends in occ.items():
        if len(ends) != 2:
            if strict:
                raise ValidationError(f"arc {arc} has {len(ends)} ends")
            return None

    passages: List[Tuple[int, int]] = []
    entered = set()
    target = start
    while True:
        c, p = target
        if (c, p) in entered:
            if strict:
                raise ValidationError("traversal revisited an entry: broken surgery")
            return None
        entered.add((c, p))
        passages.append((c, p))
        out_pos = (p + 2) & 3
        out_arc = rots[c][out_pos]
        ends = occ[out_arc]
        nxt = ends[1] if ends[0] == (c, out_pos) else ends[0]
        if nxt == start:
            break
        target = nxt
    if len(passages) != 2 * n:
        if strict:
            raise ValidationError(
                f"multi-component result: {len(passages)} passages, {2 * n} expected"
            )
        return None

    order: List[int] = []
    first_visit: Dict[int, int] = {}
    entry_at: Dict[Tuple[int, int], int] = {}
    for idx, (c, p) in enumerate(passages):
        if c not in first_visit:
            first_visit[c] = len(order)
            order.append(c)
        entry_at[(c, p)] = idx

    # Arc entering passage j (0-based) is labeled j+1.
    arc_label: Dict[Tuple[int, int], int] = {}
    for idx, (c, p) in enumerate(passages):
        arc_label[(c, p)] = idx + 1
        arc_label[(c, (p + 2) & 3)] = (idx + 1) % (2 * n) + 1

    quads: List[Quad] = []
    for c in order:
        two = [(p, entry_at[(c, p)]) for p in range(4) if (c, p) in entry_at]
        if len(two) != 2:
            if strict:
                raise ValidationError(f"crossing {c} not passed exactly twice")
            return None
        (p1, _), (p2, _) = two
        if (p1 & 1) == (p2 & 1):
            if strict:
                raise ValidationError(f"crossing {c} passed twice on one diagonal")
            return None
        od = over_diags[c] & 1
        under_in = p1 if (p1 & 1) != od else p2
        a = arc_label[(c, under_in)]
        b = arc_label[(c, (under_in + 2) & 3)]
        d_arc = arc_label[(c, (under_in + 1) & 3)]
        c_arc = arc_label[(c, (under_in + 3) & 3)]
        quads.append((a, b, c_arc, d_arc))
    return tuple(quads)


def diagram_from_rot(rots: Sequence[Sequence[int]], over_diags: Sequence[int]) -> Diagram:
    """Canonicalize raw rotation tables into a validated Diagram.

    The walk starts by entering crossing 0 at position 0; arcs are
    relabeled 1..2n in traversal order and crossings reindexed by first
    visit, so equal surgeries yield identical diagrams.
    """
    if not rots:
        return unknot()
    quads = _walk_rot([tuple(r) for r in rots], list(over_diags), (0, 0))
    return build_diagram(PdCode(quads))


def faces(d: Diagram) -> Tuple[Face, ...]:
    return d.faces


def writhe(d: Diagram) -> int:
    return d.writhe


def mirror(d: Diagram) -> Diagram:
    """Toggle every crossing's over/under flag."""
    if d.n == 0:
        return d
    rots, flags = d.rot_tables()
    return diagram_from_rot(rots, [f ^ 1 for f in flags])


def diagram_from_pd_text(text: str) -> Diagram:
    return build_diagram(parse_pd_text(text))
