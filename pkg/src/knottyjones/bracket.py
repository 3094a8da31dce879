"""Kauffman bracket state sums.

States assign each crossing an A- or B-smoothing. In dart terms the
A-smoothing at crossing c pairs slots (0,1) and (2,3); the B-smoothing
pairs (1,2) and (3,0). A state's loops are the cycles of the alternating
alpha/tau walk, and the bracket is

    <D> = sum over states  A^(#A - #B) * delta^(loops - 1),

with delta = -A^2 - A^(-2). The unknot bracket is 1.

`kauffman_bracket_naive` enumerates states independently and counts loops
with a union-find; it exists as the reference the fast path is checked
against. `kauffman_bracket` walks states in Gray-code order and maintains
the loop count incrementally: one flip always merges two loops or splits
one (never neither), and the split case is detected by walking half of
the loop through the flipped crossing, since tau-partners always sit on
opposite g-cycles of their loop.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Dict, List, Optional

from .diagram import Diagram
from .errors import BudgetExceeded
from .laurent import LaurentPoly

DELTA = {2: -1, -2: -1}


@dataclass(frozen=True)
class StateSumBudget:
    """Resource bounds for the exponential state sum."""

    max_crossings: Optional[int] = 26
    max_millis: Optional[int] = None

    def check_crossings(self, n: int) -> None:
        if self.max_crossings is not None and n > self.max_crossings:
            raise BudgetExceeded(
                f"state sum over {n} crossings exceeds the budget of "
                f"{self.max_crossings}"
            )


def _dict_mul(p: Dict[int, int], q: Dict[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            c = out.get(e, 0) + c1 * c2
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def _delta_powers(top: int) -> List[Dict[int, int]]:
    pows = [{0: 1}]
    for _ in range(top):
        pows.append(_dict_mul(pows[-1], DELTA))
    return pows


def _aggregate(counts: Dict[int, Dict[int, int]], n: int) -> LaurentPoly:
    """counts[bcount][loops] = number of states; expand to the bracket."""
    top = max((max(by_loops) for by_loops in counts.values()), default=1)
    pows = _delta_powers(top)
    acc: Dict[int, int] = {}
    for bcount, by_loops in counts.items():
        a_exp = n - 2 * bcount
        for loops, mult in by_loops.items():
            for e, coef in pows[loops - 1].items():
                key = e + a_exp
                val = acc.get(key, 0) + mult * coef
                if val:
                    acc[key] = val
                elif key in acc:
                    del acc[key]
    return LaurentPoly("A", acc.items())


def kauffman_bracket_naive(d: Diagram) -> LaurentPoly:
    """Reference bracket: independent 2^n enumeration with union-find."""
    n = d.n
    if n == 0:
        return LaurentPoly.one("A")
    alpha = d.alpha
    m = 4 * n
    counts: Dict[int, Dict[int, int]] = {}
    for state in itertools.product((0, 1), repeat=n):
        parent = list(range(m))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for dart in range(m):
            union(dart, alpha[dart])
        for c, bit in enumerate(state):
            b4 = 4 * c
            if bit:
                union(b4, b4 + 3)
                union(b4 + 1, b4 + 2)
            else:
                union(b4, b4 + 1)
                union(b4 + 2, b4 + 3)
        loops = len({find(x) for x in range(m)})
        bcount = sum(state)
        counts.setdefault(bcount, {})
        counts[bcount][loops] = counts[bcount].get(loops, 0) + 1
    return _aggregate(counts, n)


def kauffman_bracket(d: Diagram, budget: Optional[StateSumBudget] = None) -> LaurentPoly:
    """Gray-code state sum with incremental loop tracking."""
    if budget is not None:
        budget.check_crossings(d.n)
    n = d.n
    if n == 0:
        return LaurentPoly.one("A")
    alpha = list(d.alpha)
    m = 4 * n

    tau = [0] * m
    for c in range(n):
        b4 = 4 * c
        tau[b4] = b4 + 1
        tau[b4 + 1] = b4
        tau[b4 + 2] = b4 + 3
        tau[b4 + 3] = b4 + 2
    g = [tau[alpha[v]] for v in range(m)]

    # Initial loop count for the all-A state: each loop holds two g-cycles.
    seen = [False] * m
    cycles = 0
    for d0 in range(m):
        if seen[d0]:
            continue
        cycles += 1
        v = d0
        while not seen[v]:
            seen[v] = True
            v = g[v]
    loops = cycles >> 1

    counts: Dict[int, Dict[int, int]] = {}

    def record(bcount: int, nloops: int) -> None:
        by_loops = counts.setdefault(bcount, {})
        by_loops[nloops] = by_loops.get(nloops, 0) + 1

    record(0, loops)

    deadline = None
    if budget is not None and budget.max_millis is not None:
        deadline = time.monotonic() + budget.max_millis / 1000.0

    state_bits = [0] * n
    bcount = 0
    total = 1 << n
    s = 1
    while s < total:
        c = (s & -s).bit_length() - 1
        b4 = 4 * c
        # Same-loop test before rewiring: walk the g-cycle of dart b4 and
        # look for the darts of the other tau-pair at c.
        if state_bits[c]:
            t1, t2 = b4 + 1, b4 + 2
        else:
            t1, t2 = b4 + 2, b4 + 3
        same = False
        v = g[b4]
        while v != b4:
            if v == t1 or v == t2:
                same = True
                break
            v = g[v]
        loops += 1 if same else -1

        if state_bits[c]:
            state_bits[c] = 0
            bcount -= 1
            tau[b4] = b4 + 1
            tau[b4 + 1] = b4
            tau[b4 + 2] = b4 + 3
            tau[b4 + 3] = b4 + 2
        else:
            state_bits[c] = 1
            bcount += 1
            tau[b4] = b4 + 3
            tau[b4 + 3] = b4
            tau[b4 + 1] = b4 + 2
            tau[b4 + 2] = b4 + 1
        g[alpha[b4]] = tau[b4]
        g[alpha[b4 + 1]] = tau[b4 + 1]
        g[alpha[b4 + 2]] = tau[b4 + 2]
        g[alpha[b4 + 3]] = tau[b4 + 3]

        record(bcount, loops)
        if deadline is not None and (s & 8191) == 0 and time.monotonic() > deadline:
            raise BudgetExceeded(
                f"state sum timed out after {budget.max_millis} ms "
                f"({s} of {total} states)"
            )
        s += 1
    return _aggregate(counts, n)
