"""Bracket state sum: naive reference vs Gray-code path, laws, budget."""

import random

import pytest

from knottyjones import BudgetExceeded, diagram_from_pd_text, mirror, unknot
from knottyjones.bracket import StateSumBudget, kauffman_bracket, kauffman_bracket_naive
from knottyjones.laurent import LaurentPoly
from knottyjones.moves import Move, apply_move, enumerate_moves
from knottyjones.oracle import (
    ReferenceOracle,
    StateSumOracle,
    jones,
    jones_from_bracket,
)

TREFOIL = "X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]"
FIG8 = "X[4,5,1,2] X[8,1,5,6] X[6,7,4,3] X[2,3,8,7]"


def A(*terms):
    return LaurentPoly("A", terms)


class TestPinnedBrackets:
    def test_unknot(self):
        assert kauffman_bracket(unknot()).coeffs == {0: 1}
        assert kauffman_bracket_naive(unknot()).coeffs == {0: 1}

    def test_kinks(self):
        pos = diagram_from_pd_text("X[1,2,2,1]")
        neg = diagram_from_pd_text("X[1,2,1,2]")
        assert kauffman_bracket(pos) == A((3, -1))
        assert kauffman_bracket(neg) == A((-3, -1))

    def test_trefoil(self):
        b = kauffman_bracket(diagram_from_pd_text(TREFOIL))
        assert b == A((-7, 1), (-3, -1), (5, -1))


class TestNaiveAgreement:
    @pytest.mark.parametrize("text", [TREFOIL, FIG8, "X[1,2,2,1]", "X[1,2,1,2]"])
    def test_fixtures(self, text):
        d = diagram_from_pd_text(text)
        assert kauffman_bracket(d) == kauffman_bracket_naive(d)

    def test_random_walk_diagrams(self):
        random.seed(314)
        d = diagram_from_pd_text(TREFOIL)
        deltas = {"R1Add": 1, "R1Remove": -1, "R2Add": 2, "R2Remove": -2, "R3": 0, "CrossingFlip": 0}
        for _ in range(25):
            sites = list(enumerate_moves(d).all_moves())
            if d.n > 8:
                sites = [m for m in sites if deltas[m.kind] < 0] or sites
            m = random.choice(sites)
            if d.n + deltas[m.kind] > 10:
                continue
            d = apply_move(d, m)
            assert kauffman_bracket(d) == kauffman_bracket_naive(d)


class TestKinkLaws:
    @pytest.mark.parametrize("ch,factor", [(1, (3, -1)), (-1, (-3, -1))])
    def test_bracket_kink_multiplier(self, ch, factor):
        d = diagram_from_pd_text(TREFOIL)
        grown = apply_move(d, Move("R1Add", {"arc": 4, "side": "R", "chirality": ch}))
        assert kauffman_bracket(grown) == kauffman_bracket(d) * A(factor)


class TestJones:
    def test_trefoil_pinned(self):
        v = jones(diagram_from_pd_text(TREFOIL))
        assert v.coeffs == {1: 1, 3: 1, 4: -1}
        assert v.term_count == 3

    def test_fig8_pinned(self):
        v = jones(diagram_from_pd_text(FIG8))
        assert v.coeffs == {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}
        assert v.term_count == 5

    def test_unknot_one(self):
        assert jones(unknot()).coeffs == {0: 1}

    @pytest.mark.parametrize("text", [TREFOIL, FIG8, "X[1,2,2,1]"])
    def test_mirror_law(self, text):
        d = diagram_from_pd_text(text)
        assert jones(mirror(d)) == jones(d).substitute_monomial("t", -1)

    def test_oracle_registry_agreement(self):
        d = diagram_from_pd_text(FIG8)
        assert StateSumOracle().evaluate(d) == ReferenceOracle().evaluate(d)

    def test_exponents_divisible_by_four(self):
        d = diagram_from_pd_text(TREFOIL)
        b = kauffman_bracket(d)
        shifted = b.shift(-3 * d.writhe)
        assert all(e % 4 == 0 for e in shifted.coeffs)
        assert jones_from_bracket(d, b) == jones(d)


class TestBudget:
    def test_crossing_budget(self):
        d = diagram_from_pd_text(TREFOIL)
        with pytest.raises(BudgetExceeded):
            kauffman_bracket(d, StateSumBudget(max_crossings=2))
        assert kauffman_bracket(d, StateSumBudget(max_crossings=3)) is not None

    def test_oracle_budget_plumbs(self):
        oracle = StateSumOracle(StateSumBudget(max_crossings=2))
        with pytest.raises(BudgetExceeded):
            oracle.evaluate(diagram_from_pd_text(TREFOIL))
