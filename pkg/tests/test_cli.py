"""CLI: subcommand behavior, JSON error contract, exit codes."""

import json

import pytest
from click.testing import CliRunner

from knottyjones.cli import _bench_diagram, main

TREFOIL_TEXT = "X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]"
GEN_CONFIG = ('{"nMoves": 8, "pInversion": 0.35, "termBand": [3, 5], '
              '"crossingBand": [3, 8], "seed": 7}')
FIG3_SCRIPT = {"turns": [{"moves": [
    {"kind": "R1Add", "site": {"arc": 0, "side": "L", "chirality": -1}},
    {"kind": "R2Add", "site": {"arc1": 1, "arc2": 2, "over": True}},
    {"kind": "CrossingFlip", "site": {"crossing": 0}},
    {"kind": "CrossingFlip", "site": {"crossing": 1}},
]}]}


@pytest.fixture
def runner():
    return CliRunner()


def run_ok(runner, args, **kw):
    res = runner.invoke(main, args, catch_exceptions=False, **kw)
    assert res.exit_code == 0, res.stderr or res.stdout
    return json.loads(res.stdout)


def run_fail(runner, args, **kw):
    res = runner.invoke(main, args, **kw)
    assert res.exit_code != 0
    err = json.loads(res.stderr)
    assert set(err["error"]) == {"type", "message"}
    return err["error"]


class TestJones:
    def test_trefoil_from_file(self, runner, tmp_path):
        pd = tmp_path / "t.pd"
        pd.write_text(TREFOIL_TEXT)
        out = run_ok(runner, ["jones", str(pd)])
        assert out == {"variable": "t", "terms": [
            {"exp": 1, "coef": "1"}, {"exp": 3, "coef": "1"},
            {"exp": 4, "coef": "-1"}]}

    def test_empty_pd_is_one(self, runner):
        out = run_ok(runner, ["jones", "-"], input='{"crossings": []}')
        assert out["terms"] == [{"exp": 0, "coef": "1"}]

    def test_json_input_form(self, runner):
        body = json.dumps({"crossings": [[1, 4, 2, 3], [3, 6, 4, 5], [5, 2, 6, 1]]})
        out = run_ok(runner, ["jones", "-"], input=body)
        assert len(out["terms"]) == 3

    def test_missing_file_fails_with_json_error(self, runner):
        err = run_fail(runner, ["jones", "/no/such/file"])
        assert err["type"] == "FileNotFoundError"

    def test_invalid_pd_fails(self, runner):
        err = run_fail(runner, ["jones", "-"], input="X[1,2,3,4] X[2,1,3,4]")
        assert err["type"] == "ValidationError"

    def test_unknown_oracle_fails(self, runner):
        err = run_fail(runner, ["jones", "-", "--oracle", "bogus"],
                       input='{"crossings": []}')
        assert err["type"] == "ValueError"


class TestMoves:
    def test_trefoil_site_counts(self, runner):
        out = run_ok(runner, ["moves", "-"], input=TREFOIL_TEXT)
        assert len(out["R1Add"]) == 24
        assert out["R1Remove"] == []
        assert out["R2Remove"] == []
        assert len(out["CrossingFlip"]) == 3


class TestApply:
    def test_r_move_script_preserves_jones(self, runner, tmp_path):
        script = tmp_path / "m.json"
        script.write_text(json.dumps({"moves": [
            {"kind": "R1Add", "site": {"arc": 1, "side": "L", "chirality": 1}},
            {"kind": "R2Add", "site": {"arc1": 1, "arc2": 3, "over": True}},
        ]}))
        applied = run_ok(runner, ["apply", "-", str(script)], input=TREFOIL_TEXT)
        assert len(applied["crossings"]) == 6
        before = run_ok(runner, ["jones", "-"], input=TREFOIL_TEXT)
        after = run_ok(runner, ["jones", "-"], input=json.dumps(applied))
        assert before == after

    def test_inverse_pair_round_trips(self, runner, tmp_path):
        script = tmp_path / "m.json"
        script.write_text(json.dumps([
            {"kind": "R1Add", "site": {"arc": 1, "side": "L", "chirality": 1}},
            {"kind": "R1Remove", "site": {"crossing": 3}},
        ]))
        applied = run_ok(runner, ["apply", "-", str(script)], input=TREFOIL_TEXT)
        assert applied["crossings"] == [[1, 2, 4, 5], [5, 6, 2, 3], [3, 4, 6, 1]]

    def test_inapplicable_move_fails(self, runner, tmp_path):
        script = tmp_path / "m.json"
        script.write_text(json.dumps([{"kind": "R1Remove", "site": {"crossing": 0}}]))
        err = run_fail(runner, ["apply", "-", str(script)], input=TREFOIL_TEXT)
        assert err["type"] == "InapplicableMove"

    def test_cap_respected(self, runner, tmp_path):
        script = tmp_path / "m.json"
        script.write_text(json.dumps([
            {"kind": "R1Add", "site": {"arc": 1, "side": "L", "chirality": 1}}]))
        err = run_fail(runner, ["apply", "--max-crossings", "3", "-", str(script)],
                       input=TREFOIL_TEXT)
        assert err["type"] == "CrossingCapExceeded"


class TestGenerate:
    def test_deterministic_output(self, runner):
        a = run_ok(runner, ["generate", "--config", GEN_CONFIG])
        b = run_ok(runner, ["generate", "--config", GEN_CONFIG])
        assert a == b
        assert 3 <= len(a["jp"]["terms"]) <= 5
        assert 3 <= a["crossings"] <= 8
        assert a["provenance"]["moves"]

    def test_config_from_file(self, runner, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(GEN_CONFIG)
        out = run_ok(runner, ["generate", "--config", str(cfg)])
        assert out["attempts"] >= 1

    def test_exhaustion_fails(self, runner):
        cfg = ('{"nMoves": 4, "pInversion": 0.0, "termBand": [1, 1], '
               '"crossingBand": [1, 2], "maxAttempts": 3, "seed": 0}')
        err = run_fail(runner, ["generate", "--config", cfg])
        assert err["type"] == "GenerationExhausted"


class TestPlay:
    def test_figure_script_wins_round(self, runner, tmp_path):
        script = tmp_path / "fig3.json"
        script.write_text(json.dumps(FIG3_SCRIPT))
        out = run_ok(runner, ["play", "--config",
                              '{"seed": 42, "totalRounds": 2}',
                              "--script", str(script)])
        assert out["status"] == "RoundWon"
        assert out["round"] == 2
        assert out["score"] == 600
        assert "provenance" not in out["opponent"]

    def test_debug_flag_exposes_provenance(self, runner, tmp_path):
        script = tmp_path / "s.json"
        script.write_text(json.dumps({"turns": []}))
        out = run_ok(runner, ["play", "--config", '{"seed": 42}',
                              "--script", str(script), "--debug"])
        assert out["opponent"]["provenance"]["moves"]

    def test_budget_violation_fails(self, runner, tmp_path):
        script = tmp_path / "s.json"
        script.write_text(json.dumps({"turns": [{"moves": [
            {"kind": "R1Add", "site": {"arc": 0, "side": "L", "chirality": 1}}
        ] * 5}]}))
        err = run_fail(runner, ["play", "--config", '{"seed": 42}',
                                "--script", str(script)])
        assert err["type"] == "BudgetViolation"


class TestBench:
    def test_small_sweep(self, runner):
        rows = run_ok(runner, ["bench", "--min-crossings", "3",
                               "--max-crossings", "6", "--json"])
        assert [r["crossings"] for r in rows] == [3, 4, 5, 6]
        assert all(r["millis"] >= 0 for r in rows)

    def test_bench_diagram_exact_size_and_deterministic(self):
        for n in (3, 7, 12):
            d1 = _bench_diagram(n, seed=0)
            d2 = _bench_diagram(n, seed=0)
            assert d1.n == n
            assert d1.canonical_key() == d2.canonical_key()

    def test_text_table(self, runner):
        res = runner.invoke(main, ["bench", "--min-crossings", "3",
                                   "--max-crossings", "4"],
                            catch_exceptions=False)
        assert res.exit_code == 0
        assert "crossings" in res.stdout
