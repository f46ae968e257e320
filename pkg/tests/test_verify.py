"""Formula set construction and the theorem-level property checks."""

import json

import pytest

from bwythoff.exact import PI, BeattyPair
from bwythoff.rules import NimY, Position, RuleSet, apply_move, is_legal, legal_moves
from bwythoff.solver import solve_grid, solve_grid_naive
from bwythoff.verify import (
    check_complementarity,
    check_n_to_p,
    check_p_to_n,
    difference_pairs,
    formula_positions,
    report_json_dict,
    verify_theorem,
)

from conftest import FIXTURE_BETAS, SURD_2_SQRT2

PI_RULES = RuleSet.variant(PI)
PI_PAIR = BeattyPair.from_beta(PI)


def test_formula_positions_pi():
    fs = formula_positions(PI_PAIR, 12)
    assert fs.entries == ((0, 0, 0), (1, 1, 3), (2, 2, 6), (3, 4, 9), (4, 5, 12))


def test_formula_positions_zero():
    fs = formula_positions(PI_PAIR, 0)
    assert fs.entries == ((0, 0, 0),)


def test_formula_positions_surd():
    pair = BeattyPair.from_beta(SURD_2_SQRT2)
    fs = formula_positions(pair, 10)
    assert fs.entries == ((0, 0, 0), (1, 1, 3), (2, 2, 6), (3, 4, 10))


def test_formula_entries_strictly_increasing():
    for spec in FIXTURE_BETAS.values():
        fs = formula_positions(BeattyPair.from_beta(spec), 500)
        for (_, a0, b0), (_, a1, b1) in zip(fs.entries, fs.entries[1:]):
            assert a0 < a1 and b0 < b1
        for n, a, b in fs.entries[1:]:
            assert a < b


def test_check_p_to_n_empty_for_pi_and_surd():
    for spec in (PI, SURD_2_SQRT2):
        rules = RuleSet.variant(spec)
        fs = formula_positions(BeattyPair.from_beta(spec), 100)
        assert check_p_to_n(rules, fs) == []


def test_check_p_to_n_requires_matching_rules():
    fs = formula_positions(PI_PAIR, 10)
    with pytest.raises(ValueError):
        check_p_to_n(RuleSet.invariant(3), fs)
    with pytest.raises(ValueError):
        check_p_to_n(RuleSet.variant(SURD_2_SQRT2), fs)


def test_check_n_to_p_empty_for_pi():
    fs = formula_positions(PI_PAIR, 100)
    assert check_n_to_p(PI_RULES, fs, 100) == []


def test_n_to_p_witnesses_match_proof_cases():
    # (3, 5): nim move on the y pile to the mirrored pair (3, 1)
    fs = formula_positions(PI_PAIR, 100)
    pos_set = fs.position_set
    assert (3, 5) not in pos_set
    mv = NimY(4)
    assert is_legal(PI_RULES, Position(3, 5), mv)
    after = apply_move(Position(3, 5), mv)
    assert (after.x, after.y) == (3, 1) and (3, 1) in pos_set
    # (3, 6) = (floor(2 alpha)+1, floor(2 beta)): nim move on x to (2, 6)
    assert (3, 6) not in pos_set and (2, 6) in pos_set


def test_difference_pairs_pi_prefix():
    fs = formula_positions(PI_PAIR, 26)  # entries n = 0..8
    assert len(fs.entries) == 9
    stats = difference_pairs(fs)
    assert stats.violations == ()
    assert stats.histogram == {
        "(1,floor)": 4,
        "(1,floor+1)": 1,
        "(2,floor)": 3,
        "(2,floor+1)": 0,
    }


def test_difference_pairs_two_entries():
    fs = formula_positions(PI_PAIR, 3)
    stats = difference_pairs(fs)
    assert stats.histogram["(1,floor)"] == 1
    assert sum(stats.histogram.values()) == 1


def test_difference_pairs_surd_sweep():
    pair = BeattyPair.from_beta(SURD_2_SQRT2)
    import bwythoff.exact as exact

    n_max = exact.floor_mul(SURD_2_SQRT2, 10_000)
    fs = formula_positions(pair, n_max)
    assert len(fs.entries) == 10_001
    assert difference_pairs(fs).violations == ()


@pytest.mark.parametrize(
    "limit,expected",
    [(10, True), (1, True)],
)
def test_check_complementarity_pi(limit, expected):
    assert check_complementarity(PI_PAIR, limit) is expected


def test_check_complementarity_sides():
    # alpha side {1,2,4,5,7,8,10}, beta side {3,6,9} partition 1..10
    from bwythoff.exact import beatty_prefix

    assert beatty_prefix(PI_PAIR.alpha, 7) == [1, 2, 4, 5, 7, 8, 10]
    assert beatty_prefix(PI_PAIR.beta, 3) == [3, 6, 9]


def test_verify_theorem_holds():
    for spec in (PI, SURD_2_SQRT2):
        report = verify_theorem(RuleSet.variant(spec), 500)
        assert report.theorem_holds
        assert report.first_discrepancy is None
        assert report.p_to_n_violations == []
        assert report.n_to_p_violations == []
        assert report.complementarity_holds
        assert sum(report.difference_pairs.histogram.values()) == len(
            formula_positions(BeattyPair.from_beta(spec), 500).entries
        ) - 1


def test_verify_theorem_rejects_invariant():
    with pytest.raises(ValueError):
        verify_theorem(RuleSet.invariant(3), 100)


def test_two_paths_agree_and_disagree_detectably():
    # independence: comparing the solver P-set for the WRONG game against the
    # formula set must produce a discrepancy, caught by path 1 only
    variant_p = set(solve_grid(PI_RULES, 60).p_positions)
    fs = formula_positions(PI_PAIR, 60)
    assert variant_p == set(fs.position_set)
    invariant_p = set(solve_grid(RuleSet.invariant(3), 60).p_positions)
    assert invariant_p != set(fs.position_set)
    # while the rules-level checks still pass (they never consult the solver)
    assert check_p_to_n(PI_RULES, fs) == []
    assert check_n_to_p(PI_RULES, fs, 60) == []


def test_variant_vs_invariant_divergence():
    variant = solve_grid_naive(PI_RULES, 200)
    invariant = solve_grid_naive(RuleSet.invariant(3), 200)
    divergent = sorted(
        set(variant.p_positions).symmetric_difference(invariant.p_positions)
    )
    assert divergent, "the source restriction must change the game"
    assert divergent[0] == (1, 3)  # P in the variant game, N in 3-Wythoff Nim
    assert variant.is_p(1, 3) and not invariant.is_p(1, 3)


@pytest.mark.parametrize("name", ["pi", "2+sqrt2"])
def test_near_miss_positions_regression(name):
    # positions one token shy of a formula pair, shifted along the diagonal:
    # (a_n + t, b_n - 1 + t).  These are the tightest cases for the diagonal
    # escape; each must still reach the formula set in one legal move.
    spec = FIXTURE_BETAS[name]
    rules = RuleSet.variant(spec)
    fs = formula_positions(BeattyPair.from_beta(spec), 400)
    pos_set = fs.position_set
    for n, a, b in fs.entries[1:40]:
        for t in range(0, 11):
            x, y = a + t, b - 1 + t
            if (x, y) in pos_set:
                continue
            source = Position(x, y)
            witnesses = [
                mv
                for mv in legal_moves(rules, source)
                if (lambda q: (q.x, q.y) in pos_set)(apply_move(source, mv))
            ]
            assert witnesses, f"({x}, {y}) has no move into the formula set"


def test_report_json_shape_and_determinism():
    report = verify_theorem(PI_RULES, 50)
    payload = report_json_dict(report)
    assert list(payload) == [
        "beta",
        "n_max",
        "theorem_holds",
        "first_discrepancy",
        "p_to_n_violations",
        "n_to_p_violations",
        "difference_pairs",
        "difference_violations",
        "complementarity_holds",
    ]
    assert payload["beta"] == "pi"
    assert payload["difference_pairs"] == {
        "(1,floor)": 8,
        "(1,floor+1)": 1,
        "(2,floor)": 6,
        "(2,floor+1)": 1,
    }
    assert json.dumps(payload) == json.dumps(report_json_dict(verify_theorem(PI_RULES, 50)))
