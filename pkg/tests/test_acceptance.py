"""Acceptance gate: one test per acceptance criterion, zero tolerance.

Every test prints a single PASS/FAIL line (visible with ``pytest -s`` or in
failure reports) and asserts the criterion at its stated bound.
"""

import random
import time

import pytest

from bwythoff import exact
from bwythoff.cli import main
from bwythoff.exact import PI, BeattyPair
from bwythoff.rules import Position, RuleSet, apply_move, legal_moves
from bwythoff.solver import best_move, solve_grid, solve_grid_naive
from bwythoff.verify import (
    check_complementarity,
    check_n_to_p,
    check_p_to_n,
    difference_pairs,
    formula_positions,
)

from conftest import FIXTURE_BETAS

SURD_NAMES = ["2+sqrt2", "1+sqrt3", "1+(1+sqrt13)/2"]
BACKEND_NAMES = ["e"] + SURD_NAMES


def _report(ok: bool, label: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'}: {label}")
    assert ok, label


def _formula_pset(spec, n_max):
    return set(formula_positions(BeattyPair.from_beta(spec), n_max).position_set)


def test_closed_form_pset_pi_2000():
    rules = RuleSet.variant(PI)
    t0 = time.monotonic()
    grid = solve_grid(rules, 2000)
    elapsed = time.monotonic() - t0
    equal = set(grid.p_positions) == _formula_pset(PI, 2000)
    _report(
        equal and elapsed <= 30.0,
        f"closed-form P-set equals solver P-set, beta=pi, n=2000 "
        f"(exact match; {elapsed:.2f}s <= 30s)",
    )


@pytest.mark.parametrize("name", BACKEND_NAMES)
def test_closed_form_pset_other_backends(name):
    spec = FIXTURE_BETAS[name]
    grid = solve_grid(RuleSet.variant(spec), 1000)
    equal = set(grid.p_positions) == _formula_pset(spec, 1000)
    _report(equal, f"closed-form P-set equals solver P-set, beta={name}, n=1000")


@pytest.mark.parametrize("name", sorted(FIXTURE_BETAS))
def test_no_move_between_formula_positions(name):
    spec = FIXTURE_BETAS[name]
    rules = RuleSet.variant(spec)
    fs = formula_positions(BeattyPair.from_beta(spec), 1000)
    violations = check_p_to_n(rules, fs)
    _report(violations == [], f"P->N: zero violations, beta={name}, n=1000")


@pytest.mark.parametrize("name", sorted(FIXTURE_BETAS))
def test_every_other_position_reaches_formula_set(name):
    spec = FIXTURE_BETAS[name]
    rules = RuleSet.variant(spec)
    fs = formula_positions(BeattyPair.from_beta(spec), 1000)
    violations = check_n_to_p(rules, fs, 1000)
    _report(violations == [], f"N->P (with boundary guard): zero violations, beta={name}, n=1000")


@pytest.mark.parametrize("name", sorted(FIXTURE_BETAS))
def test_four_difference_pairs_to_1e5(name):
    spec = FIXTURE_BETAS[name]
    pair = BeattyPair.from_beta(spec)
    n_max = exact.floor_mul(spec, 100_000)
    fs = formula_positions(pair, n_max)
    ok = len(fs.entries) == 100_001 and difference_pairs(fs).violations == ()
    _report(ok, f"consecutive differences stay in the four pairs, beta={name}, n<=1e5")


def test_all_four_difference_pairs_occur_for_pi_by_26():
    fs = formula_positions(BeattyPair.from_beta(PI), exact.floor_mul(PI, 26))
    hist = difference_pairs(fs).histogram
    _report(all(count >= 1 for count in hist.values()),
            f"all four difference pairs occur for beta=pi by n=26: {hist}")


@pytest.mark.parametrize("name", sorted(FIXTURE_BETAS))
def test_rayleigh_complementarity_1e5(name):
    pair = BeattyPair.from_beta(FIXTURE_BETAS[name])
    _report(check_complementarity(pair, 100_000),
            f"Beatty sequences partition 1..1e5, beta={name}")


def test_pi_concrete_values():
    k = exact.floor_mul(PI, 1)
    beta_prefix = exact.beatty_prefix(PI, 8)
    alpha_prefix = exact.beatty_prefix(exact.derive_alpha(PI), 8)
    ok = (
        k == 3
        and beta_prefix == [3, 6, 9, 12, 15, 18, 21, 25]
        and alpha_prefix == [1, 2, 4, 5, 7, 8, 10, 11]
    )
    _report(ok, f"k=floor(pi)=3, beta prefix {beta_prefix}, alpha prefix {alpha_prefix}")


@pytest.mark.parametrize(
    "label,rules",
    [(name, RuleSet.variant(spec)) for name, spec in sorted(FIXTURE_BETAS.items())]
    + [(f"invariant k={k}", RuleSet.invariant(k)) for k in (1, 2, 3, 5)],
)
def test_solver_cross_check_300(label, rules):
    equal = solve_grid(rules, 300) == solve_grid_naive(rules, 300)
    _report(equal, f"optimized and naive solvers agree, {label}, n=300")


def test_variant_rule_matters():
    variant = solve_grid_naive(RuleSet.variant(PI), 200)
    invariant = solve_grid_naive(RuleSet.invariant(3), 200)
    divergent = sorted(set(variant.p_positions).symmetric_difference(invariant.p_positions))
    ok = bool(divergent) and divergent[0] == (1, 3)
    _report(ok, f"variant beta=pi differs from invariant k=3 on 0..200; first cell {divergent[0]}")


def test_self_play_engine_beats_random():
    rules = RuleSet.variant(PI)
    grid = solve_grid(rules, 200)
    rng = random.Random(0)
    n_starts = [
        Position(x, y)
        for x in range(201)
        for y in range(201 - x)
        if not grid.is_p(x, y)
    ]
    wins = 0
    for start in rng.sample(n_starts, 100):
        pos, engine_turn, plies, budget = start, True, 0, start.x + start.y
        winner = None
        while winner is None:
            mv = best_move(rules, grid, pos) if engine_turn else rng.choice(legal_moves(rules, pos))
            pos = apply_move(pos, mv)
            plies += 1
            if plies > budget:
                break
            if pos.is_terminal:
                winner = "engine" if engine_turn else "random"
            engine_turn = not engine_turn
        if winner == "engine":
            wins += 1
    _report(wins == 100, f"engine wins {wins}/100 self-play games from N starts, x+y<=200")


def test_precision_safety_cli(capsys):
    code = main(["verify", "--beta", "dec:2.7", "--n", "500"])
    err = capsys.readouterr().err
    ok = code == 3 and "PrecisionExhausted" in err
    with capsys.disabled():
        _report(ok, "verify --beta dec:2.7 --n 500 exits 3 with PrecisionExhausted")
