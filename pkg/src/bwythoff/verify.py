"""Independent checks of the closed-form P-position characterization.

Two verification paths must agree and neither imports the other's logic:

1. the retrograde solver's P-set is compared cell-for-cell against the
   Beatty-pair formula set {(floor(n*alpha), floor(n*beta)) and mirror};
2. the formula set itself is checked directly against the move rules --
   no move connects two formula positions, and every other position has
   a move into the set.

A bug in the solver or in the exact layer breaks exactly one of the two
paths; both passing is the acceptance evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import exact
from .exact import BeattyPair, IrrationalSpec
from .rules import GameMode, Move, Position, RuleSet, apply_move, legal_moves, move_to_dict
from .solver import DEFAULT_CAPACITY, solve_grid
from .specstr import render_beta_spec

__all__ = [
    "FormulaSet",
    "PToNViolation",
    "NToPViolation",
    "DifferencePairStats",
    "VerificationReport",
    "formula_positions",
    "check_p_to_n",
    "check_n_to_p",
    "difference_pairs",
    "check_complementarity",
    "verify_theorem",
    "report_json_dict",
]

_PAIR_KEYS = ("(1,floor)", "(1,floor+1)", "(2,floor)", "(2,floor+1)")


@dataclass(frozen=True)
class FormulaSet:
    """Entries (n, a_n, b_n) = (n, floor(n*alpha), floor(n*beta)), b_n <= n_max."""

    pair: BeattyPair
    n_max: int
    entries: tuple[tuple[int, int, int], ...]

    @cached_property
    def position_set(self) -> frozenset[tuple[int, int]]:
        both = set()
        for _, a, b in self.entries:
            both.add((a, b))
            both.add((b, a))
        return frozenset(both)


@dataclass(frozen=True)
class PToNViolation:
    source: tuple[int, int]
    move: Move
    target: tuple[int, int]


@dataclass(frozen=True)
class NToPViolation:
    position: tuple[int, int]
    candidates: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class DifferencePairStats:
    histogram: dict[str, int]
    violations: tuple[tuple[int, tuple[int, int]], ...]  # (n, (delta_a, delta_b))


@dataclass
class VerificationReport:
    beta: IrrationalSpec
    n_max: int
    theorem_holds: bool
    first_discrepancy: tuple[int, int, str, str] | None
    p_to_n_violations: list[PToNViolation]
    n_to_p_violations: list[NToPViolation]
    difference_pairs: DifferencePairStats
    complementarity_holds: bool


def formula_positions(pair: BeattyPair, n_max: int) -> FormulaSet:
    """All (n, floor(n*alpha), floor(n*beta)) with floor(n*beta) <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    entries = [(0, 0, 0)]
    n = 1
    while True:
        b = exact.floor_mul(pair.beta, n)
        if b > n_max:
            break
        entries.append((n, exact.floor_mul(pair.alpha, n), b))
        n += 1
    return FormulaSet(pair=pair, n_max=n_max, entries=tuple(entries))


def _require_matching_rules(rules: RuleSet, fs: FormulaSet) -> None:
    if rules.mode is not GameMode.VARIANT or rules.beta != fs.pair.beta:
        raise ValueError("rules must be the variant game for the formula set's beta")


def check_p_to_n(rules: RuleSet, fs: FormulaSet) -> list[PToNViolation]:
    """Every legal move from every formula position must leave the set."""
    _require_matching_rules(rules, fs)
    pos_set = fs.position_set
    violations = []
    for x, y in sorted(pos_set):
        src = Position(x, y)
        for mv in legal_moves(rules, src):
            dst = apply_move(src, mv)
            if (dst.x, dst.y) in pos_set:
                violations.append(PToNViolation((x, y), mv, (dst.x, dst.y)))
    return violations


def check_n_to_p(rules: RuleSet, fs: FormulaSet, n_max: int) -> list[NToPViolation]:
    """Every non-formula position (inside the boundary guard) must have a
    legal move into the formula set.

    Guard: only positions with x, y <= n_max - (k + 1) are checked, so the
    truncation of the set at n_max can never masquerade as a violation.
    """
    _require_matching_rules(rules, fs)
    if n_max > fs.n_max:
        raise ValueError("formula set does not cover the requested range")
    k = rules.k
    size = n_max + 1
    limit = n_max - (k + 1)

    partner = [-1] * size  # partner[i] = other coordinate of the formula position in line i
    in_beta = bytearray(size)
    for n, a, b in fs.entries:
        if b <= n_max:
            partner[b] = a
            if n >= 1:
                in_beta[b] = 1
        if a <= n_max:
            partner[a] = b
    none = size
    fmin = [none] * (2 * size)  # fmin[d + n_max] = min x among formula positions, x - y = d
    for x, y in fs.position_set:
        if x > n_max or y > n_max:
            continue
        j = x - y + n_max
        if x < fmin[j]:
            fmin[j] = x

    violations = []
    for x in range(limit + 1):
        px = partner[x]
        for y in range(limit + 1):
            if px == y:
                continue  # formula position
            py = partner[y]
            if 0 <= py < x:  # nim move on the x pile to (py, y)
                continue
            if 0 <= px < y:  # nim move on the y pile to (x, px)
                continue
            if x > 0 and y > 0 and not (in_beta[x] or in_beta[y]):
                dd = x - y + n_max
                hit = False
                for j in range(max(0, dd - k + 1), min(2 * n_max, dd + k - 1) + 1):
                    m = fmin[j]
                    if m < x and m - j + n_max < y:
                        hit = True
                        break
                if hit:
                    continue
            candidates = []
            if py >= 0:
                candidates.append((py, y))
            if px >= 0:
                candidates.append((x, px))
            violations.append(NToPViolation((x, y), tuple(candidates)))
    return violations


def difference_pairs(fs: FormulaSet) -> DifferencePairStats:
    """Consecutive (delta a_n, delta b_n), classified against the four pairs
    (1|2, floor(beta)|floor(beta)+1)."""
    if len(fs.entries) < 2:
        raise ValueError("need at least two formula entries")
    kf = exact.floor_mul(fs.pair.beta, 1)
    hist = {key: 0 for key in _PAIR_KEYS}
    violations = []
    for i in range(1, len(fs.entries)):
        _, a0, b0 = fs.entries[i - 1]
        n, a1, b1 = fs.entries[i]
        da, db = a1 - a0, b1 - b0
        if da in (1, 2) and db in (kf, kf + 1):
            tag = "floor" if db == kf else "floor+1"
            hist[f"({da},{tag})"] += 1
        else:
            violations.append((n, (da, db)))
    return DifferencePairStats(histogram=hist, violations=tuple(violations))


def check_complementarity(pair: BeattyPair, limit: int) -> bool:
    """True iff the alpha- and beta-sequences partition {1, ..., limit}."""
    if limit < 1:
        raise ValueError("limit must be positive")
    seen = bytearray(limit + 1)
    for spec in (pair.alpha, pair.beta):
        n = 1
        while True:
            f = exact.floor_mul(spec, n)
            if f > limit:
                break
            if seen[f]:
                return False  # hit by both sequences
            seen[f] = 1
            n += 1
    return seen.find(0, 1) < 0  # no integer missed


def verify_theorem(rules: RuleSet, n_max: int, capacity: int = DEFAULT_CAPACITY) -> VerificationReport:
    """Solve the grid, build the formula set, and run every check."""
    if rules.mode is not GameMode.VARIANT:
        raise ValueError("verification requires variant rules")
    pair = BeattyPair.from_beta(rules.beta)
    grid = solve_grid(rules, n_max, capacity)
    fs = formula_positions(pair, n_max)

    solver_p = set(grid.p_positions)
    formula_p = set(fs.position_set)
    first = None
    if solver_p != formula_p:
        x, y = min(solver_p.symmetric_difference(formula_p))
        solver_out = "P" if (x, y) in solver_p else "N"
        formula_out = "P" if (x, y) in formula_p else "N"
        first = (x, y, solver_out, formula_out)

    ptn = check_p_to_n(rules, fs)
    ntp = check_n_to_p(rules, fs, n_max)
    dp = difference_pairs(fs) if len(fs.entries) >= 2 else DifferencePairStats(
        histogram={key: 0 for key in _PAIR_KEYS}, violations=()
    )
    comp = check_complementarity(pair, n_max) if n_max >= 1 else True

    holds = first is None and not ptn and not ntp and not dp.violations and comp
    return VerificationReport(
        beta=rules.beta,
        n_max=n_max,
        theorem_holds=holds,
        first_discrepancy=first,
        p_to_n_violations=ptn,
        n_to_p_violations=ntp,
        difference_pairs=dp,
        complementarity_holds=comp,
    )


def report_json_dict(report: VerificationReport) -> dict:
    """JSON-ready dict with deterministic key and list ordering."""
    first = report.first_discrepancy
    return {
        "beta": render_beta_spec(report.beta),
        "n_max": report.n_max,
        "theorem_holds": report.theorem_holds,
        "first_discrepancy": None
        if first is None
        else {"x": first[0], "y": first[1], "solver": first[2], "formula": first[3]},
        "p_to_n_violations": [
            {"source": list(v.source), "move": move_to_dict(v.move), "target": list(v.target)}
            for v in report.p_to_n_violations
        ],
        "n_to_p_violations": [
            {"position": list(v.position), "candidates": [list(c) for c in v.candidates]}
            for v in report.n_to_p_violations
        ],
        "difference_pairs": dict(report.difference_pairs.histogram),
        "difference_violations": [
            {"n": n, "delta": list(delta)} for n, delta in report.difference_pairs.violations
        ],
        "complementarity_holds": report.complementarity_holds,
    }
