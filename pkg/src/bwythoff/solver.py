"""Retrograde P/N classification over an N x N grid, plus move selection.

Two solvers produce bit-identical grids:

* ``solve_grid`` -- incremental-index solver.  Both games admit at most one
  P position per row and per column, so a single ``line`` array answers the
  nim-reachability queries in O(1); a per-difference record of the minimal
  P x-coordinate answers diagonal reachability in O(k).  Total O(n^2 * k).
* ``solve_grid_naive`` -- scans every move target per cell, O(n^3); kept
  as the independent cross-check.

Cells are processed along anti-diagonal wavefronts (x + y increasing);
every move strictly decreases x + y, so all dependencies are settled.
Only the x <= y half is walked; outcomes are mirrored, and the exchange
symmetry of the rules makes that lossless.  The variant restriction is
consulted only at the source cell.
"""

from __future__ import annotations

import enum
from typing import Iterator, Optional

from . import exact
from .errors import CapacityExceeded, OutOfBounds
from .rules import Diagonal, GameMode, Move, NimX, NimY, Position, RuleSet
from .rules import apply_move, is_restricted, legal_moves

__all__ = [
    "Outcome",
    "OutcomeGrid",
    "DEFAULT_CAPACITY",
    "solve_grid",
    "solve_grid_naive",
    "classify",
    "best_move",
    "engine_move",
    "grid_csv_lines",
    "grid_json_dict",
]

DEFAULT_CAPACITY = 20_000


class Outcome(enum.Enum):
    P = "P"
    N = "N"


class OutcomeGrid:
    """Dense P/N map over [0, n_max]^2: one bit per cell plus the sparse P list."""

    def __init__(self, n_max: int, rules: RuleSet, rows: list[int], p_positions: list[tuple[int, int]]):
        self.n_max = n_max
        self.rules = rules
        self._rows = rows  # _rows[x] bit y set <=> (x, y) is P
        self.p_positions = p_positions  # both orientations, lexicographic

    def is_p(self, x: int, y: int) -> bool:
        return bool((self._rows[x] >> y) & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OutcomeGrid):
            return NotImplemented
        return self.n_max == other.n_max and self._rows == other._rows

    def __repr__(self) -> str:
        return f"OutcomeGrid(n_max={self.n_max}, p_count={len(self.p_positions)})"


def _beta_flags(beta: exact.IrrationalSpec, n_max: int) -> bytearray:
    """flags[v] = 1 iff v = floor(n * beta) for some n >= 1, v <= n_max."""
    flags = bytearray(n_max + 1)
    n = 1
    while True:
        f = exact.floor_mul(beta, n)
        if f > n_max:
            return flags
        flags[f] = 1
        n += 1


def _guard_size(n_max: int, capacity: int) -> None:
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if n_max > capacity:
        raise CapacityExceeded(f"n_max {n_max} exceeds capacity {capacity}")


def _finish(n_max: int, rules: RuleSet, half_pairs: list[tuple[int, int]]) -> OutcomeGrid:
    rows = [0] * (n_max + 1)
    full: list[tuple[int, int]] = []
    for x, y in half_pairs:
        rows[x] |= 1 << y
        full.append((x, y))
        if x != y:
            rows[y] |= 1 << x
            full.append((y, x))
    full.sort()
    return OutcomeGrid(n_max, rules, rows, full)


def solve_grid(rules: RuleSet, n_max: int, capacity: int = DEFAULT_CAPACITY) -> OutcomeGrid:
    _guard_size(n_max, capacity)
    size = n_max + 1
    variant = rules.mode is GameMode.VARIANT
    in_beta = _beta_flags(rules.beta, n_max) if variant else bytearray(size)
    k = rules.k
    none = size  # sentinel: never < any coordinate in range
    line = [none] * size  # line[i] = partner coordinate of the P in row/col i
    diff_min = [none] * (2 * size)  # diff_min[d + n_max] = min x among P with x - y = d
    half_pairs: list[tuple[int, int]] = []

    for s in range(2 * n_max + 1):
        for x in range(max(0, s - n_max), s // 2 + 1):
            y = s - x
            if line[y] < x or line[x] < y:
                continue  # nim move to a P position exists
            if x > 0 and not (variant and (in_beta[x] or in_beta[y])):
                dd = x - y + n_max
                hit = False
                for j in range(max(0, dd - k + 1), min(2 * n_max, dd + k - 1) + 1):
                    m = diff_min[j]
                    if m < x and m - j + n_max < y:
                        hit = True
                        break
                if hit:
                    continue  # diagonal move to a P position exists
            # no move reaches a P position: this cell is P
            line[y] = x
            line[x] = y
            dd = x - y + n_max
            if x < diff_min[dd]:
                diff_min[dd] = x
            md = y - x + n_max
            if y < diff_min[md]:
                diff_min[md] = y
            half_pairs.append((x, y))
    return _finish(n_max, rules, half_pairs)


def solve_grid_naive(rules: RuleSet, n_max: int, capacity: int = DEFAULT_CAPACITY) -> OutcomeGrid:
    """Reference solver: per cell, scan every legal move target."""
    _guard_size(n_max, capacity)
    size = n_max + 1
    variant = rules.mode is GameMode.VARIANT
    in_beta = _beta_flags(rules.beta, n_max) if variant else bytearray(size)
    k = rules.k
    out = [bytearray(size) for _ in range(size)]  # out[x][y]
    tout = [bytearray(size) for _ in range(size)]  # tout[y][x]
    half_pairs: list[tuple[int, int]] = []

    for s in range(2 * n_max + 1):
        for x in range(max(0, s - n_max), min(s, n_max) + 1):
            y = s - x
            if tout[y].find(1, 0, x) >= 0:  # nim on the x pile
                continue
            row = out[x]
            if row.find(1, 0, y) >= 0:  # nim on the y pile
                continue
            if x > 0 and y > 0 and not (variant and (in_beta[x] or in_beta[y])):
                hit = False
                for a in range(1, x + 1):  # remove a from x, b from y, |a - b| < k
                    b_lo = max(1, a - k + 1)
                    b_hi = min(y, a + k - 1)
                    if b_lo <= b_hi and out[x - a].find(1, y - b_hi, y - b_lo + 1) >= 0:
                        hit = True
                        break
                if hit:
                    continue
            out[x][y] = 1
            tout[y][x] = 1
            if x <= y:
                half_pairs.append((x, y))
    return _finish(n_max, rules, half_pairs)


def _check_bounds(grid: OutcomeGrid, pos: Position) -> None:
    if pos.x > grid.n_max or pos.y > grid.n_max:
        raise OutOfBounds(f"({pos.x}, {pos.y}) outside solved grid 0..{grid.n_max}")


def classify(grid: OutcomeGrid, pos: Position) -> Outcome:
    _check_bounds(grid, pos)
    return Outcome.P if grid.is_p(pos.x, pos.y) else Outcome.N


def best_move(rules: RuleSet, grid: OutcomeGrid, pos: Position) -> Optional[Move]:
    """First move in deterministic order that reaches a P position; None from P."""
    _check_bounds(grid, pos)
    x, y = pos.x, pos.y
    if grid.is_p(x, y):
        return None
    for t in range(1, x + 1):
        if grid.is_p(x - t, y):
            return NimX(t)
    for t in range(1, y + 1):
        if grid.is_p(x, y - t):
            return NimY(t)
    if not is_restricted(rules, pos):
        k = rules.k
        for s in range(1, x + 1):
            for t in range(max(1, s - k + 1), min(y, s + k - 1) + 1):
                if grid.is_p(x - s, y - t):
                    return Diagonal(s, t)
    raise RuntimeError(f"N position ({x}, {y}) has no move to a P position")


def engine_move(rules: RuleSet, grid: OutcomeGrid, pos: Position) -> Optional[Move]:
    """best_move, or from a P position the legal move minimizing the remaining
    tokens (ties broken by deterministic move order).  None only at (0, 0)."""
    if pos.is_terminal:
        return None
    mv = best_move(rules, grid, pos)
    if mv is not None:
        return mv
    fallback: Optional[Move] = None
    fallback_sum = -1
    for m in legal_moves(rules, pos):
        after = apply_move(pos, m)
        remaining = after.x + after.y
        if fallback is None or remaining < fallback_sum:
            fallback, fallback_sum = m, remaining
    return fallback


def grid_csv_lines(grid: OutcomeGrid) -> Iterator[str]:
    yield "x,y,outcome"
    rows = grid._rows
    for x in range(grid.n_max + 1):
        bits = rows[x]
        for y in range(grid.n_max + 1):
            yield f"{x},{y},{'P' if (bits >> y) & 1 else 'N'}"


def grid_json_dict(grid: OutcomeGrid) -> dict:
    return {"n_max": grid.n_max, "p_positions": [list(p) for p in grid.p_positions]}
