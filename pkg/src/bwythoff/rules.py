"""Positions, moves, and legality for the two-pile take-away games.

Two game modes share the same move vocabulary:

* invariant mode -- plain k-Wythoff Nim: nim moves on either pile plus
  diagonal moves removing (s, t) with |s - t| < k, always available.
* variant mode -- k is forced to floor(beta); from any position where a
  coordinate equals floor(n * beta) for some n >= 1, diagonal moves are
  forbidden and only nim moves remain.  The restriction binds to the
  source position only, never to the destination.

Diagonal moves require s >= 1 and t >= 1; the degenerate diagonals with
s = 0 or t = 0 duplicate nim moves, so excluding them keeps the move
partition disjoint without changing any outcome.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import exact
from .errors import BetaOutOfRange, IllegalMove
from .exact import IrrationalSpec

__all__ = [
    "Position",
    "NimX",
    "NimY",
    "Diagonal",
    "Move",
    "GameMode",
    "RuleSet",
    "is_restricted",
    "legal_moves",
    "apply_move",
    "is_legal",
    "explain_illegal",
    "move_to_dict",
    "move_from_dict",
]


@dataclass(frozen=True, slots=True)
class Position:
    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x < 0 or self.y < 0:
            raise ValueError("pile sizes must be non-negative")

    @property
    def is_terminal(self) -> bool:
        return self.x == 0 and self.y == 0


@dataclass(frozen=True, slots=True)
class NimX:
    """Remove t tokens from the x pile."""

    t: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError("removal amount must be positive")


@dataclass(frozen=True, slots=True)
class NimY:
    """Remove t tokens from the y pile."""

    t: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError("removal amount must be positive")


@dataclass(frozen=True, slots=True)
class Diagonal:
    """Remove s from x and t from y, with |s - t| < k."""

    s: int
    t: int

    def __post_init__(self) -> None:
        if self.s < 1 or self.t < 1:
            raise ValueError("removal amounts must be positive")


Move = NimX | NimY | Diagonal


class GameMode(enum.Enum):
    INVARIANT = "invariant"
    VARIANT = "variant"


@dataclass(frozen=True)
class RuleSet:
    mode: GameMode
    k: int
    beta: IrrationalSpec | None = None

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if self.mode is GameMode.VARIANT:
            if self.beta is None:
                raise ValueError("variant mode requires beta")
            if not exact.proves_greater_than(self.beta, 2):
                raise BetaOutOfRange("variant mode requires provably beta > 2")
            if self.k != exact.floor_mul(self.beta, 1):
                raise ValueError("variant mode forces k = floor(beta)")

    @classmethod
    def variant(cls, beta: IrrationalSpec) -> "RuleSet":
        if not exact.proves_greater_than(beta, 2):
            raise BetaOutOfRange("variant mode requires provably beta > 2")
        return cls(mode=GameMode.VARIANT, k=exact.floor_mul(beta, 1), beta=beta)

    @classmethod
    def invariant(cls, k: int, beta: IrrationalSpec | None = None) -> "RuleSet":
        return cls(mode=GameMode.INVARIANT, k=k, beta=beta)


def is_restricted(rules: RuleSet, pos: Position) -> bool:
    """True iff diagonal moves are forbidden from pos (variant mode only)."""
    if rules.mode is not GameMode.VARIANT:
        return False
    beta = rules.beta
    return (
        exact.beatty_member(beta, pos.x) is not None
        or exact.beatty_member(beta, pos.y) is not None
    )


def legal_moves(rules: RuleSet, pos: Position) -> list[Move]:
    """All legal moves, deterministically ordered: NimX asc, NimY asc, Diagonal lex."""
    moves: list[Move] = []
    moves.extend(NimX(t) for t in range(1, pos.x + 1))
    moves.extend(NimY(t) for t in range(1, pos.y + 1))
    if not is_restricted(rules, pos):
        k = rules.k
        for s in range(1, pos.x + 1):
            for t in range(max(1, s - k + 1), min(pos.y, s + k - 1) + 1):
                moves.append(Diagonal(s, t))
    return moves


def apply_move(pos: Position, mv: Move) -> Position:
    """Apply without consulting the rule set; validates coordinate bounds only."""
    if isinstance(mv, NimX):
        if mv.t > pos.x:
            raise IllegalMove(f"cannot remove {mv.t} from pile of {pos.x}")
        return Position(pos.x - mv.t, pos.y)
    if isinstance(mv, NimY):
        if mv.t > pos.y:
            raise IllegalMove(f"cannot remove {mv.t} from pile of {pos.y}")
        return Position(pos.x, pos.y - mv.t)
    if mv.s > pos.x or mv.t > pos.y:
        raise IllegalMove(f"cannot remove ({mv.s}, {mv.t}) from ({pos.x}, {pos.y})")
    return Position(pos.x - mv.s, pos.y - mv.t)


def is_legal(rules: RuleSet, pos: Position, mv: Move) -> bool:
    """Membership in legal_moves(rules, pos) without materializing the list."""
    return explain_illegal(rules, pos, mv) is None


def explain_illegal(rules: RuleSet, pos: Position, mv: Move) -> str | None:
    """None when legal; otherwise one of the illegal-move reason codes."""
    if isinstance(mv, NimX):
        return None if mv.t <= pos.x else "out-of-bounds"
    if isinstance(mv, NimY):
        return None if mv.t <= pos.y else "out-of-bounds"
    if mv.s > pos.x or mv.t > pos.y:
        return "out-of-bounds"
    if abs(mv.s - mv.t) >= rules.k:
        return "diagonal-width"
    if is_restricted(rules, pos):
        return "restriction-active"
    return None


def move_to_dict(mv: Move) -> dict:
    """Wire form: {"type": "nim_x"|"nim_y"|"diagonal", "t": ..., "s": ...?}."""
    if isinstance(mv, NimX):
        return {"type": "nim_x", "t": mv.t}
    if isinstance(mv, NimY):
        return {"type": "nim_y", "t": mv.t}
    return {"type": "diagonal", "s": mv.s, "t": mv.t}


def move_from_dict(data: dict) -> Move:
    """Inverse of move_to_dict; raises ValueError on malformed payloads."""
    kind = data.get("type")
    t = data.get("t")
    if not isinstance(t, int) or isinstance(t, bool):
        raise ValueError("move requires an integer amount 't'")
    if kind == "nim_x":
        return NimX(t)
    if kind == "nim_y":
        return NimY(t)
    if kind == "diagonal":
        s = data.get("s")
        if not isinstance(s, int) or isinstance(s, bool):
            raise ValueError("diagonal move requires an integer amount 's'")
        return Diagonal(s, t)
    raise ValueError(f"unknown move type {kind!r}")
