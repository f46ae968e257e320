"""HTTP session service: create games, submit moves, query hints and grids.

Endpoints (JSON in, JSON out):

    POST /sessions                  create a game (201)
    GET  /sessions/{id}             session view
    POST /sessions/{id}/moves       human move; engine replies in the same call
    GET  /sessions/{id}/hint        winning move (if any) + P/N label
    GET  /grids?beta=...&n=...      compact P-position export

Error bodies are {"error": "<code>", "detail": "<message>"}; IllegalMove
responses additionally carry {"reason": ...} and use status 409.

Sessions live in memory, optionally mirrored to an append-only JSON-lines
snapshot for restart recovery.  Requests to one session are serialized by
a per-session lock; the grid cache is a small LRU shared across sessions.
"""

from __future__ import annotations

import json
import secrets
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .errors import (
    BWythoffError,
    CapacityExceeded,
    IllegalMove,
    NotYourTurn,
    ParseError,
    UnknownSession,
)
from .rules import Move, Position, RuleSet, apply_move, explain_illegal, is_restricted
from .rules import move_from_dict, move_to_dict
from .solver import OutcomeGrid, classify, engine_move, grid_json_dict, solve_grid
from .specstr import parse_beta_spec, render_beta_spec

__all__ = ["create_app", "GridCache", "SessionStore", "GameService"]

DEFAULT_GRID_CAPACITY = 2_000
DEFAULT_CACHE_SIZE = 8

_STATUS_CODES = {
    "ParseError": 400,
    "NotIrrational": 400,
    "BetaOutOfRange": 400,
    "UnknownSession": 404,
    "IllegalMove": 409,
    "NotYourTurn": 409,
    "CapacityExceeded": 413,
    "PrecisionExhausted": 422,
}


class GridCache:
    """LRU of solved grids keyed by (rendered beta spec, n_max)."""

    def __init__(self, grid_capacity: int = DEFAULT_GRID_CAPACITY, size: int = DEFAULT_CACHE_SIZE):
        self.grid_capacity = grid_capacity
        self.size = size
        self._grids: OrderedDict[tuple[str, int], OutcomeGrid] = OrderedDict()
        self._lock = threading.Lock()

    def get(self, rules: RuleSet, n_max: int) -> OutcomeGrid:
        if n_max > self.grid_capacity:
            raise CapacityExceeded(
                f"n_max {n_max} exceeds the service grid capacity {self.grid_capacity}"
            )
        key = (render_beta_spec(rules.beta), n_max)
        with self._lock:
            grid = self._grids.get(key)
            if grid is not None:
                self._grids.move_to_end(key)
                return grid
        grid = solve_grid(rules, n_max)
        with self._lock:
            self._grids[key] = grid
            self._grids.move_to_end(key)
            while len(self._grids) > self.size:
                self._grids.popitem(last=False)
        return grid


@dataclass
class HistoryEntry:
    mover: str  # "human" | "engine"
    move: Move
    position: Position  # position after the move


@dataclass
class Session:
    id: str
    rules: RuleSet
    beta_str: str
    engine_plays: str  # "first" | "second"
    start: Position
    grid: OutcomeGrid
    current: Position
    status: str = "in_progress"  # "in_progress" | "human_won" | "engine_won"
    history: list[HistoryEntry] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """In-memory sessions with an optional JSON-lines snapshot."""

    def __init__(self, snapshot_path: str | Path | None = None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._snapshot_path = Path(snapshot_path) if snapshot_path else None

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSession(f"no session {session_id!r}")
        return session

    def snapshot(self, session: Session) -> None:
        if self._snapshot_path is None:
            return
        record = {
            "id": session.id,
            "beta": session.beta_str,
            "engine_plays": session.engine_plays,
            "start": [session.start.x, session.start.y],
            "status": session.status,
            "history": [
                {"mover": h.mover, "move": move_to_dict(h.move)} for h in session.history
            ],
        }
        line = json.dumps(record, separators=(",", ":")) + "\n"
        with self._lock:
            with open(self._snapshot_path, "a", encoding="utf-8") as fh:
                fh.write(line)

    def restore(self, cache: GridCache) -> None:
        """Replay the snapshot file: the last record per id wins."""
        if self._snapshot_path is None or not self._snapshot_path.exists():
            return
        records: dict[str, dict] = {}
        with open(self._snapshot_path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    record = json.loads(line)
                    records[record["id"]] = record
        for record in records.values():
            rules = RuleSet.variant(parse_beta_spec(record["beta"]))
            start = Position(*record["start"])
            grid = cache.get(rules, max(start.x, start.y))
            session = Session(
                id=record["id"],
                rules=rules,
                beta_str=record["beta"],
                engine_plays=record["engine_plays"],
                start=start,
                grid=grid,
                current=start,
                status=record["status"],
            )
            for h in record["history"]:
                mv = move_from_dict(h["move"])
                session.current = apply_move(session.current, mv)
                session.history.append(HistoryEntry(h["mover"], mv, session.current))
            self.add(session)


class GameService:
    """Session operations, independent of the HTTP layer."""

    def __init__(
        self,
        grid_capacity: int = DEFAULT_GRID_CAPACITY,
        cache_size: int = DEFAULT_CACHE_SIZE,
        snapshot_path: str | Path | None = None,
    ):
        self.cache = GridCache(grid_capacity, cache_size)
        self.store = SessionStore(snapshot_path)
        self.store.restore(self.cache)

    def create_session(self, beta_spec: str, x: int, y: int, engine_plays: str) -> Session:
        if engine_plays not in ("first", "second"):
            raise ParseError("engine_plays must be 'first' or 'second'", 0)
        if x < 0 or y < 0:
            raise ParseError("pile sizes must be non-negative", 0)
        beta = parse_beta_spec(beta_spec)
        rules = RuleSet.variant(beta)
        start = Position(x, y)
        grid = self.cache.get(rules, max(x, y))
        session = Session(
            id=secrets.token_hex(16),
            rules=rules,
            beta_str=render_beta_spec(beta),
            engine_plays=engine_plays,
            start=start,
            grid=grid,
            current=start,
        )
        if start.is_terminal:
            # normal play: whoever is to move at (0,0) has already lost
            session.status = "human_won" if engine_plays == "first" else "engine_won"
        elif engine_plays == "first":
            self._engine_reply(session)
        self.store.add(session)
        self.store.snapshot(session)
        return session

    def submit_move(self, session_id: str, payload: dict) -> Session:
        session = self.store.get(session_id)
        with session.lock:
            if session.status != "in_progress":
                raise NotYourTurn("the game is already over")
            try:
                mv = move_from_dict(payload)
            except ValueError as exc:
                raise IllegalMove(str(exc), reason="out-of-bounds") from exc
            reason = explain_illegal(session.rules, session.current, mv)
            if reason is not None:
                raise IllegalMove(f"move rejected: {reason}", reason=reason)
            session.current = apply_move(session.current, mv)
            session.history.append(HistoryEntry("human", mv, session.current))
            if session.current.is_terminal:
                session.status = "human_won"
            else:
                self._engine_reply(session)
            self.store.snapshot(session)
            return session

    def hint(self, session_id: str) -> tuple[Optional[Move], str]:
        session = self.store.get(session_id)
        with session.lock:
            label = classify(session.grid, session.current).value
            mv = (
                None
                if session.current.is_terminal
                else _best_or_none(session.rules, session.grid, session.current)
            )
            return mv, label

    def grid_slice(self, beta_spec: str, n_max: int) -> dict:
        rules = RuleSet.variant(parse_beta_spec(beta_spec))
        return grid_json_dict(self.cache.get(rules, n_max))

    def _engine_reply(self, session: Session) -> None:
        mv = engine_move(session.rules, session.grid, session.current)
        assert mv is not None  # only None at (0,0), which is handled upstream
        session.current = apply_move(session.current, mv)
        session.history.append(HistoryEntry("engine", mv, session.current))
        if session.current.is_terminal:
            session.status = "engine_won"


def _best_or_none(rules: RuleSet, grid: OutcomeGrid, pos: Position) -> Optional[Move]:
    from .solver import best_move

    return best_move(rules, grid, pos)


def session_json(session: Session) -> dict:
    pos = session.current
    restricted = is_restricted(session.rules, pos)
    in_progress = session.status == "in_progress"
    return {
        "id": session.id,
        "beta": session.beta_str,
        "k": session.rules.k,
        "engine_plays": session.engine_plays,
        "position": {"x": pos.x, "y": pos.y},
        "status": session.status,
        "to_move": "human" if in_progress else None,
        "restricted": restricted,
        "legal_moves": {
            "nim_x_max": pos.x,
            "nim_y_max": pos.y,
            "diagonal_allowed": in_progress and not restricted and pos.x > 0 and pos.y > 0,
            "diagonal_width": session.rules.k,
        },
        "history": [
            {
                "mover": h.mover,
                "move": move_to_dict(h.move),
                "position": {"x": h.position.x, "y": h.position.y},
            }
            for h in session.history
        ],
    }


class CreateSessionBody(BaseModel):
    beta: str
    x: int = Field(ge=0)
    y: int = Field(ge=0)
    engine_plays: str


def _error_response(exc: BWythoffError) -> JSONResponse:
    code = type(exc).__name__
    body = {"error": code, "detail": str(exc)}
    if isinstance(exc, IllegalMove):
        body["reason"] = exc.reason
    return JSONResponse(status_code=_STATUS_CODES.get(code, 500), content=body)


def create_app(
    grid_capacity: int = DEFAULT_GRID_CAPACITY,
    cache_size: int = DEFAULT_CACHE_SIZE,
    snapshot_path: str | Path | None = None,
) -> FastAPI:
    service = GameService(grid_capacity, cache_size, snapshot_path)
    app = FastAPI(title="beta-Wythoff Nim service")
    app.state.service = service

    @app.exception_handler(BWythoffError)
    async def _handle_domain_error(request: Request, exc: BWythoffError) -> JSONResponse:
        return _error_response(exc)

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody) -> dict:
        session = service.create_session(body.beta, body.x, body.y, body.engine_plays)
        return session_json(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        return session_json(service.store.get(session_id))

    @app.post("/sessions/{session_id}/moves")
    def post_move(session_id: str, payload: dict) -> dict:
        return session_json(service.submit_move(session_id, payload))

    @app.get("/sessions/{session_id}/hint")
    def get_hint(session_id: str) -> dict:
        mv, label = service.hint(session_id)
        return {"move": None if mv is None else move_to_dict(mv), "classification": label}

    @app.get("/grids")
    def get_grid(beta: str, n: int) -> dict:
        return service.grid_slice(beta, n)

    return app
