"""Command-line front end.

Commands: ``solve`` (grid export), ``verify`` (full report), ``ptable``
(formula positions), ``play`` (interactive terminal game), ``serve``
(HTTP service).  Exit codes: 0 success, 1 verification failed, 2 usage or
parse error, 3 precision or capacity exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import IO

from . import exact, solver, verify
from .errors import (
    BetaOutOfRange,
    CapacityExceeded,
    NotIrrational,
    ParseError,
    PrecisionExhausted,
)
from .rules import Diagonal, Move, NimX, NimY, Position, RuleSet
from .rules import apply_move, explain_illegal, is_restricted, legal_moves
from .specstr import parse_beta_spec, render_beta_spec

__all__ = ["main", "parse_beta_spec", "render_beta_spec"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bwythoff", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, n_required: bool = False) -> None:
        p.add_argument("--beta", help="beta spec: pi | e | surd:(a+b*sqrt(d))/c | dec:I.F")
        p.add_argument("--n", type=_uint, required=n_required, help="grid bound n_max")
        p.add_argument("--k", type=_uint, help="diagonal width (invariant mode only)")
        p.add_argument("--invariant", action="store_true", help="play plain k-Wythoff Nim")
        p.add_argument("--format", choices=["csv", "json"], default="json")
        p.add_argument("--out", help="output path (default: standard output)")
        p.add_argument("--rng-seed", type=_uint, default=0, help="seed for randomized play")

    common(sub.add_parser("solve", help="solve a grid and export it"), n_required=True)
    common(sub.add_parser("verify", help="verify the closed-form P-set"), n_required=True)
    common(sub.add_parser("ptable", help="export formula positions n, a_n, b_n"), n_required=True)
    common(sub.add_parser("play", help="play against the engine in the terminal"))
    serve = sub.add_parser("serve", help="start the HTTP session service")
    common(serve)
    serve.add_argument("--port", type=_uint, default=8000)
    return parser


def _uint(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _rules_from_args(args: argparse.Namespace) -> RuleSet:
    if args.invariant:
        if args.k is None or args.k < 1:
            raise ParseError("--invariant requires --k >= 1", 0)
        beta = parse_beta_spec(args.beta) if args.beta else None
        return RuleSet.invariant(args.k, beta)
    if not args.beta:
        raise ParseError("--beta is required outside --invariant mode", 0)
    if args.k is not None:
        raise ParseError("--k is only valid with --invariant (variant forces k = floor(beta))", 0)
    return RuleSet.variant(parse_beta_spec(args.beta))


def _open_out(args: argparse.Namespace) -> IO[str]:
    if args.out:
        return open(args.out, "w", encoding="utf-8")
    return sys.stdout


def _emit_json(args: argparse.Namespace, payload: dict) -> None:
    out = _open_out(args)
    try:
        json.dump(payload, out, indent=2)
        out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _cmd_solve(args: argparse.Namespace) -> int:
    rules = _rules_from_args(args)
    grid = solver.solve_grid(rules, args.n)
    if args.format == "csv":
        out = _open_out(args)
        try:
            for line in solver.grid_csv_lines(grid):
                out.write(line + "\n")
        finally:
            if out is not sys.stdout:
                out.close()
    else:
        _emit_json(args, solver.grid_json_dict(grid))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.invariant:
        raise ParseError("verify requires the variant game (drop --invariant)", 0)
    rules = _rules_from_args(args)
    report = verify.verify_theorem(rules, args.n)
    _emit_json(args, verify.report_json_dict(report))
    return 0 if report.theorem_holds else 1


def _cmd_ptable(args: argparse.Namespace) -> int:
    if args.invariant:
        raise ParseError("ptable requires the variant game (drop --invariant)", 0)
    beta = parse_beta_spec(args.beta) if args.beta else None
    if beta is None:
        raise ParseError("--beta is required", 0)
    pair = exact.BeattyPair.from_beta(beta)
    fs = verify.formula_positions(pair, args.n)
    if args.format == "csv":
        out = _open_out(args)
        try:
            out.write("n,a_n,b_n\n")
            for n, a, b in fs.entries:
                out.write(f"{n},{a},{b}\n")
        finally:
            if out is not sys.stdout:
                out.close()
    else:
        _emit_json(
            args,
            {
                "beta": render_beta_spec(beta),
                "n_max": args.n,
                "entries": [[n, a, b] for n, a, b in fs.entries],
            },
        )
    return 0


def _move_str(mv: Move) -> str:
    if isinstance(mv, NimX):
        return f"take {mv.t} from x"
    if isinstance(mv, NimY):
        return f"take {mv.t} from y"
    return f"take {mv.s} from x and {mv.t} from y"


def _parse_play_line(line: str, rng: random.Random, rules: RuleSet, pos: Position) -> Move | str | None:
    """A move, 'quit', or None (couldn't parse). Amounts are 'dx dy'."""
    line = line.strip().lower()
    if line in ("q", "quit", "exit"):
        return "quit"
    if line == "random":
        options = legal_moves(rules, pos)
        return rng.choice(options) if options else None
    parts = line.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        return None
    dx, dy = int(parts[0]), int(parts[1])
    if dx > 0 and dy > 0:
        return Diagonal(dx, dy)
    if dx > 0:
        return NimX(dx)
    if dy > 0:
        return NimY(dy)
    return None


def _cmd_play(args: argparse.Namespace) -> int:
    rules = _rules_from_args(args)
    rng = random.Random(args.rng_seed)
    print(f"k = {rules.k}" + ("" if args.invariant else f", beta = {args.beta}"))
    try:
        line = input("start position (x y): ")
    except EOFError:
        return 0
    parts = line.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        print("expected two non-negative integers", file=sys.stderr)
        return 2
    pos = Position(int(parts[0]), int(parts[1]))
    grid = solver.solve_grid(rules, max(pos.x, pos.y))
    try:
        engine_first = input("engine moves first? [y/N]: ").strip().lower().startswith("y")
    except EOFError:
        return 0

    def engine_turn(pos: Position) -> Position:
        mv = solver.engine_move(rules, grid, pos)
        assert mv is not None
        after = apply_move(pos, mv)
        status = solver.classify(grid, after).value
        print(f"engine: {_move_str(mv)} -> ({after.x}, {after.y}) [{status}]")
        return after

    if engine_first and not pos.is_terminal:
        pos = engine_turn(pos)
        if pos.is_terminal:
            print("engine took the last token and wins.")
            return 0
    while True:
        flag = " (restricted: nim moves only)" if is_restricted(rules, pos) else ""
        print(f"position ({pos.x}, {pos.y}){flag}")
        if pos.is_terminal:
            print("no moves remain; you lose.")
            return 0
        try:
            line = input("your move (dx dy | random | q): ")
        except EOFError:
            return 0
        mv = _parse_play_line(line, rng, rules, pos)
        if mv == "quit":
            return 0
        if mv is None:
            print("enter the amounts to remove, e.g. '2 0' or '1 1'", file=sys.stderr)
            continue
        reason = explain_illegal(rules, pos, mv)
        if reason is not None:
            print(f"illegal move ({reason})", file=sys.stderr)
            continue
        pos = apply_move(pos, mv)
        if pos.is_terminal:
            print("you took the last token and win!")
            return 0
        pos = engine_turn(pos)
        if pos.is_terminal:
            print("engine took the last token and wins.")
            return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import pathlib

    import uvicorn

    from .api import create_app

    app = create_app()
    # host the browser client at /ui when a built frontend sits next to the cwd
    ui_dir = pathlib.Path.cwd() / "frontend"
    if (ui_dir / "index.html").is_file():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")
    uvicorn.run(app, host="127.0.0.1", port=args.port)
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "ptable": _cmd_ptable,
    "play": _cmd_play,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, NotIrrational, BetaOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PrecisionExhausted, CapacityExceeded) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
