"""Command-line front end.

Every subcommand reads files named on the command line (bundled game names
work as a convenience where a game is expected), writes a deterministic
report to stdout, and exits 0.  Bad invocations exit 1, malformed input
files exit 2, and a failed --assert-class check exits 3.  ``dispatch`` is
the testable core: it never raises and never touches real stdio.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bundled
from .arena import Mode, ProgramLearner, render_match, render_report, run_match, run_tournament
from .classify import (
    ClassKind, classify, find_cycles, pure_nash, render_classification,
    render_cycles,
)
from .crosstable import ingest_crosstable
from .demos import run_all_demos
from .dsl import parse_learner_file
from .errors import (
    ComplementarityViolation, InvariantError, NotSymmetricError, ParseError,
    ShapeMismatchError,
)
from .game_core import GameTable, enumerate_game_count, parse_game, serialize_game
from .mixed import fictitious_play
from .series import Aggregator, compose_series

_BUILTIN_GAMES = {
    "rps": bundled.rps,
    "dice": bundled.dice,
    "pennies": bundled.pennies,
}

_DATA_ERRORS = (
    ParseError, InvariantError, NotSymmetricError, ShapeMismatchError,
    ComplementarityViolation,
)


class _UsageError(Exception):
    pass


class _DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _load_game(spec: str) -> GameTable:
    builder = _BUILTIN_GAMES.get(spec)
    if builder is not None and not Path(spec).exists():
        return builder()
    try:
        text = Path(spec).read_text()
    except OSError as exc:
        raise _DataError(f"cannot read game file {spec}: {exc}") from None
    return parse_game(text)


def _load_learner(path: str) -> ProgramLearner:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _DataError(f"cannot read learner file {path}: {exc}") from None
    name, program = parse_learner_file(text)
    return ProgramLearner(name, program)


def _build_parser() -> _Parser:
    parser = _Parser(prog="opencomp", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("classify", help="classify a game table")
    p.add_argument("--game", required=True)
    p.add_argument("--assert-class", choices=[k.value for k in ClassKind])

    p = sub.add_parser("cycles", help="list beats-cycles of a symmetric game")
    p.add_argument("--game", required=True)
    p.add_argument("--max-len", type=int, default=3)

    p = sub.add_parser("nash", help="list pure equilibrium cells")
    p.add_argument("--game", required=True)

    p = sub.add_parser("arena", help="run one match between two learner files")
    p.add_argument("--game", required=True)
    p.add_argument("--p1", required=True)
    p.add_argument("--p2", required=True)
    p.add_argument("--fuel", type=int, default=100_000)
    p.add_argument("--fuel2", type=int, default=None)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="strict")

    p = sub.add_parser("tournament", help="round robin over learner files")
    p.add_argument("--game", required=True)
    p.add_argument("--learners", required=True, nargs="+")
    p.add_argument("--fuel", type=int, default=100_000)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="strict")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("demo", help="run the no-champion demonstrations")
    p.add_argument("--fuel", type=int, default=3000)

    p = sub.add_parser("series", help="compose games into one aggregate game")
    p.add_argument("--game", required=True, action="append", dest="games")
    p.add_argument(
        "--aggregate", choices=[a.value for a in Aggregator], default="sum"
    )

    p = sub.add_parser("maxmin", help="approximate maxmin play by fictitious play")
    p.add_argument("--game", required=True)
    p.add_argument("--iters", type=int, default=100_000)
    p.add_argument("--tol", type=float, default=1e-2)

    p = sub.add_parser("crosstable", help="threshold a score crosstable into a game")
    p.add_argument("path")
    p.add_argument("--margin", type=float, default=0.0)
    p.add_argument("--name", default="crosstable")

    p = sub.add_parser("enumerate", help="count distinct tables of a given shape")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)

    return parser


def _cmd_classify(args) -> tuple[int, str, str]:
    game = _load_game(args.game)
    result = classify(game)
    text = render_classification(game, result)
    if args.assert_class and result.kind.value != args.assert_class:
        return 3, text, (
            f"classification is {result.kind.value}, "
            f"expected {args.assert_class}\n"
        )
    return 0, text, ""


def _cmd_cycles(args) -> tuple[int, str, str]:
    game = _load_game(args.game)
    cycles = find_cycles(game, max_len=args.max_len)
    return 0, render_cycles(game, cycles), ""


def _cmd_nash(args) -> tuple[int, str, str]:
    game = _load_game(args.game)
    cells = pure_nash(game)
    lines = [f"game={game.name}", f"pure_nash={len(cells)}"]
    for cell in cells:
        lines.append(f"cell {game.row_name(cell.i)} {game.col_name(cell.j)}")
    return 0, "\n".join(lines) + "\n", ""


def _cmd_arena(args) -> tuple[int, str, str]:
    game = _load_game(args.game)
    learner1 = _load_learner(args.p1)
    learner2 = _load_learner(args.p2)
    record = run_match(
        game, learner1, learner2,
        fuel=args.fuel, mode=args.mode, fuel2=args.fuel2,
    )
    play1 = str(record.side1.strategy) if record.side1.strategy else "-"
    play2 = str(record.side2.strategy) if record.side2.strategy else "-"
    lines = [
        f"game={game.name} fuel={args.fuel} mode={args.mode}",
        render_match(record),
        f"play1={play1} play2={play2}",
    ]
    return 0, "\n".join(lines) + "\n", ""


def _cmd_tournament(args) -> tuple[int, str, str]:
    game = _load_game(args.game)
    learners = [_load_learner(path) for path in args.learners]
    try:
        report = run_tournament(
            game, learners, fuel=args.fuel, mode=args.mode, workers=args.workers
        )
    except ValueError as exc:
        raise _DataError(str(exc)) from None
    return 0, render_report(report), ""


def _cmd_demo(args) -> tuple[int, str, str]:
    return 0, run_all_demos(fuel=args.fuel), ""


def _cmd_series(args) -> tuple[int, str, str]:
    games = [_load_game(spec) for spec in args.games]
    composed = compose_series(games, aggregator=args.aggregate)
    return 0, serialize_game(composed), ""


def _cmd_maxmin(args) -> tuple[int, str, str]:
    game = _load_game(args.game)
    result = fictitious_play(game, iterations=args.iters, tol=args.tol)
    p1 = ",".join(f"{w:.6f}" for w in result.p1.weights)
    p2 = ",".join(f"{w:.6f}" for w in result.p2.weights)
    line = (
        f"p1=<{p1}> p2=<{p2}> value={result.value:.6f} "
        f"exploitability={result.exploitability:.6f}"
    )
    return 0, line + "\n", ""


def _cmd_crosstable(args) -> tuple[int, str, str]:
    try:
        text = Path(args.path).read_text()
    except OSError as exc:
        raise _DataError(f"cannot read crosstable {args.path}: {exc}") from None
    try:
        game = ingest_crosstable(text, margin=args.margin, name=args.name)
    except ValueError as exc:
        raise _DataError(str(exc)) from None
    return 0, serialize_game(game), ""


def _cmd_enumerate(args) -> tuple[int, str, str]:
    if args.rows < 1 or args.cols < 1:
        raise _DataError("rows and cols must be positive")
    count = enumerate_game_count(args.rows, args.cols)
    return 0, f"games={count}\n", ""


_HANDLERS = {
    "classify": _cmd_classify,
    "cycles": _cmd_cycles,
    "nash": _cmd_nash,
    "arena": _cmd_arena,
    "tournament": _cmd_tournament,
    "demo": _cmd_demo,
    "series": _cmd_series,
    "maxmin": _cmd_maxmin,
    "crosstable": _cmd_crosstable,
    "enumerate": _cmd_enumerate,
}


def dispatch(argv: list[str]) -> tuple[int, str, str]:
    """Run one invocation; returns (exit code, stdout text, stderr text)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return 1, "", str(exc)
    if args.command is None:
        return 1, "", parser.format_usage()
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except _DataError as exc:
        return 2, "", f"error: {exc}\n"
    except _DATA_ERRORS as exc:
        return 2, "", f"error: {exc}\n"
    except ValueError as exc:
        return 2, "", f"error: {exc}\n"
    except Exception as exc:  # last resort, a CLI should not traceback
        return 2, "", f"error: {type(exc).__name__}: {exc}\n"


def main(argv: list[str] | None = None) -> None:
    code, out, err = dispatch(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    raise SystemExit(code)
