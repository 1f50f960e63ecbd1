"""Running learners against each other and adjudicating the results.

A learner publishes source text and, when asked, evaluates to a strategy
for its seat.  The arena runs both sides with the rival's published source
visible, then scores the pair of evaluation outcomes.  Non-halting rivals
can still lose: a learner that halts beats one whose non-halting was proven,
and in deadline mode it also beats one that merely ran out of fuel.  In
strict mode running out of fuel is never punished by itself, which is what
leaves room for mutually-simulating programs to force a standoff.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .dsl import (
    DEFAULT_MEMORY_CAP, EvalEnv, EvalKind, EvalResult, StrategyProgram,
    evaluate, parse_program,
)
from .errors import RuntimeFault
from .game_core import GameTable, Side, outcome


class SideOutcome(str, Enum):
    HALTED = "Halted"
    FUEL_EXHAUSTED = "FuelExhausted"
    PROVEN_NONHALTING = "ProvenNonHalting"
    RUNTIME_FAULT = "RuntimeFault"
    INVALID_STRATEGY = "InvalidStrategy"


class MatchResult(str, Enum):
    WIN1 = "Win1"
    WIN2 = "Win2"
    DRAW = "Draw"
    UNDECIDED = "Undecided"


class Mode(str, Enum):
    STRICT = "strict"
    DEADLINE = "deadline"


class Learner:
    """Anything that can publish source text and play a seat.

    ``source`` is what opponents get to simulate.  ``play`` receives the
    full environment (game, seat, both sources, fuel) and returns an
    evaluation result; it may raise RuntimeFault.  Subclasses are free to
    compute however they like, the published text does not have to be
    runnable.
    """

    name: str
    source: str

    def play(self, env: EvalEnv) -> EvalResult:
        raise NotImplementedError


class ProgramLearner(Learner):
    """A learner that is exactly its program: plays by evaluating it."""

    def __init__(self, name: str, program: StrategyProgram | str):
        if isinstance(program, str):
            program = parse_program(program)
        self.name = name
        self.program = program
        self.source = program.source

    def play(self, env: EvalEnv) -> EvalResult:
        return evaluate(self.program, env)

    def __repr__(self):
        return f"ProgramLearner({self.name!r})"


@dataclass(frozen=True)
class SideRecord:
    outcome: SideOutcome
    strategy: int | None
    witness: tuple[int, int] | None
    fuel_used: int


@dataclass(frozen=True)
class MatchRecord:
    learner1: str
    learner2: str
    side1: SideRecord
    side2: SideRecord
    result: MatchResult


def _run_side(learner: Learner, env: EvalEnv) -> SideRecord:
    try:
        res = learner.play(env)
    except RuntimeFault as fault:
        return SideRecord(SideOutcome.RUNTIME_FAULT, None, None, fault.fuel_used)
    if res.kind is EvalKind.HALTED:
        limit = env.game.side_count(env.side)
        if not isinstance(res.strategy, int) or not 1 <= res.strategy <= limit:
            return SideRecord(
                SideOutcome.INVALID_STRATEGY, None, res.witness, res.fuel_used
            )
        return SideRecord(SideOutcome.HALTED, res.strategy, res.witness, res.fuel_used)
    if res.kind is EvalKind.FUEL_EXHAUSTED:
        return SideRecord(SideOutcome.FUEL_EXHAUSTED, None, res.witness, res.fuel_used)
    return SideRecord(
        SideOutcome.PROVEN_NONHALTING, None, res.witness, res.fuel_used
    )


_BAD = frozenset({SideOutcome.RUNTIME_FAULT, SideOutcome.INVALID_STRATEGY})


def adjudicate(
    game: GameTable,
    side1: SideRecord,
    side2: SideRecord,
    mode: Mode = Mode.STRICT,
) -> MatchResult:
    """Score one match from the two per-side outcomes.  Total: every
    combination of outcomes maps to exactly one result.

    Faults and out-of-range strategies lose to anything that did not fault;
    two of them cancel out.  Two halted strategies are scored by the table.
    Halting beats proven non-halting in both modes; it beats plain fuel
    exhaustion only under deadline rules.  Everything else is undecided.
    """
    tag1, tag2 = side1.outcome, side2.outcome
    if tag1 in _BAD and tag2 in _BAD:
        return MatchResult.UNDECIDED
    if tag1 in _BAD:
        return MatchResult.WIN2
    if tag2 in _BAD:
        return MatchResult.WIN1
    if tag1 is SideOutcome.HALTED and tag2 is SideOutcome.HALTED:
        value = outcome(game, side1.strategy, side2.strategy)
        if value > 0:
            return MatchResult.WIN1
        if value < 0:
            return MatchResult.WIN2
        return MatchResult.DRAW
    if tag1 is SideOutcome.HALTED:
        if tag2 is SideOutcome.PROVEN_NONHALTING or mode is Mode.DEADLINE:
            return MatchResult.WIN1
        return MatchResult.UNDECIDED
    if tag2 is SideOutcome.HALTED:
        if tag1 is SideOutcome.PROVEN_NONHALTING or mode is Mode.DEADLINE:
            return MatchResult.WIN2
        return MatchResult.UNDECIDED
    return MatchResult.UNDECIDED


def run_match(
    game: GameTable,
    learner1: Learner,
    learner2: Learner,
    fuel: int = 100_000,
    mode: Mode | str = Mode.STRICT,
    fuel2: int | None = None,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> MatchRecord:
    """Play one match: learner1 takes the row seat, learner2 the column seat.

    ``fuel2`` optionally grants the column seat a different budget, for
    handicap experiments; by default both sides get ``fuel``.
    """
    mode = Mode(mode)
    env1 = EvalEnv(
        game=game, side=Side.ROW,
        opponent_source=learner2.source, self_source=learner1.source,
        fuel=fuel, memory_cap=memory_cap,
    )
    env2 = EvalEnv(
        game=game, side=Side.COL,
        opponent_source=learner1.source, self_source=learner2.source,
        fuel=fuel if fuel2 is None else fuel2, memory_cap=memory_cap,
    )
    side1 = _run_side(learner1, env1)
    side2 = _run_side(learner2, env2)
    result = adjudicate(game, side1, side2, mode)
    return MatchRecord(
        learner1=learner1.name, learner2=learner2.name,
        side1=side1, side2=side2, result=result,
    )


@dataclass(frozen=True)
class TournamentReport:
    game_name: str
    learner_names: tuple[str, ...]
    fuel: int
    mode: Mode
    records: tuple[MatchRecord, ...]
    tallies: dict  # name -> dict(wins, draws, losses, undecided)
    universal_winner: str | None


def run_tournament(
    game: GameTable,
    learners: list[Learner],
    fuel: int = 100_000,
    mode: Mode | str = Mode.STRICT,
    workers: int = 1,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> TournamentReport:
    """Round robin over every pair of distinct learners.

    On a symmetric game each unordered pair meets once, learner order
    deciding seats; otherwise both seatings are played.  The report is
    deterministic for a given input, whatever the worker count: matches are
    assembled in pair order, and each match is itself deterministic.

    The universal winner, if any, is the learner that won every match it
    appeared in (draws, undecided results, or any loss disqualify).  With
    fewer than two learners there are no matches and no winner.
    """
    mode = Mode(mode)
    names = [learner.name for learner in learners]
    if len(set(names)) != len(names):
        raise ValueError("learner names must be unique")

    if game.symmetric_flag:
        pairs = [
            (i, j)
            for i in range(len(learners))
            for j in range(i + 1, len(learners))
        ]
    else:
        pairs = [
            (i, j)
            for i in range(len(learners))
            for j in range(len(learners))
            if i != j
        ]

    def play_pair(pair: tuple[int, int]) -> MatchRecord:
        i, j = pair
        return run_match(
            game, learners[i], learners[j],
            fuel=fuel, mode=mode, memory_cap=memory_cap,
        )

    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(play_pair, pairs))
    else:
        records = [play_pair(pair) for pair in pairs]

    tallies = {
        name: {"wins": 0, "draws": 0, "losses": 0, "undecided": 0}
        for name in names
    }
    clean_sweep = {name: True for name in names}
    played = {name: 0 for name in names}
    for record in records:
        played[record.learner1] += 1
        played[record.learner2] += 1
        if record.result is MatchResult.WIN1:
            tallies[record.learner1]["wins"] += 1
            tallies[record.learner2]["losses"] += 1
            clean_sweep[record.learner2] = False
        elif record.result is MatchResult.WIN2:
            tallies[record.learner2]["wins"] += 1
            tallies[record.learner1]["losses"] += 1
            clean_sweep[record.learner1] = False
        elif record.result is MatchResult.DRAW:
            tallies[record.learner1]["draws"] += 1
            tallies[record.learner2]["draws"] += 1
            clean_sweep[record.learner1] = False
            clean_sweep[record.learner2] = False
        else:
            tallies[record.learner1]["undecided"] += 1
            tallies[record.learner2]["undecided"] += 1
            clean_sweep[record.learner1] = False
            clean_sweep[record.learner2] = False

    universal = None
    for name in names:
        if played[name] > 0 and clean_sweep[name]:
            universal = name
            break

    return TournamentReport(
        game_name=game.name,
        learner_names=tuple(names),
        fuel=fuel,
        mode=mode,
        records=tuple(records),
        tallies=tallies,
        universal_winner=universal,
    )


def render_match(record: MatchRecord) -> str:
    return (
        f"match {record.learner1} vs {record.learner2}: "
        f"eval1={record.side1.outcome.value} eval2={record.side2.outcome.value} "
        f"result={record.result.value}"
    )


def render_report(report: TournamentReport) -> str:
    lines = [
        f"tournament game={report.game_name} learners={len(report.learner_names)} "
        f"fuel={report.fuel} mode={report.mode.value}"
    ]
    for record in report.records:
        lines.append(render_match(record))
    for name in report.learner_names:
        tally = report.tallies[name]
        lines.append(
            f"tally {name} wins={tally['wins']} draws={tally['draws']} "
            f"losses={tally['losses']} undecided={tally['undecided']}"
        )
    winner = report.universal_winner if report.universal_winner else "none"
    lines.append(f"universal_winner={winner}")
    return "\n".join(lines) + "\n"
