"""A tiny deterministic language for competition strategies.

Programs compute a 1-based strategy index for one side of a game.  The
interesting primitive is ``sim``, which runs another program (usually the
opponent's published source) inside the caller's own fuel budget and reports
whether it halted and with what index.  That is enough to express the
classic counter-strategy: simulate the rival, then best-respond to whatever
it would play.

Grammar::

    prog   := expr
    expr   := "const" INT
            | "bestresp" "(" expr ")"
            | "sim" "(" src "," src "," budget ")"
            | "match" expr "{" "halted" "(" ID ")" "=>" expr
                            "|" "exhausted" "=>" expr "}"
            | "if" expr cmp expr "then" expr "else" expr
            | ID | INT | "loop" | "grow"
    src    := "opp" | "self" | QUOTED_PROGRAM
    budget := "rest" | INT
    cmp    := "==" | "<" | ">"

Evaluation is small-step and deterministic; every step costs one unit of
fuel from a single shared pool.  ``sim(target, adversary, budget)`` runs
``target`` with ``adversary`` as its opponent.  An integer budget caps the
child's draw on the pool; ``rest`` places no cap beyond the fuel that is
actually left.  A consequence worth spelling out: a program can only observe
``exhausted`` from a child whose budget was an explicit integer (or whose
non-halting was proven early).  A child simulated with ``rest`` that runs
out of fuel has by definition drained the caller's own pool, so the caller
exhausts too.  This is what makes halting results stable under fuel
increases, and what makes two mutual simulators burn all their fuel rather
than bottom out.

While a program runs, every machine state is fingerprinted (full control,
continuation and bindings, fuel counters excluded).  If a state repeats, the
run can never halt, with or without fuel limits, and evaluation stops early
with a two-step witness.  The check is sound here because the language has
no in-level recursion: a state can only recur at the ``loop`` primitive,
whose behavior does not depend on remaining fuel.  ``grow`` enlarges its
state every step, so it defeats the check within any finite state-size cap
and simply runs until fuel is gone.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .classify import best_response
from .errors import ParseError, RuntimeFault
from .game_core import GameTable, Side

DEFAULT_MEMORY_CAP = 65536

_KEYWORDS = {
    "const", "bestresp", "sim", "match", "halted", "exhausted",
    "if", "then", "else", "loop", "grow", "opp", "self", "rest",
}


# --------------------------------------------------------------------------
# Syntax tree


@dataclass(frozen=True)
class Literal:
    value: int
    bare: bool = False  # written as a plain integer rather than "const n"


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BestResp:
    arg: "Expr"


@dataclass(frozen=True)
class SrcOpp:
    pass


@dataclass(frozen=True)
class SrcSelf:
    pass


@dataclass(frozen=True)
class SrcQuoted:
    program: "Expr"


Src = Union[SrcOpp, SrcSelf, SrcQuoted]


@dataclass(frozen=True)
class Sim:
    target: Src
    adversary: Src
    budget: int | str  # non-negative int, or the string "rest"


@dataclass(frozen=True)
class Match:
    scrutinee: "Expr"
    var: str
    on_halted: "Expr"
    on_exhausted: "Expr"


@dataclass(frozen=True)
class If:
    left: "Expr"
    op: str  # "==", "<" or ">"
    right: "Expr"
    then: "Expr"
    otherwise: "Expr"


@dataclass(frozen=True)
class Loop:
    pass


@dataclass(frozen=True)
class Grow:
    pass


Expr = Union[Literal, Var, BestResp, Sim, Match, If, Loop, Grow]


@dataclass(frozen=True)
class StrategyProgram:
    """A parsed program together with the exact text it came from."""

    source: str
    ast: Expr


# --------------------------------------------------------------------------
# Lexer


@dataclass(frozen=True)
class _Token:
    kind: str  # "kw", "id", "int", "string", "sym", "eof"
    value: str
    line: int
    col: int


_SYMBOLS = ("=>", "==", "(", ")", "{", "}", ",", "|", "<", ">")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == '"':
            start_line, start_col = line, col
            i += 1
            col += 1
            buf = []
            closed = False
            while i < n:
                ch = text[i]
                if ch == "\\":
                    if i + 1 >= n or text[i + 1] not in ('"', "\\"):
                        raise ParseError(
                            "bad escape in quoted program", line=line, column=col
                        )
                    buf.append(text[i + 1])
                    i += 2
                    col += 2
                    continue
                if ch == '"':
                    closed = True
                    i += 1
                    col += 1
                    break
                if ch == "\n":
                    line += 1
                    col = 0
                buf.append(ch)
                i += 1
                col += 1
            if not closed:
                raise ParseError(
                    "unterminated quoted program", line=start_line, column=start_col
                )
            tokens.append(_Token("string", "".join(buf), start_line, start_col))
            continue
        matched = None
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                matched = sym
                break
        if matched:
            tokens.append(_Token("sym", matched, line, col))
            i += len(matched)
            col += len(matched)
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = "kw" if word in _KEYWORDS else "id"
            tokens.append(_Token(kind, word, line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line=line, column=col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


# --------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, line=tok.line, column=tok.col)

    def expect_sym(self, sym: str) -> None:
        tok = self.next()
        if tok.kind != "sym" or tok.value != sym:
            raise ParseError(
                f"expected '{sym}', got '{tok.value or 'end of input'}'",
                line=tok.line, column=tok.col,
            )

    def expect_kw(self, word: str) -> None:
        tok = self.next()
        if tok.kind != "kw" or tok.value != word:
            raise ParseError(
                f"expected '{word}', got '{tok.value or 'end of input'}'",
                line=tok.line, column=tok.col,
            )

    def expr(self) -> Expr:
        tok = self.peek()
        if tok.kind == "kw":
            if tok.value == "const":
                self.next()
                num = self.next()
                if num.kind != "int":
                    raise ParseError(
                        "const needs an integer", line=num.line, column=num.col
                    )
                return Literal(int(num.value), bare=False)
            if tok.value == "bestresp":
                self.next()
                self.expect_sym("(")
                arg = self.expr()
                self.expect_sym(")")
                return BestResp(arg)
            if tok.value == "sim":
                self.next()
                self.expect_sym("(")
                target = self.src()
                self.expect_sym(",")
                adversary = self.src()
                self.expect_sym(",")
                budget = self.budget()
                self.expect_sym(")")
                return Sim(target, adversary, budget)
            if tok.value == "match":
                self.next()
                scrutinee = self.expr()
                self.expect_sym("{")
                self.expect_kw("halted")
                self.expect_sym("(")
                var = self.next()
                if var.kind != "id":
                    raise ParseError(
                        "halted pattern needs an identifier",
                        line=var.line, column=var.col,
                    )
                self.expect_sym(")")
                self.expect_sym("=>")
                on_halted = self.expr()
                self.expect_sym("|")
                self.expect_kw("exhausted")
                self.expect_sym("=>")
                on_exhausted = self.expr()
                self.expect_sym("}")
                return Match(scrutinee, var.value, on_halted, on_exhausted)
            if tok.value == "if":
                self.next()
                left = self.expr()
                op = self.next()
                if op.kind != "sym" or op.value not in ("==", "<", ">"):
                    raise ParseError(
                        "expected a comparison (==, < or >)",
                        line=op.line, column=op.col,
                    )
                right = self.expr()
                self.expect_kw("then")
                then = self.expr()
                self.expect_kw("else")
                otherwise = self.expr()
                return If(left, op.value, right, then, otherwise)
            if tok.value == "loop":
                self.next()
                return Loop()
            if tok.value == "grow":
                self.next()
                return Grow()
            raise self.fail(f"keyword '{tok.value}' cannot start an expression")
        if tok.kind == "int":
            self.next()
            return Literal(int(tok.value), bare=True)
        if tok.kind == "id":
            self.next()
            return Var(tok.value)
        raise self.fail(
            f"expected an expression, got '{tok.value or 'end of input'}'"
        )

    def src(self) -> Src:
        tok = self.peek()
        if tok.kind == "kw" and tok.value == "opp":
            self.next()
            return SrcOpp()
        if tok.kind == "kw" and tok.value == "self":
            self.next()
            return SrcSelf()
        if tok.kind == "string":
            self.next()
            try:
                inner = parse_program(tok.value)
            except ParseError as exc:
                raise ParseError(
                    f"inside quoted program: {exc}", line=tok.line, column=tok.col
                ) from None
            return SrcQuoted(inner.ast)
        raise self.fail("expected opp, self or a quoted program")

    def budget(self) -> int | str:
        tok = self.next()
        if tok.kind == "kw" and tok.value == "rest":
            return "rest"
        if tok.kind == "int":
            return int(tok.value)
        raise ParseError(
            "budget must be 'rest' or a non-negative integer",
            line=tok.line, column=tok.col,
        )


def parse_program(text: str) -> StrategyProgram:
    """Parse ``text`` into a program; errors carry line and column."""
    parser = _Parser(_tokenize(text))
    tree = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "eof":
        raise ParseError(
            f"trailing content '{trailing.value}' after program",
            line=trailing.line, column=trailing.col,
        )
    return StrategyProgram(source=text, ast=tree)


def parse_learner_file(text: str) -> tuple[str, StrategyProgram]:
    """Parse a learner file: first line ``learner <name>``, rest the program."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty learner file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "learner":
        raise ParseError("first line must be 'learner <name>'", line=1)
    body = "\n".join(lines[1:])
    if not body.strip():
        raise ParseError("learner file has no program text", line=2)
    return header[1], parse_program(body)


def pretty(node: Expr | Src) -> str:
    """Canonical text for a syntax tree (single spaces, stable layout).

    Parsing the output reproduces the tree exactly.
    """
    if isinstance(node, Literal):
        return str(node.value) if node.bare else f"const {node.value}"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, BestResp):
        return f"bestresp({pretty(node.arg)})"
    if isinstance(node, Sim):
        budget = node.budget if isinstance(node.budget, str) else str(node.budget)
        return f"sim({pretty(node.target)}, {pretty(node.adversary)}, {budget})"
    if isinstance(node, Match):
        return (
            f"match {pretty(node.scrutinee)} {{ halted({node.var}) => "
            f"{pretty(node.on_halted)} | exhausted => {pretty(node.on_exhausted)} }}"
        )
    if isinstance(node, If):
        return (
            f"if {pretty(node.left)} {node.op} {pretty(node.right)} "
            f"then {pretty(node.then)} else {pretty(node.otherwise)}"
        )
    if isinstance(node, Loop):
        return "loop"
    if isinstance(node, Grow):
        return "grow"
    if isinstance(node, SrcOpp):
        return "opp"
    if isinstance(node, SrcSelf):
        return "self"
    if isinstance(node, SrcQuoted):
        inner = pretty(node.program).replace("\\", "\\\\").replace('"', '\\"')
        return f'"{inner}"'
    raise TypeError(f"not a syntax node: {node!r}")


# --------------------------------------------------------------------------
# Evaluation


class EvalKind(str, Enum):
    HALTED = "Halted"
    FUEL_EXHAUSTED = "FuelExhausted"
    PROVEN_NONHALTING = "ProvenNonHalting"


@dataclass(frozen=True)
class EvalEnv:
    """Everything one evaluation can see: the game, its seat, both sources."""

    game: GameTable
    side: Side
    opponent_source: str
    self_source: str
    fuel: int
    memory_cap: int = DEFAULT_MEMORY_CAP

    def __post_init__(self):
        if self.fuel < 0:
            raise ValueError("fuel must be non-negative")
        if self.memory_cap < 1:
            raise ValueError("memory_cap must be positive")


@dataclass(frozen=True)
class EvalResult:
    """Outcome of one evaluation.

    ``strategy`` is set for Halted results.  ``witness`` is the pair of step
    counters with identical machine state for ProvenNonHalting results (a
    host-level learner may also attach an opponent non-halting witness to a
    Halted result).  ``fuel_used`` counts every step, nested simulations
    included, and never exceeds the fuel granted.
    """

    kind: EvalKind
    strategy: int | None = None
    witness: tuple[int, int] | None = None
    fuel_used: int = 0


@dataclass(frozen=True)
class SimOut:
    """What a program sees of a finished simulation: halted(k) or exhausted.

    Child runs whose non-halting was proven, or that faulted, or whose source
    did not even parse, all surface as ``exhausted``; the language
    deliberately cannot tell these apart.
    """

    tag: str  # "halted" | "exhausted"
    value: int | None = None


@dataclass(frozen=True)
class _KBestResp:
    pass


@dataclass(frozen=True)
class _KMatch:
    var: str
    on_halted: Expr
    on_exhausted: Expr
    bindings: tuple


@dataclass(frozen=True)
class _KIfLeft:
    op: str
    right: Expr
    then: Expr
    otherwise: Expr
    bindings: tuple


@dataclass(frozen=True)
class _KIfRight:
    op: str
    left_value: int
    then: Expr
    otherwise: Expr
    bindings: tuple


class _FaultSignal(Exception):
    pass


class _Level:
    """One live evaluation: the top program or a nested simulation."""

    __slots__ = (
        "control", "kont", "side", "opp_source", "self_source",
        "limit", "start_g", "seen",
    )

    def __init__(self, control, side, opp_source, self_source, limit, start_g):
        self.control = control
        self.kont: tuple = ()
        self.side = side
        self.opp_source = opp_source
        self.self_source = self_source
        self.limit = limit          # absolute step count this level may reach
        self.start_g = start_g
        self.seen: dict = {}


def _est_size(obj, memo: dict) -> int:
    """Rough byte size of a state component, used for the prover's cap."""
    if isinstance(obj, bool) or obj is None:
        return 16
    if isinstance(obj, int):
        return 28
    if isinstance(obj, str):
        return 49 + len(obj)
    if isinstance(obj, tuple):
        return 56 + 8 * len(obj) + sum(_est_size(x, memo) for x in obj)
    # Syntax nodes, frames, SimOut: immutable, so memoize by identity.
    cached = memo.get(id(obj))
    if cached is not None:
        return cached
    fields = getattr(obj, "__dataclass_fields__", None)
    if fields is None:
        return 64
    size = 48 + sum(_est_size(getattr(obj, f), memo) for f in fields)
    memo[id(obj)] = size
    return size


def _lookup(bindings: tuple, name: str):
    for key, value in reversed(bindings):
        if key == name:
            return value
    raise _FaultSignal(f"unbound identifier '{name}'")


def evaluate(program: StrategyProgram | str, env: EvalEnv) -> EvalResult:
    """Run a program to completion, a fuel limit, or a non-halting proof.

    Deterministic: equal program and environment give equal results.  Raises
    RuntimeFault if the top-level program performs an invalid operation; the
    same inside a simulation is absorbed as an ``exhausted`` view.  The
    halted strategy index is reported as computed, range checking against
    the game is the caller's job.
    """
    if isinstance(program, str):
        program = parse_program(program)
    g = 0  # fuel consumed so far, shared by every nesting level
    parse_cache: dict[str, Expr | ParseError] = {}
    pretty_cache: dict[int, str] = {}
    size_memo: dict[int, int] = {}
    game = env.game

    root = _Level(
        control=("expr", program.ast, ()),
        side=env.side,
        opp_source=env.opponent_source,
        self_source=env.self_source,
        limit=env.fuel,
        start_g=0,
    )
    levels = [root]
    final = None

    def cached_parse(text: str):
        hit = parse_cache.get(text)
        if hit is None:
            try:
                hit = parse_program(text).ast
            except ParseError as exc:
                hit = exc
            parse_cache[text] = hit
        return hit

    def cached_pretty(node: Expr) -> str:
        hit = pretty_cache.get(id(node))
        if hit is None:
            hit = pretty(node)
            pretty_cache[id(node)] = hit
        return hit

    def src_text(src: Src, lvl: _Level) -> str:
        if isinstance(src, SrcOpp):
            return lvl.opp_source
        if isinstance(src, SrcSelf):
            return lvl.self_source
        return cached_pretty(src.program)

    def pop(result) -> None:
        nonlocal final
        levels.pop()
        if not levels:
            final = result
            return
        parent = levels[-1]
        if result[0] == "halted":
            parent.control = ("value", SimOut("halted", result[1]))
        else:
            parent.control = ("value", SimOut("exhausted"))

    while levels:
        lvl = levels[-1]
        control = lvl.control

        # A level that reached a bare value with nothing pending is done.
        # Finishing costs no fuel.
        if control[0] == "value" and not lvl.kont:
            value = control[1]
            if isinstance(value, SimOut):
                pop(("fault", "program finished without a strategy index"))
            else:
                pop(("halted", value))
            continue

        if g >= lvl.limit:
            pop(("exhausted",))
            continue

        # Repetition check on the full level state, fuel counters excluded.
        # States whose control is a pending simulation are skipped: their
        # future can depend on the fuel left, and structural evaluation
        # cannot revisit them anyway.
        if not (control[0] == "expr" and isinstance(control[1], Sim)):
            if control[0] == "grow":
                size = 100 + control[1] + _est_size(lvl.kont, size_memo)
            else:
                size = _est_size((control, lvl.kont), size_memo)
            if size <= env.memory_cap:
                key = (control, lvl.kont)
                step_no = g - lvl.start_g + 1
                first = lvl.seen.get(key)
                if first is not None:
                    pop(("proven", first, step_no))
                    continue
                lvl.seen[key] = step_no

        g += 1
        try:
            if control[0] == "expr":
                node, bindings = control[1], control[2]
                if isinstance(node, Literal):
                    lvl.control = ("value", node.value)
                elif isinstance(node, Var):
                    lvl.control = ("value", _lookup(bindings, node.name))
                elif isinstance(node, Loop):
                    pass  # the single-state spinner: same state next step
                elif isinstance(node, Grow):
                    lvl.control = ("grow", 1)
                elif isinstance(node, BestResp):
                    lvl.kont = lvl.kont + (_KBestResp(),)
                    lvl.control = ("expr", node.arg, bindings)
                elif isinstance(node, Match):
                    lvl.kont = lvl.kont + (
                        _KMatch(node.var, node.on_halted, node.on_exhausted, bindings),
                    )
                    lvl.control = ("expr", node.scrutinee, bindings)
                elif isinstance(node, If):
                    lvl.kont = lvl.kont + (
                        _KIfLeft(node.op, node.right, node.then, node.otherwise, bindings),
                    )
                    lvl.control = ("expr", node.left, bindings)
                elif isinstance(node, Sim):
                    adversary = src_text(node.adversary, lvl)
                    if isinstance(node.target, SrcOpp):
                        text = lvl.opp_source
                        child_side = lvl.side.opposite
                    elif isinstance(node.target, SrcSelf):
                        text = lvl.self_source
                        child_side = lvl.side
                    else:
                        text = cached_pretty(node.target.program)
                        child_side = lvl.side
                    parsed = cached_parse(text)
                    if isinstance(parsed, ParseError):
                        # A rival whose source is not a runnable program
                        # yields nothing observable.
                        lvl.control = ("value", SimOut("exhausted"))
                    else:
                        if node.budget == "rest":
                            child_limit = lvl.limit
                        else:
                            child_limit = min(lvl.limit, g + node.budget)
                        lvl.control = ("await",)
                        levels.append(_Level(
                            control=("expr", parsed, ()),
                            side=child_side,
                            opp_source=adversary,
                            self_source=text,
                            limit=child_limit,
                            start_g=g,
                        ))
                else:  # pragma: no cover
                    raise _FaultSignal(f"unknown node {node!r}")
            elif control[0] == "grow":
                lvl.control = ("grow", control[1] + 1)
            else:  # a value meeting the top continuation frame
                value = control[1]
                frame = lvl.kont[-1]
                lvl.kont = lvl.kont[:-1]
                if isinstance(frame, _KBestResp):
                    if not isinstance(value, int):
                        raise _FaultSignal("best response applied to a non-index")
                    opp_count = game.side_count(lvl.side.opposite)
                    if not 1 <= value <= opp_count:
                        raise _FaultSignal(
                            f"best response to out-of-range strategy {value}"
                        )
                    lvl.control = ("value", best_response(game, lvl.side, value))
                elif isinstance(frame, _KMatch):
                    if not isinstance(value, SimOut):
                        raise _FaultSignal("match on a non-simulation value")
                    if value.tag == "halted":
                        bound = frame.bindings + ((frame.var, value.value),)
                        lvl.control = ("expr", frame.on_halted, bound)
                    else:
                        lvl.control = ("expr", frame.on_exhausted, frame.bindings)
                elif isinstance(frame, _KIfLeft):
                    if not isinstance(value, int):
                        raise _FaultSignal("comparison on a non-integer")
                    lvl.kont = lvl.kont + (
                        _KIfRight(frame.op, value, frame.then, frame.otherwise,
                                  frame.bindings),
                    )
                    lvl.control = ("expr", frame.right, frame.bindings)
                elif isinstance(frame, _KIfRight):
                    if not isinstance(value, int):
                        raise _FaultSignal("comparison on a non-integer")
                    left = frame.left_value
                    if frame.op == "==":
                        taken = left == value
                    elif frame.op == "<":
                        taken = left < value
                    else:
                        taken = left > value
                    lvl.control = (
                        "expr", frame.then if taken else frame.otherwise,
                        frame.bindings,
                    )
                else:  # pragma: no cover
                    raise _FaultSignal(f"unknown frame {frame!r}")
        except _FaultSignal as fault:
            pop(("fault", str(fault)))

    assert final is not None
    if final[0] == "halted":
        return EvalResult(EvalKind.HALTED, strategy=final[1], fuel_used=g)
    if final[0] == "exhausted":
        return EvalResult(EvalKind.FUEL_EXHAUSTED, fuel_used=g)
    if final[0] == "proven":
        return EvalResult(
            EvalKind.PROVEN_NONHALTING, witness=(final[1], final[2]), fuel_used=g
        )
    raise RuntimeFault(final[1], fuel_used=g)


def prove_nonhalt(program: StrategyProgram | str, env: EvalEnv) -> tuple[int, int] | None:
    """State-repetition witness that the program never halts, if one is found.

    Returns a pair of step counters at which the machine state was identical,
    or None when no repetition showed up within the fuel and state-size
    budget.  None says nothing either way; a witness is conclusive.
    """
    try:
        result = evaluate(program, env)
    except RuntimeFault:
        return None
    if result.kind is EvalKind.PROVEN_NONHALTING:
        return result.witness
    return None
