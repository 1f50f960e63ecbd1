"""Structural classification of game tables.

Four mutually exclusive kinds, checked in order:

* ``StrictDomination``: some row wins every pairing.
* ``WeakDomination``: no strict dominator, but some row never loses.
* ``StronglyIntransitive``: every row loses somewhere and every column is
  beaten somewhere, so no strategy is safe and no pure equilibrium exists.
* ``Other``: none of the above.

Strict domination cannot occur in a symmetric game (the diagonal draws), which
is why the weak variant exists; for antisymmetric tables a weak dominator row
``d`` always yields the pure equilibrium cell ``(d, d)``.  That guarantee does
not extend to arbitrary asymmetric tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import NotSymmetricError
from .game_core import GameTable, Side, is_symmetric


class ClassKind(str, Enum):
    STRICT_DOMINATION = "StrictDomination"
    WEAK_DOMINATION = "WeakDomination"
    STRONGLY_INTRANSITIVE = "StronglyIntransitive"
    OTHER = "Other"


class NashCell(NamedTuple):
    i: int
    j: int


class SIWitnesses(NamedTuple):
    """Lowest-index witness maps for strong intransitivity.

    ``beats_row[i]`` is a column that defeats row ``i``; ``beats_col[j]`` is a
    row that defeats column ``j``.  Both maps are total when the table is
    strongly intransitive.
    """

    beats_row: dict[int, int]
    beats_col: dict[int, int]


@dataclass(frozen=True)
class Classification:
    kind: ClassKind
    dominator: int | None = None
    witnesses: SIWitnesses | None = None


def find_dominator(table: GameTable, strict: bool) -> int | None:
    """Lowest 1-based row that wins everywhere (strict) or never loses."""
    entries = table.entries
    if strict:
        mask = (entries == 1).all(axis=1)
    else:
        mask = (entries >= 0).all(axis=1)
    idx = np.flatnonzero(mask)
    return int(idx[0]) + 1 if idx.size else None


def is_strongly_intransitive(table: GameTable) -> tuple[bool, SIWitnesses | None]:
    entries = table.entries
    row_loses = (entries == -1).any(axis=1)
    col_beaten = (entries == 1).any(axis=0)
    if not (row_loses.all() and col_beaten.all()):
        return False, None
    beats_row = {
        i + 1: int(np.argmax(entries[i] == -1)) + 1 for i in range(table.rows)
    }
    beats_col = {
        j + 1: int(np.argmax(entries[:, j] == 1)) + 1 for j in range(table.cols)
    }
    return True, SIWitnesses(beats_row, beats_col)


def classify(table: GameTable) -> Classification:
    d = find_dominator(table, strict=True)
    if d is not None:
        return Classification(ClassKind.STRICT_DOMINATION, dominator=d)
    d = find_dominator(table, strict=False)
    if d is not None:
        return Classification(ClassKind.WEAK_DOMINATION, dominator=d)
    si, witnesses = is_strongly_intransitive(table)
    if si:
        return Classification(ClassKind.STRONGLY_INTRANSITIVE, witnesses=witnesses)
    return Classification(ClassKind.OTHER)


def pure_nash(table: GameTable) -> list[NashCell]:
    """All cells that are simultaneously a column maximum and a row minimum.

    Returned in lexicographic (row-major) order, 1-based.
    """
    entries = table.entries
    col_max = entries.max(axis=0)
    row_min = entries.min(axis=1)
    hits = np.argwhere((entries == col_max) & (entries == row_min[:, None]))
    return [NashCell(int(i) + 1, int(j) + 1) for i, j in hits]


def best_response(table: GameTable, side: Side, opponent_strategy: int) -> int:
    """Best reply for ``side`` against a known opposing strategy index.

    The row side maximizes the payoff down the opponent's column, the column
    side minimizes across the opponent's row.  This is total: a win if one
    exists, otherwise the best draw, otherwise the least bad loss.  Ties break
    to the lowest index.
    """
    side = Side(side)
    if side is Side.ROW:
        if not 1 <= opponent_strategy <= table.cols:
            raise IndexError(
                f"opponent strategy {opponent_strategy} out of range 1..{table.cols}"
            )
        column = table.entries[:, opponent_strategy - 1]
        return int(np.argmax(column)) + 1
    if not 1 <= opponent_strategy <= table.rows:
        raise IndexError(
            f"opponent strategy {opponent_strategy} out of range 1..{table.rows}"
        )
    row = table.entries[opponent_strategy - 1, :]
    return int(np.argmin(row)) + 1


def find_cycles(table: GameTable, max_len: int = 3) -> list[tuple[int, ...]]:
    """Simple cycles of length at most ``max_len`` in the dominance digraph.

    Only defined for symmetric tables.  The digraph has an edge ``i -> j``
    when strategy ``j`` beats strategy ``i`` (arrows point from loser to
    winner).  Each cycle is reported once, rotated so its smallest index comes
    first, and the list is sorted by length then lexicographically.  Cycles
    shorter than 3 cannot exist under antisymmetry.
    """
    if max_len not in (3, 4, 5):
        raise ValueError("max_len must be 3, 4 or 5")
    if not (table.symmetric_flag and is_symmetric(table)):
        raise NotSymmetricError("cycle search needs a symmetric table")
    n = table.rows
    entries = table.entries
    # successors[i] = strategies that beat i, i.e. edges i -> j.
    successors = [
        [j for j in range(n) if entries[j, i] == 1] for i in range(n)
    ]
    cycles: list[tuple[int, ...]] = []

    def walk(start: int, path: list[int]):
        last = path[-1]
        for nxt in successors[last]:
            if nxt == start and len(path) >= 3:
                cycles.append(tuple(p + 1 for p in path))
            elif nxt > start and nxt not in path and len(path) < max_len:
                path.append(nxt)
                walk(start, path)
                path.pop()

    for start in range(n):
        walk(start, [start])
    cycles.sort(key=lambda c: (len(c), c))
    return cycles


def render_classification(table: GameTable, result: Classification) -> str:
    """Stable textual report used by the command-line front end."""
    lines = [f"game={table.name}"]
    lines.append(f"classification={result.kind.value}")
    lines.append(f"dominator={result.dominator if result.dominator else 'none'}")
    if result.witnesses is not None:
        for i in sorted(result.witnesses.beats_row):
            j = result.witnesses.beats_row[i]
            lines.append(f"witness row {table.row_name(i)} -> {table.col_name(j)}")
        for j in sorted(result.witnesses.beats_col):
            i = result.witnesses.beats_col[j]
            lines.append(f"witness col {table.col_name(j)} -> {table.row_name(i)}")
    return "\n".join(lines) + "\n"


def render_cycles(table: GameTable, cycles: list[tuple[int, ...]]) -> str:
    lines = [f"game={table.name}", f"cycles={len(cycles)}"]
    for cyc in cycles:
        names = [table.row_name(i) for i in cyc]
        names.append(table.row_name(cyc[0]))
        lines.append("cycle: " + " -> ".join(names))
    return "\n".join(lines) + "\n"
