"""Turning empirical score crosstables into win/draw/loss games.

The input format is the comma-separated table league reports tend to use:
a header line ``names,A,B,C`` followed by one line per player holding its
score (fraction of points taken) against each column opponent, diagonal
left empty.  Scores of a pair must be complementary, s(a,b) + s(b,a) = 1,
within a small tolerance.  A margin parameter decides how far from an even
0.5 a score must be before it counts as a win rather than a draw; widening
the margin can erase narrow intransitive cycles, which is the phenomenon
the bundled engine table demonstrates.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ComplementarityViolation, ParseError
from .game_core import GameTable

_COMPLEMENT_TOL = 1e-6


@dataclass(frozen=True)
class Crosstable:
    """Raw parsed scores: names plus a square matrix with NaN where empty."""

    names: tuple[str, ...]
    scores: np.ndarray

    def __post_init__(self):
        scores = np.asarray(self.scores, dtype=np.float64)
        n = len(self.names)
        if scores.shape != (n, n):
            raise ValueError("scores must be square and match the name count")
        scores = scores.copy()
        scores.setflags(write=False)
        object.__setattr__(self, "scores", scores)


def parse_crosstable(text: str) -> Crosstable:
    """Parse the CSV-ish crosstable format; errors carry line numbers.

    Raises ComplementarityViolation when a pair's two scores are present
    and do not sum to 1 within tolerance.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty crosstable")
    header = [cell.strip() for cell in lines[0].split(",")]
    if header[0] != "names" or len(header) < 2:
        raise ParseError("header must be 'names,<name>,...'", line=1)
    names = tuple(header[1:])
    if len(set(names)) != len(names):
        raise ParseError("duplicate names in header", line=1)
    n = len(names)
    if len(lines) != n + 1:
        raise ParseError(
            f"expected {n} score rows after the header, found {len(lines) - 1}"
        )

    scores = np.full((n, n), np.nan)
    for row, line in enumerate(lines[1:]):
        lineno = row + 2
        cells = [cell.strip() for cell in line.split(",")]
        if len(cells) != n + 1:
            raise ParseError(
                f"expected {n + 1} cells, found {len(cells)}", line=lineno
            )
        if cells[0] != names[row]:
            raise ParseError(
                f"row name '{cells[0]}' does not match header order "
                f"('{names[row]}' expected)", line=lineno,
            )
        for col, cell in enumerate(cells[1:]):
            if cell == "":
                continue
            if row == col:
                raise ParseError(
                    "diagonal cells must be empty", line=lineno
                )
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(
                    f"bad score '{cell}'", line=lineno
                ) from None
            if not 0.0 <= value <= 1.0:
                raise ParseError(
                    f"score {value} outside [0, 1]", line=lineno
                )
            scores[row, col] = value

    for a in range(n):
        for b in range(a + 1, n):
            ab, ba = scores[a, b], scores[b, a]
            if not np.isnan(ab) and not np.isnan(ba):
                if abs(ab + ba - 1.0) > _COMPLEMENT_TOL:
                    raise ComplementarityViolation(
                        f"scores for {names[a]} vs {names[b]} sum to "
                        f"{ab + ba:.6f}, expected 1"
                    )
    return Crosstable(names=names, scores=scores)


def to_game(
    crosstable: Crosstable, margin: float = 0.0, name: str = "crosstable"
) -> GameTable:
    """Threshold scores into a symmetric win/draw/loss table.

    A pair's outcome comes from the upper-triangle score (or the complement
    of the lower one if only that side is present; a fully absent pair is a
    draw): win above 0.5 + margin, loss below 0.5 - margin, draw between.
    The lower triangle is the mirror image, so the result is antisymmetric
    by construction even when a score sits exactly on a threshold.
    """
    if not 0.0 <= margin < 0.5:
        raise ValueError("margin must be in [0, 0.5)")
    n = len(crosstable.names)
    entries = np.zeros((n, n), dtype=np.int8)
    for a in range(n):
        for b in range(a + 1, n):
            score = crosstable.scores[a, b]
            if np.isnan(score):
                other = crosstable.scores[b, a]
                if np.isnan(other):
                    continue
                score = 1.0 - other
            if score > 0.5 + margin:
                entry = 1
            elif score < 0.5 - margin:
                entry = -1
            else:
                entry = 0
            entries[a, b] = entry
            entries[b, a] = -entry
    return GameTable(
        name=name,
        entries=entries,
        symmetric_flag=True,
        labels_rows=crosstable.names,
        labels_cols=crosstable.names,
    )


def ingest_crosstable(
    text: str, margin: float = 0.0, name: str = "crosstable"
) -> GameTable:
    """Parse and threshold in one call."""
    return to_game(parse_crosstable(text), margin=margin, name=name)
