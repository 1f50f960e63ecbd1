"""Composing a series of games into a single aggregate game.

A series is played between the same two rosters: strategy i for player 1 in
the aggregate commits to playing its row i in every constituent game, and
likewise for player 2.  The aggregate cell is the per-game outcome vector
squashed by an aggregation rule.  All constituent tables must have the same
shape on both sides.
"""
from __future__ import annotations

from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeMismatchError
from .game_core import GameTable, is_symmetric


class Aggregator(str, Enum):
    """How a vector of win/draw/loss outcomes collapses to one outcome.

    SUM_SIGN: sign of the summed payoffs.  MAJORITY: compare win and loss
    counts.  With payoffs in {-1, 0, +1} these two always agree, since the
    sum is exactly wins minus losses; both are provided because reports
    name the rule that was asked for.  LEX: the first non-draw game decides,
    all draws is a draw.
    """

    SUM_SIGN = "sum"
    MAJORITY = "majority"
    LEX = "lex"


def compose_series(
    games: Sequence[GameTable] | Iterable[GameTable],
    aggregator: Aggregator | str = Aggregator.SUM_SIGN,
    name: str | None = None,
) -> GameTable:
    """Collapse games played in a fixed order into one table.

    A single-game series composes to a table with the input's entries
    unchanged, whatever the rule.  Raises ShapeMismatchError if the
    constituent tables disagree in shape, ValueError on an empty series.
    """
    aggregator = Aggregator(aggregator)
    games = list(games)
    if not games:
        raise ValueError("a series needs at least one game")
    if len(games) == 1 and name is None:
        return games[0]
    rows, cols = games[0].rows, games[0].cols
    for game in games[1:]:
        if game.rows != rows or game.cols != cols:
            raise ShapeMismatchError(
                f"series games must share a shape: {rows}x{cols} vs "
                f"{game.rows}x{game.cols} ({game.name})"
            )

    stack = np.stack([game.entries for game in games]).astype(np.int64)
    if aggregator is Aggregator.LEX:
        # Index of the first non-draw outcome per cell; all-draw cells keep 0,
        # which is harmless because their every layer is 0 anyway.
        nonzero = stack != 0
        first = np.argmax(nonzero, axis=0)
        entries = np.take_along_axis(stack, first[None, ...], axis=0)[0]
    else:
        entries = np.sign(stack.sum(axis=0))
    entries = entries.astype(np.int8)

    if name is None:
        name = "series-" + "-".join(game.name for game in games)
    first_game = games[0]
    probe = GameTable(
        name=name,
        entries=entries,
        symmetric_flag=False,
        labels_rows=first_game.labels_rows,
        labels_cols=first_game.labels_cols,
    )
    symmetric = all(g.symmetric_flag for g in games) and is_symmetric(probe)
    if not symmetric:
        return probe
    return GameTable(
        name=name,
        entries=entries,
        symmetric_flag=True,
        labels_rows=first_game.labels_rows,
        labels_cols=first_game.labels_cols,
    )
