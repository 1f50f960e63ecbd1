"""Mixed strategies and fictitious play for win/draw/loss tables.

Fictitious play here is the simultaneous, deterministic variant: each round
both players best-respond to the opponent's empirical mixture so far, ties
broken toward the lowest index, and both counts update at once.  For
zero-sum games the empirical mixtures approach the maxmin value; the
per-round play itself may cycle forever (rock-paper-scissors famously does),
which is exactly the behavior the intransitive examples lean on.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .game_core import GameTable


@dataclass(frozen=True)
class MixedStrategy:
    """A probability vector over one side's strategies."""

    weights: np.ndarray

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=np.float64)
        if weights.ndim != 1 or weights.size == 0:
            raise ValueError("weights must be a non-empty vector")
        if np.any(weights < -1e-12):
            raise ValueError("weights must be non-negative")
        total = float(weights.sum())
        if not np.isclose(total, 1.0, atol=1e-9):
            raise ValueError(f"weights must sum to 1, got {total}")
        weights = np.clip(weights, 0.0, None)
        weights = weights / weights.sum()
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @staticmethod
    def uniform(n: int) -> "MixedStrategy":
        return MixedStrategy(np.full(n, 1.0 / n))

    @staticmethod
    def pure(n: int, strategy: int) -> "MixedStrategy":
        """Point mass on a 1-based strategy index."""
        if not 1 <= strategy <= n:
            raise IndexError(f"strategy {strategy} out of range 1..{n}")
        weights = np.zeros(n)
        weights[strategy - 1] = 1.0
        return MixedStrategy(weights)

    def support(self) -> tuple[int, ...]:
        """1-based indices played with positive probability."""
        return tuple(int(i) + 1 for i in np.flatnonzero(self.weights > 1e-12))


def expected_payoff(game: GameTable, p1: MixedStrategy, p2: MixedStrategy) -> float:
    """Expected player-1 payoff when both sides mix."""
    if p1.weights.size != game.rows or p2.weights.size != game.cols:
        raise ValueError("mixture sizes must match the table")
    return float(p1.weights @ game.entries.astype(np.float64) @ p2.weights)


def exploitability(game: GameTable, p1: MixedStrategy, p2: MixedStrategy) -> float:
    """How far the profile is from mutual best response, never negative.

    Sum of what each player could gain by deviating to a best pure response.
    Zero exactly at an equilibrium of the zero-sum game.
    """
    if p1.weights.size != game.rows or p2.weights.size != game.cols:
        raise ValueError("mixture sizes must match the table")
    payoff = game.entries.astype(np.float64)
    best_vs_p2 = float(np.max(payoff @ p2.weights))
    worst_vs_p1 = float(np.min(p1.weights @ payoff))
    return max(0.0, best_vs_p2 - worst_vs_p1)


@dataclass(frozen=True)
class FictitiousPlayResult:
    p1: MixedStrategy
    p2: MixedStrategy
    value: float
    exploitability: float
    iterations: int
    converged: bool


def fictitious_play(
    game: GameTable,
    iterations: int = 100_000,
    tol: float = 1e-2,
) -> FictitiousPlayResult:
    """Run simultaneous fictitious play and report the best profile seen.

    Both players start having played strategy 1 once.  Stops early when the
    empirical profile's exploitability drops to ``tol``; otherwise runs the
    full iteration count and reports the lowest-exploitability profile
    encountered, with ``converged`` False.  Deterministic throughout.
    """
    if iterations < 1:
        raise ValueError("iterations must be positive")
    payoff = game.entries.astype(np.float64)
    rows, cols = game.rows, game.cols

    counts1 = np.zeros(rows)
    counts2 = np.zeros(cols)
    counts1[0] = 1.0
    counts2[0] = 1.0

    best = None  # (exploitability, p1 weights, p2 weights, value, t)
    for t in range(1, iterations + 1):
        mix1 = counts1 / counts1.sum()
        mix2 = counts2 / counts2.sum()

        row_payoffs = payoff @ mix2
        col_payoffs = mix1 @ payoff
        gap = float(np.max(row_payoffs) - np.min(col_payoffs))
        gap = max(0.0, gap)
        if best is None or gap < best[0]:
            value = float(mix1 @ payoff @ mix2)
            best = (gap, mix1.copy(), mix2.copy(), value, t)
        if gap <= tol:
            return FictitiousPlayResult(
                p1=MixedStrategy(mix1),
                p2=MixedStrategy(mix2),
                value=float(mix1 @ payoff @ mix2),
                exploitability=gap,
                iterations=t,
                converged=True,
            )

        reply1 = int(np.argmax(row_payoffs))
        reply2 = int(np.argmin(col_payoffs))
        counts1[reply1] += 1.0
        counts2[reply2] += 1.0

    gap, mix1, mix2, value, _ = best
    return FictitiousPlayResult(
        p1=MixedStrategy(mix1),
        p2=MixedStrategy(mix2),
        value=value,
        exploitability=gap,
        iterations=iterations,
        converged=False,
    )
