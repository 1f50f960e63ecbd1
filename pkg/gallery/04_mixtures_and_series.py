"""Mixed play and composed series.

Fictitious play recovers the sensible mixtures: uniform for
rock-paper-scissors, all-in on face 6 for the dice game, a fair coin for
matching pennies.  Series composition then shows an aggregate all-draw
game built from a game and its role-swapped mirror.
"""
import numpy as np

from opencomp import (
    Aggregator, compose_series, dice, exploitability, fictitious_play,
    MixedStrategy, pennies, role_swapped, rps, serialize_game,
)


def describe(game, iterations=100_000, tol=1e-9):
    result = fictitious_play(game, iterations=iterations, tol=tol)
    mix = ", ".join(f"{w:.3f}" for w in result.p1.weights)
    print(f"{game.name:>8}: p1=({mix}) value={result.value:+.4f} "
          f"exploitability={result.exploitability:.5f} "
          f"iters={result.iterations} converged={result.converged}")


def main():
    print("=== fictitious play on the bundled games ===\n")
    describe(rps())
    describe(dice(), iterations=5000)
    describe(pennies(), iterations=50_000, tol=1e-2)
    print()
    print("rps circles the uniform mixture forever (play itself never")
    print("settles, the average does); dice snaps to the dominant face.\n")

    print("=== exploitability as a ruler ===\n")
    uniform = MixedStrategy.uniform(3)
    rock = MixedStrategy.pure(3, 1)
    print("uniform vs uniform on rps:", exploitability(rps(), uniform, uniform))
    print("all-rock vs uniform on rps:", exploitability(rps(), rock, uniform))
    print()

    print("=== a series that cancels itself ===\n")
    game = rps()
    mirrored = role_swapped(game)
    cancelled = compose_series([game, mirrored], Aggregator.SUM_SIGN)
    print(serialize_game(cancelled))
    print("playing rps and then the same game with roles swapped is a wash:")
    print("every matchup sums to zero.\n")

    print("=== lexicographic tie-breaking ===\n")
    entries = np.sign(
        np.arange(1, 4)[:, None] - np.arange(1, 4)[None, :]
    ).astype(np.int8)
    from opencomp import GameTable
    dice3 = GameTable(name="dice3", entries=entries, symmetric_flag=True)
    first_decides = compose_series([game, dice3], Aggregator.LEX)
    print(serialize_game(first_decides))
    print("under lex rules the first decisive game settles each cell, so a")
    print("decisive opener makes the rest of the series moot.")


if __name__ == "__main__":
    main()
