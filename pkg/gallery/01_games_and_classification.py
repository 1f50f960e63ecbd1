"""Tables, their shapes, and what the shapes imply.

Builds the three bundled games, classifies each, and shows how strong
intransitivity rules out pure equilibria while a dominant strategy pins
one down.
"""
import numpy as np

from opencomp import (
    classify, dice, find_cycles, parse_game, pennies, pure_nash,
    render_classification, render_cycles, rps, serialize_game,
)


def main():
    print("=== the three bundled games ===\n")
    for game in (rps(), dice(), pennies()):
        print(serialize_game(game))

    print("=== classification ===\n")
    for game in (rps(), dice(), pennies()):
        print(render_classification(game, classify(game)))
        print()

    print("=== pure equilibria ===\n")
    for game in (rps(), dice(), pennies()):
        cells = pure_nash(game)
        if cells:
            spots = ", ".join(f"({c.i},{c.j})" for c in cells)
            print(f"{game.name}: {spots}")
        else:
            print(f"{game.name}: none")
    print()
    print("rock-paper-scissors is strongly intransitive, so nothing can be")
    print("a pure equilibrium: whatever the row picks, some column beats it.")
    print("the dice game weakly dominates with face 6 and settles at (6,6).\n")

    print("=== cycles in the beats relation ===\n")
    print(render_cycles(rps(), find_cycles(rps(), max_len=3)))
    print()

    # a table straight from text, the same way the cli reads files
    text = (
        "game homebrew\n"
        "symmetric true\n"
        "rows 4 cols 4\n"
        "row 1: 0 +1 -1 +1\n"
        "row 2: -1 0 +1 -1\n"
        "row 3: +1 -1 0 +1\n"
        "row 4: -1 +1 -1 0\n"
    )
    game = parse_game(text)
    print("a handwritten 4x4:", classify(game).kind.value)
    print("its cycles up to length 4:")
    for cycle in find_cycles(game, max_len=4):
        print("  ", " -> ".join(str(i) for i in cycle))


if __name__ == "__main__":
    main()
