"""Matches where everyone can read everyone's code.

Runs the full catalog round robin, then the three headline results: the
exploiter's sweep of halting rivals, its own defeat by a budgeted copy,
and the unreadable oracle that never loses but still cannot crack the
state-grower.
"""
from opencomp import (
    Mode, OracleWinner, build_defiance, build_exploiter, catalog_learners,
    render_match, render_report, rps, run_match, run_tournament,
)

FUEL = 3000


def main():
    game = rps()

    print("=== the catalog, round robin, strict rules ===\n")
    report = run_tournament(game, catalog_learners(), fuel=FUEL)
    print(render_report(report))
    print("nobody sweeps: simulators stall each other, and grow drags every")
    print("reader down with it.  hence universal_winner=none.\n")

    print("=== the exploiter's sweep ===\n")
    exploiter = build_exploiter()
    for rival in catalog_learners():
        if rival.name == "exploiter":
            continue
        match = run_match(game, exploiter, rival, fuel=FUEL)
        print(render_match(match))
    print()
    print("six wins, two standoffs.  every rival that halts or is provably")
    print("stuck gets read out and countered.\n")

    print("=== the exploiter exploited ===\n")
    budgeted = build_exploiter("budgeted", sim_budget=FUEL)
    upset = run_match(
        game, budgeted, exploiter, fuel=10 * FUEL, fuel2=FUEL,
        mode=Mode.DEADLINE,
    )
    print(render_match(upset))
    print()
    print("the budgeted copy cuts its simulation off, halts, and wins under")
    print("deadline rules while the open-ended original is still running.")
    print("with equal fuel the same pairing is a standoff:")
    even = run_match(game, budgeted, exploiter, fuel=FUEL, mode=Mode.DEADLINE)
    print(render_match(even))
    print()

    print("=== the oracle ===\n")
    oracle = OracleWinner()
    for rival in catalog_learners():
        match = run_match(game, oracle, rival, fuel=FUEL)
        print(render_match(match))
    print()
    print("rivals cannot parse the oracle's source, so their simulations")
    print("come back empty; it reads them with host resources and counters.")
    print("only grow forces a draw by outrunning proof and fuel alike.\n")

    print("=== nothing defeats grow under strict rules ===\n")
    grower = build_defiance()
    for rival in catalog_learners():
        match = run_match(game, rival, grower, fuel=FUEL)
        print(render_match(match))


if __name__ == "__main__":
    main()
