import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import opencomp.dsl as dsl
from opencomp import (
    EXPLOITER_SOURCE, EvalEnv, EvalKind, ParseError, RuntimeFault, Side,
    evaluate, parse_learner_file, parse_program, pretty, prove_nonhalt, rps,
)
from opencomp.dsl import (
    BestResp, Grow, If, Literal, Loop, Match, Sim, SrcOpp, SrcQuoted, SrcSelf,
    Var,
)


def env_for(opponent="const 1", me="const 1", fuel=1000, side=Side.ROW,
            memory_cap=65536, game=None):
    return EvalEnv(
        game=rps() if game is None else game,
        side=side,
        opponent_source=opponent,
        self_source=me,
        fuel=fuel,
        memory_cap=memory_cap,
    )


class TestParser:
    def test_const(self):
        assert parse_program("const 2").ast == Literal(2)

    def test_bare_int(self):
        assert parse_program("7").ast == Literal(7, bare=True)

    def test_identifier(self):
        assert parse_program("k").ast == Var("k")

    def test_loop_and_grow(self):
        assert parse_program("loop").ast == Loop()
        assert parse_program("grow").ast == Grow()

    def test_bestresp(self):
        assert parse_program("bestresp(const 1)").ast == BestResp(Literal(1))

    def test_sim_sources_and_budgets(self):
        tree = parse_program("sim(opp, self, rest)").ast
        assert tree == Sim(SrcOpp(), SrcSelf(), "rest")
        tree = parse_program("sim(self, opp, 25)").ast
        assert tree == Sim(SrcSelf(), SrcOpp(), 25)

    def test_quoted_program_source(self):
        tree = parse_program('sim("const 3", opp, 5)').ast
        assert tree == Sim(SrcQuoted(Literal(3)), SrcOpp(), 5)

    def test_exploiter_shape(self):
        tree = parse_program(EXPLOITER_SOURCE).ast
        assert tree == Match(
            Sim(SrcOpp(), SrcSelf(), "rest"),
            "k",
            BestResp(Var("k")),
            Literal(1),
        )

    def test_if_comparators(self):
        for op in ("==", "<", ">"):
            tree = parse_program(f"if 1 {op} 2 then const 1 else const 2").ast
            assert tree.op == op

    def test_whitespace_and_newlines_are_free(self):
        a = parse_program("match sim(opp,self,rest){halted(k)=>k|exhausted=>const 1}")
        b = parse_program(
            "match sim( opp , self , rest )\n"
            "  { halted( k ) => k\n"
            "  | exhausted => const 1 }"
        )
        assert a.ast == b.ast

    def test_error_positions(self):
        with pytest.raises(ParseError) as err:
            parse_program("const x")
        assert err.value.line == 1
        with pytest.raises(ParseError) as err:
            parse_program("bestresp(\n  ?)")
        assert err.value.line == 2

    def test_trailing_tokens_rejected(self):
        with pytest.raises(ParseError):
            parse_program("const 1 const 2")

    def test_keywords_are_not_identifiers(self):
        with pytest.raises(ParseError):
            parse_program("match sim(opp, self, rest) { halted(loop) => 1 | exhausted => 2 }")

    def test_bad_budget(self):
        with pytest.raises(ParseError):
            parse_program("sim(opp, self, opp)")

    def test_unterminated_quote(self):
        with pytest.raises(ParseError):
            parse_program('sim("const 1, opp, 5)')

    def test_bad_escape(self):
        with pytest.raises(ParseError):
            parse_program(r'sim("const \n 1", opp, 5)')

    def test_quoted_program_must_parse(self):
        with pytest.raises(ParseError) as err:
            parse_program('sim("const", opp, 5)')
        assert "quoted" in str(err.value)

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_program("")

    def test_learner_file(self):
        name, program = parse_learner_file("learner alpha\nconst 2\n")
        assert name == "alpha"
        assert program.ast == Literal(2)

    def test_learner_file_bad_header(self):
        with pytest.raises(ParseError):
            parse_learner_file("alpha\nconst 2\n")
        with pytest.raises(ParseError):
            parse_learner_file("learner a b\nconst 2\n")

    def test_learner_file_needs_body(self):
        with pytest.raises(ParseError):
            parse_learner_file("learner alpha\n")


# Strategy-program generator used by the round-trip and machine properties.
_names = st.sampled_from(["k", "n", "x"])
_leaves = st.one_of(
    st.integers(1, 3).map(lambda v: Literal(v)),
    st.integers(1, 3).map(lambda v: Literal(v, bare=True)),
    _names.map(Var),
    st.just(Loop()),
    st.just(Grow()),
)


def _compound(children):
    srcs = st.one_of(
        st.just(SrcOpp()), st.just(SrcSelf()), children.map(SrcQuoted)
    )
    budgets = st.one_of(st.just("rest"), st.integers(0, 30))
    return st.one_of(
        children.map(BestResp),
        st.builds(Sim, srcs, srcs, budgets),
        st.builds(
            Match, children, _names, children, children
        ),
        st.builds(
            If, children, st.sampled_from(["==", "<", ">"]), children,
            children, children,
        ),
    )


program_trees = st.recursive(_leaves, _compound, max_leaves=12)


class TestPretty:
    def test_canonical_sample(self):
        assert pretty(parse_program(EXPLOITER_SOURCE).ast) == EXPLOITER_SOURCE

    def test_quoted_escaping(self):
        inner = 'match sim("const 1", opp, 3) { halted(k) => k | exhausted => 2 }'
        outer_tree = Sim(SrcQuoted(parse_program(inner).ast), SrcOpp(), 9)
        text = pretty(outer_tree)
        assert '\\"' in text
        assert parse_program(text).ast == outer_tree

    def test_doubly_nested_quotes(self):
        tree = SrcQuoted(Sim(SrcQuoted(Literal(1)), SrcSelf(), "rest"))
        text = pretty(Sim(tree, SrcOpp(), 2))
        assert parse_program(text).ast == Sim(tree, SrcOpp(), 2)

    @given(program_trees)
    @settings(max_examples=150)
    def test_round_trip(self, tree):
        assert parse_program(pretty(tree)).ast == tree


class TestEvaluateBasics:
    def test_const_halts_in_one_step(self):
        result = evaluate("const 2", env_for())
        assert result.kind is EvalKind.HALTED
        assert result.strategy == 2
        assert result.fuel_used == 1

    def test_const_halts_with_exactly_one_fuel(self):
        result = evaluate("const 2", env_for(fuel=1))
        assert result.kind is EvalKind.HALTED

    def test_zero_fuel_exhausts_immediately(self):
        result = evaluate("const 2", env_for(fuel=0))
        assert result.kind is EvalKind.FUEL_EXHAUSTED
        assert result.fuel_used == 0

    def test_bare_int_costs_one_step(self):
        assert evaluate("5", env_for()).fuel_used == 1

    def test_bestresp_costs_three_steps(self):
        result = evaluate("bestresp(const 1)", env_for())
        assert result.strategy == 2
        assert result.fuel_used == 3

    def test_if_costs_six_steps(self):
        result = evaluate("if 1 == 1 then const 2 else const 3", env_for())
        assert result.strategy == 2
        assert result.fuel_used == 6

    def test_if_branches(self):
        assert evaluate("if 1 < 2 then const 1 else const 2", env_for()).strategy == 1
        assert evaluate("if 1 > 2 then const 1 else const 2", env_for()).strategy == 2
        assert evaluate("if 2 == 3 then const 1 else const 2", env_for()).strategy == 2

    def test_range_of_final_value_is_not_checked_here(self):
        result = evaluate("const 9", env_for())
        assert result.kind is EvalKind.HALTED
        assert result.strategy == 9

    def test_deterministic(self):
        for source in ("const 1", EXPLOITER_SOURCE, "grow", "loop"):
            first = evaluate(source, env_for(opponent=EXPLOITER_SOURCE, fuel=400))
            second = evaluate(source, env_for(opponent=EXPLOITER_SOURCE, fuel=400))
            assert first == second


class TestNonHalting:
    def test_loop_is_proven(self):
        result = evaluate("loop", env_for())
        assert result.kind is EvalKind.PROVEN_NONHALTING
        assert result.witness == (1, 2)
        assert result.fuel_used == 1

    def test_grow_exhausts_without_proof(self):
        result = evaluate("grow", env_for(fuel=700))
        assert result.kind is EvalKind.FUEL_EXHAUSTED
        assert result.witness is None
        assert result.fuel_used == 700

    def test_memory_cap_disables_the_prover(self):
        result = evaluate("loop", env_for(fuel=50, memory_cap=1))
        assert result.kind is EvalKind.FUEL_EXHAUSTED

    def test_prove_nonhalt(self):
        assert prove_nonhalt("loop", env_for()) == (1, 2)
        assert prove_nonhalt("const 1", env_for()) is None
        assert prove_nonhalt("grow", env_for(fuel=200)) is None
        assert prove_nonhalt("k", env_for()) is None

    def test_witness_steps_are_ordered(self):
        witness = prove_nonhalt("loop", env_for())
        assert witness[0] < witness[1]


class TestSim:
    def test_halted_branch_binds_the_strategy(self):
        source = "match sim(opp, self, 50) { halted(k) => k | exhausted => const 9 }"
        result = evaluate(source, env_for(opponent="const 3", me=source))
        assert result.strategy == 3

    def test_proven_child_reads_as_exhausted(self):
        source = "match sim(opp, self, rest) { halted(k) => const 1 | exhausted => const 2 }"
        result = evaluate(source, env_for(opponent="loop", me=source))
        assert result.strategy == 2
        # the proof fires after a couple of steps, the rest of the fuel is kept
        assert result.fuel_used < 20

    def test_integer_budget_exhaustion_is_observable(self):
        source = "match sim(opp, self, 50) { halted(k) => const 1 | exhausted => const 2 }"
        result = evaluate(source, env_for(opponent="grow", me=source, fuel=1000))
        assert result.strategy == 2
        # 50 for the child plus a handful of steps around it
        assert 50 < result.fuel_used < 70

    def test_rest_budget_exhaustion_is_not_observable(self):
        source = "match sim(opp, self, rest) { halted(k) => const 1 | exhausted => const 2 }"
        result = evaluate(source, env_for(opponent="grow", me=source, fuel=1000))
        assert result.kind is EvalKind.FUEL_EXHAUSTED
        assert result.fuel_used == 1000

    def test_unparseable_opponent_reads_as_exhausted(self):
        source = "match sim(opp, self, 50) { halted(k) => const 1 | exhausted => const 2 }"
        result = evaluate(source, env_for(opponent="not ) a ( program", me=source))
        assert result.strategy == 2

    def test_faulting_child_reads_as_exhausted(self):
        source = "match sim(opp, self, 50) { halted(k) => const 1 | exhausted => const 2 }"
        result = evaluate(source, env_for(opponent="bestresp(const 7)", me=source))
        assert result.strategy == 2

    def test_quoted_target_runs_on_own_side(self):
        # simulating one's own quoted rock against the rival, then countering
        source = 'match sim("const 1", opp, 20) { halted(k) => bestresp(k) | exhausted => const 3 }'
        result = evaluate(source, env_for(opponent="const 2", me=source))
        assert result.strategy == 2

    def test_opp_target_swaps_seats(self):
        # on pennies the seats matter; simulate the rival on the column seat
        from opencomp import pennies
        source = "match sim(opp, self, 30) { halted(k) => k | exhausted => const 2 }"
        result = evaluate(
            source,
            env_for(opponent="const 2", me=source, game=pennies(), side=Side.ROW),
        )
        assert result.strategy == 2

    def test_sim_self_spirals_into_exhaustion(self):
        source = "match sim(self, opp, rest) { halted(k) => k | exhausted => const 1 }"
        result = evaluate(source, env_for(opponent="const 1", me=source, fuel=300))
        assert result.kind is EvalKind.FUEL_EXHAUSTED
        assert result.fuel_used == 300

    def test_mutual_simulation_burns_all_fuel(self):
        result = evaluate(
            EXPLOITER_SOURCE,
            env_for(opponent=EXPLOITER_SOURCE, me=EXPLOITER_SOURCE, fuel=2000),
        )
        assert result.kind is EvalKind.FUEL_EXHAUSTED
        assert result.fuel_used == 2000

    def test_nested_budgets_are_clipped_by_the_parent(self):
        # child asks for 500 but the top level only has 40
        source = "match sim(opp, self, 500) { halted(k) => const 1 | exhausted => const 2 }"
        result = evaluate(source, env_for(opponent="grow", me=source, fuel=40))
        assert result.kind is EvalKind.FUEL_EXHAUSTED
        assert result.fuel_used == 40

    def test_rebinding_shadows_outer_variable(self):
        source = (
            'match sim("const 2", opp, 10) { halted(k) => '
            'match sim("const 3", opp, 10) { halted(k) => k | exhausted => const 9 } '
            '| exhausted => const 9 }'
        )
        result = evaluate(source, env_for())
        assert result.strategy == 3


class TestFaults:
    def test_unbound_identifier(self):
        with pytest.raises(RuntimeFault) as err:
            evaluate("k", env_for())
        assert err.value.fuel_used == 1

    def test_bestresp_out_of_range(self):
        with pytest.raises(RuntimeFault):
            evaluate("bestresp(const 9)", env_for())

    def test_bestresp_on_sim_outcome(self):
        with pytest.raises(RuntimeFault):
            evaluate("bestresp(sim(opp, self, 10))", env_for(opponent="const 1"))

    def test_match_on_plain_integer(self):
        with pytest.raises(RuntimeFault):
            evaluate(
                "match const 1 { halted(k) => k | exhausted => const 1 }",
                env_for(),
            )

    def test_comparison_on_sim_outcome(self):
        with pytest.raises(RuntimeFault):
            evaluate(
                "if sim(opp, self, 10) == 1 then const 1 else const 2",
                env_for(opponent="const 1"),
            )

    def test_sim_outcome_as_final_value(self):
        with pytest.raises(RuntimeFault):
            evaluate("sim(opp, self, 10)", env_for(opponent="const 1"))

    def test_fault_reports_fuel(self):
        try:
            evaluate("bestresp(const 9)", env_for())
        except RuntimeFault as fault:
            assert 0 < fault.fuel_used <= 3


class TestEnvValidation:
    def test_negative_fuel(self):
        with pytest.raises(ValueError):
            env_for(fuel=-1)

    def test_zero_memory_cap(self):
        with pytest.raises(ValueError):
            env_for(memory_cap=0)


_OPPONENTS = st.sampled_from(["const 1", "const 2", "loop", "grow", EXPLOITER_SOURCE])


def _outcome_key(program, env):
    """Collapse an evaluation to a comparable summary, faults included."""
    try:
        result = evaluate(program, env)
    except RuntimeFault:
        return ("fault",)
    if result.kind is EvalKind.HALTED:
        return ("halted", result.strategy)
    if result.kind is EvalKind.PROVEN_NONHALTING:
        return ("proven", result.witness)
    return ("exhausted",)


class TestMachineProperties:
    @given(program_trees, _OPPONENTS, st.integers(0, 300))
    @settings(max_examples=120, deadline=None)
    def test_fuel_used_never_exceeds_fuel(self, tree, opponent, fuel):
        source = pretty(tree)
        env = env_for(opponent=opponent, me=source, fuel=fuel)
        try:
            result = evaluate(source, env)
        except RuntimeFault as fault:
            assert fault.fuel_used <= fuel
            return
        assert result.fuel_used <= fuel
        if result.kind is EvalKind.FUEL_EXHAUSTED:
            assert result.fuel_used == fuel

    @given(program_trees, _OPPONENTS, st.integers(0, 200), st.integers(1, 400))
    @settings(max_examples=120, deadline=None)
    def test_settled_results_are_fuel_monotone(self, tree, opponent, fuel, extra):
        source = pretty(tree)
        low = _outcome_key(source, env_for(opponent=opponent, me=source, fuel=fuel))
        high = _outcome_key(
            source, env_for(opponent=opponent, me=source, fuel=fuel + extra)
        )
        if low != ("exhausted",):
            assert high == low

    @given(program_trees, _OPPONENTS, st.integers(1, 200))
    @settings(max_examples=100, deadline=None)
    def test_proofs_are_sound_at_ten_times_the_fuel(self, tree, opponent, fuel):
        source = pretty(tree)
        witness = prove_nonhalt(
            source, env_for(opponent=opponent, me=source, fuel=fuel)
        )
        if witness is None:
            return
        check = _outcome_key(
            source, env_for(opponent=opponent, me=source, fuel=10 * fuel)
        )
        assert check[0] != "halted"
        assert check == ("proven", witness)

    @given(program_trees, _OPPONENTS, st.integers(0, 300))
    @settings(max_examples=80, deadline=None)
    def test_evaluation_is_repeatable(self, tree, opponent, fuel):
        source = pretty(tree)
        env = env_for(opponent=opponent, me=source, fuel=fuel)
        assert _outcome_key(source, env) == _outcome_key(source, env)
