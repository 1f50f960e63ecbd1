"""Win/draw/loss games, intransitivity, and learners that read each other.

The package has three layers.  ``game_core`` and ``classify`` handle finite
zero-sum tables: parsing, classification (domination, strong
intransitivity), pure equilibria, beats-cycles.  ``dsl`` and ``arena`` run
the competition side: a small strategy language whose programs can simulate
their opponent's published source under a fuel budget, plus match and
tournament adjudication.  ``series``, ``mixed`` and ``crosstable`` cover
aggregation, fictitious play, and empirical score tables.  ``bundled`` and
``demos`` carry the stock examples.
"""
from .arena import (
    Learner,
    MatchRecord,
    MatchResult,
    Mode,
    ProgramLearner,
    SideOutcome,
    SideRecord,
    TournamentReport,
    adjudicate,
    render_match,
    render_report,
    run_match,
    run_tournament,
)
from .bundled import (
    CATALOG,
    ENGINES3_TEXT,
    EXPLOITER_SOURCE,
    MIRROR_SOURCE,
    catalog_learners,
    catalog_source,
    dice,
    pennies,
    rps,
)
from .classify import (
    Classification,
    ClassKind,
    NashCell,
    SIWitnesses,
    best_response,
    classify,
    find_cycles,
    find_dominator,
    is_strongly_intransitive,
    pure_nash,
    render_classification,
    render_cycles,
)
from .crosstable import Crosstable, ingest_crosstable, parse_crosstable, to_game
from .demos import (
    ORACLE_SOURCE,
    OracleWinner,
    build_defiance,
    build_exploiter,
    demo_exploiter,
    demo_exploiter_exploited,
    demo_no_universal,
    demo_oracle,
    run_all_demos,
)
from .dsl import (
    DEFAULT_MEMORY_CAP,
    EvalEnv,
    EvalKind,
    EvalResult,
    StrategyProgram,
    evaluate,
    parse_learner_file,
    parse_program,
    pretty,
    prove_nonhalt,
)
from .errors import (
    ComplementarityViolation,
    InvariantError,
    NotSymmetricError,
    ParseError,
    RuntimeFault,
    ShapeMismatchError,
)
from .game_core import (
    MAX_STRATEGIES,
    GameTable,
    Outcome,
    Side,
    enumerate_game_count,
    is_symmetric,
    outcome,
    parse_game,
    role_swapped,
    serialize_game,
)
from .mixed import (
    FictitiousPlayResult,
    MixedStrategy,
    expected_payoff,
    exploitability,
    fictitious_play,
)
from .series import Aggregator, compose_series

__version__ = "0.1.0"

__all__ = [
    "Aggregator",
    "CATALOG",
    "Classification",
    "ClassKind",
    "ComplementarityViolation",
    "Crosstable",
    "DEFAULT_MEMORY_CAP",
    "ENGINES3_TEXT",
    "EXPLOITER_SOURCE",
    "EvalEnv",
    "EvalKind",
    "EvalResult",
    "FictitiousPlayResult",
    "GameTable",
    "InvariantError",
    "Learner",
    "MatchRecord",
    "MatchResult",
    "MAX_STRATEGIES",
    "MIRROR_SOURCE",
    "MixedStrategy",
    "Mode",
    "NashCell",
    "NotSymmetricError",
    "ORACLE_SOURCE",
    "OracleWinner",
    "Outcome",
    "ParseError",
    "ProgramLearner",
    "RuntimeFault",
    "ShapeMismatchError",
    "Side",
    "SideOutcome",
    "SideRecord",
    "SIWitnesses",
    "StrategyProgram",
    "TournamentReport",
    "adjudicate",
    "best_response",
    "build_defiance",
    "build_exploiter",
    "catalog_learners",
    "catalog_source",
    "classify",
    "compose_series",
    "demo_exploiter",
    "demo_exploiter_exploited",
    "demo_no_universal",
    "demo_oracle",
    "dice",
    "enumerate_game_count",
    "evaluate",
    "expected_payoff",
    "exploitability",
    "fictitious_play",
    "find_cycles",
    "find_dominator",
    "ingest_crosstable",
    "is_strongly_intransitive",
    "is_symmetric",
    "outcome",
    "parse_crosstable",
    "parse_game",
    "parse_learner_file",
    "parse_program",
    "pennies",
    "pretty",
    "prove_nonhalt",
    "pure_nash",
    "render_classification",
    "render_cycles",
    "render_match",
    "render_report",
    "role_swapped",
    "rps",
    "run_all_demos",
    "run_match",
    "run_tournament",
    "serialize_game",
    "to_game",
]
