"""Search and verification toolkit for Hajos constructions of the symmetric 5-cycle."""

from hajos_ga._core import (
    ArcRef,
    ConstructionScript,
    Digraph,
    FitnessBreakdown,
    GaConfig,
    NotIndependentError,
    OpCount,
    PairCounts,
    ReplayError,
    RunResult,
    ScriptParseError,
    StatsRecord,
    TooLargeError,
    are_independent,
    color_class_acyclic,
    complete_symmetric,
    delete_vertex,
    dichromatic_number,
    directed_cycle,
    fitness,
    hajos_join,
    identify,
    is_isomorphic,
    is_r_critical,
    mixed_triangle_count,
    op_count,
    paper_script,
    pair_counts,
    parse_digraph,
    parse_script,
    replay_script,
    run_ga,
    serialize_digraph,
    serialize_script,
    stats_csv_header,
    stats_csv_row,
    symmetric_cycle,
    symmetric_triangle_count,
    to_dot,
)

__all__ = [
    "ArcRef",
    "ConstructionScript",
    "Digraph",
    "FitnessBreakdown",
    "GaConfig",
    "NotIndependentError",
    "OpCount",
    "PairCounts",
    "ReplayError",
    "RunResult",
    "ScriptParseError",
    "StatsRecord",
    "TooLargeError",
    "are_independent",
    "color_class_acyclic",
    "complete_symmetric",
    "delete_vertex",
    "dichromatic_number",
    "directed_cycle",
    "fitness",
    "hajos_join",
    "identify",
    "is_isomorphic",
    "is_r_critical",
    "mixed_triangle_count",
    "op_count",
    "paper_script",
    "pair_counts",
    "parse_digraph",
    "parse_script",
    "replay_script",
    "run_ga",
    "serialize_digraph",
    "serialize_script",
    "stats_csv_header",
    "stats_csv_row",
    "symmetric_cycle",
    "symmetric_triangle_count",
    "to_dot",
]
