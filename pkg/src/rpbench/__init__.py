"""Replacement shortest paths: exact baselines, a divide-and-conquer solver,
and two sampling-based solvers, plus a small benchmarking harness."""

from .algorithms import (
    CircumventInstance,
    FlankChain,
    RestrictedGraph,
    SamplingParams,
    alg1_apsp_rp,
    alg2_dc_rp,
    alg3_sampling_rp,
    alg4_recursive_rp,
    build_restricted_graph,
    contract_flank,
    derive_seed,
    oracle_rp,
    process_subpath,
    recursive_circumvent,
    sample_hitting_set,
)
from .detours import (
    CandidateList,
    DetourCandidate,
    ReplacementResult,
    SplitGraph,
    build_split_graph,
    candidate_from_detour,
    direct_assign,
    sweep_assign,
)
from .errors import (
    DimensionMismatchError,
    EntryOutOfBoundError,
    GenerationExhaustedError,
    IdOutOfRangeError,
    MalformedHeaderError,
    MismatchError,
    NegativeCycleError,
    RPError,
    SelfLoopError,
    UnreachableError,
    WeightOutOfRangeError,
)
from .generate import generate_graph
from .graph import (
    INF,
    DistanceVector,
    Graph,
    Path,
    PrefixTable,
    prefix_distances,
    shortest_st_path,
    sssp,
)
from .graphio import parse_graph, write_graph
from .minplus import (
    MinPlusMatrix,
    bounded_distance_matrix,
    cap_entries,
    minplus_closure,
    minplus_product,
    minplus_via_scaling,
    weight_matrix,
)
from .report import AlgorithmRun, Report, render_json

__version__ = "0.1.0"

__all__ = [
    "AlgorithmRun",
    "CandidateList",
    "CircumventInstance",
    "DetourCandidate",
    "DimensionMismatchError",
    "DistanceVector",
    "EntryOutOfBoundError",
    "FlankChain",
    "GenerationExhaustedError",
    "Graph",
    "IdOutOfRangeError",
    "INF",
    "MalformedHeaderError",
    "MinPlusMatrix",
    "MismatchError",
    "NegativeCycleError",
    "Path",
    "PrefixTable",
    "Report",
    "ReplacementResult",
    "RestrictedGraph",
    "RPError",
    "SamplingParams",
    "SelfLoopError",
    "SplitGraph",
    "UnreachableError",
    "WeightOutOfRangeError",
    "alg1_apsp_rp",
    "alg2_dc_rp",
    "alg3_sampling_rp",
    "alg4_recursive_rp",
    "build_restricted_graph",
    "build_split_graph",
    "candidate_from_detour",
    "cap_entries",
    "contract_flank",
    "derive_seed",
    "direct_assign",
    "generate_graph",
    "minplus_closure",
    "minplus_product",
    "minplus_via_scaling",
    "bounded_distance_matrix",
    "oracle_rp",
    "parse_graph",
    "prefix_distances",
    "process_subpath",
    "recursive_circumvent",
    "render_json",
    "sample_hitting_set",
    "shortest_st_path",
    "sssp",
    "sweep_assign",
    "weight_matrix",
    "write_graph",
]
