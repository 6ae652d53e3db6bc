"""Certifying graph algorithms.

Solvers return each answer together with a witness; checkers decide,
exactly and in exact arithmetic, whether a witness proves its answer;
brute-force oracles provide independent ground truth for testing both.
Accepting a checker run means the answer is correct regardless of how the
solver computed it.
"""

from .connectivity import (
    ConnectivityTriple,
    ConnectivityWitness,
    CutWitness,
    SpanningTreeWitness,
    check_connectivity,
    check_cut,
    check_parent_num,
    check_r,
)
from .extnat import INFINITY, ExtNat
from .formats import (
    LengthMismatchError,
    ParseError,
    WellformednessError,
    parse_connectivity_witness,
    parse_gcd_line,
    parse_graph,
    parse_matching_witness,
    parse_sp_witness,
    serialize_connectivity_witness,
    serialize_gcd,
    serialize_graph,
    serialize_matching_witness,
    serialize_sp_witness,
)
from .gcd import GcdTriple, check_gcd
from .graph import (
    Edge,
    Graph,
    has_no_duplicate_edges,
    has_no_duplicate_edges_undirected,
    has_no_self_loops,
    is_edge_undirected,
    is_path,
    is_walk,
    path_cost,
    wellformed,
)
from .matching import (
    MatchingTriple,
    MatchingWitness,
    check_matching,
    check_max_matching,
    check_osc,
    check_subset,
    weight,
)
from .oracles import (
    InstanceTooLargeError,
    eval_witness_predicate,
    oracle_connected,
    oracle_max_matching_size,
    oracle_mu,
)
from .shortest_paths import (
    SpTriple,
    SpWitness,
    check_just,
    check_no_path,
    check_shortest_paths,
    check_start_val,
    check_trian,
)
from .solvers import (
    EmptyGraphError,
    SolverResult,
    SourceOutOfRangeError,
    solve_connectivity,
    solve_gcd,
    solve_max_matching,
    solve_shortest_paths,
)
from .verdict import ACCEPT, PreconditionError, Verdict, reject

__all__ = [
    "ACCEPT",
    "ConnectivityTriple",
    "ConnectivityWitness",
    "CutWitness",
    "Edge",
    "EmptyGraphError",
    "ExtNat",
    "GcdTriple",
    "Graph",
    "INFINITY",
    "InstanceTooLargeError",
    "LengthMismatchError",
    "MatchingTriple",
    "MatchingWitness",
    "ParseError",
    "PreconditionError",
    "SolverResult",
    "SourceOutOfRangeError",
    "SpTriple",
    "SpWitness",
    "SpanningTreeWitness",
    "Verdict",
    "WellformednessError",
    "check_connectivity",
    "check_cut",
    "check_gcd",
    "check_just",
    "check_matching",
    "check_max_matching",
    "check_no_path",
    "check_osc",
    "check_parent_num",
    "check_r",
    "check_shortest_paths",
    "check_start_val",
    "check_subset",
    "check_trian",
    "eval_witness_predicate",
    "has_no_duplicate_edges",
    "has_no_duplicate_edges_undirected",
    "has_no_self_loops",
    "is_edge_undirected",
    "is_path",
    "is_walk",
    "oracle_connected",
    "oracle_max_matching_size",
    "oracle_mu",
    "parse_connectivity_witness",
    "parse_gcd_line",
    "parse_graph",
    "parse_matching_witness",
    "parse_sp_witness",
    "path_cost",
    "reject",
    "serialize_connectivity_witness",
    "serialize_gcd",
    "serialize_graph",
    "serialize_matching_witness",
    "serialize_sp_witness",
    "solve_connectivity",
    "solve_gcd",
    "solve_max_matching",
    "solve_shortest_paths",
    "wellformed",
    "weight",
]
