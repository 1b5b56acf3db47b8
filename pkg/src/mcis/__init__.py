"""Exact maximum common induced subgraph solving with symmetry pruning."""

from .graph import (
    Graph,
    GraphParseError,
    induced_subgraph,
    is_isomorphism,
    parse_edgelist,
    parse_lad,
    to_edgelist,
    to_lad,
)
from .symmetry import (
    NeighborhoodKey,
    SymmetryClasses,
    are_symmetric,
    compute_symmetry_classes,
    negative_neighborhood,
    positive_neighborhood,
    verify_swap_automorphism,
)
from .solver import (
    CONFIG_NAMES,
    Bidomain,
    SearchStats,
    Solution,
    SolverConfig,
    initial_partition,
    order_values,
    refine_partition,
    select_bidomain,
    select_vertex,
    solve,
    upper_bound,
    val_sym_prunable,
    value_order_ranks,
    var_sym_prunable,
)
from .oracle import OracleResult, brute_force_mcis
from .bench import InstanceReport, aggregate_reports, run_batch, run_instance

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphParseError",
    "parse_lad",
    "parse_edgelist",
    "to_lad",
    "to_edgelist",
    "induced_subgraph",
    "is_isomorphism",
    "NeighborhoodKey",
    "SymmetryClasses",
    "compute_symmetry_classes",
    "negative_neighborhood",
    "positive_neighborhood",
    "are_symmetric",
    "verify_swap_automorphism",
    "Bidomain",
    "SolverConfig",
    "SearchStats",
    "Solution",
    "CONFIG_NAMES",
    "solve",
    "initial_partition",
    "upper_bound",
    "select_bidomain",
    "select_vertex",
    "order_values",
    "var_sym_prunable",
    "val_sym_prunable",
    "refine_partition",
    "value_order_ranks",
    "OracleResult",
    "brute_force_mcis",
    "InstanceReport",
    "run_instance",
    "run_batch",
    "aggregate_reports",
]
