"""Constrained random graph process for minor-closed classes: simulation,
analytic predictions, and the verification machinery around them."""

from .analytic import (
    AcceptedCurvePoint,
    CurvePoint,
    SolverConfig,
    accepted_density,
    accepted_density_slope,
    inverse_accepted_density,
    predictions,
    predictions_by_accepted,
    survival_prob,
)
from .constraints import ConstraintOracle, axiom_check, get_oracle
from .engine import MembershipEngine
from .graphs import (
    ComponentTracker,
    Graph,
    PendantForest,
    excess,
    largest_component,
    max_degree,
    pendant_tree_decomposition,
    read_edge_list,
    two_core,
    write_edge_list,
)
from .minors import has_minor
from .process import (
    ProcessConfig,
    ProcessTrace,
    StopRule,
    classify_queries,
    count_forbidden_addable,
    max_class_edges,
    random_greedy,
    run,
    steps_until_accepted,
)
from .structure import (
    Decomposition,
    WeightedGraph,
    bruteforce_max_weight_clique_free,
    turan_lower_bound,
    weighted_decomposition,
)
from .sweep import SweepConfig, run_sweep

__all__ = [
    "AcceptedCurvePoint",
    "ComponentTracker",
    "ConstraintOracle",
    "CurvePoint",
    "Decomposition",
    "Graph",
    "MembershipEngine",
    "PendantForest",
    "ProcessConfig",
    "ProcessTrace",
    "SolverConfig",
    "StopRule",
    "SweepConfig",
    "WeightedGraph",
    "accepted_density",
    "accepted_density_slope",
    "axiom_check",
    "bruteforce_max_weight_clique_free",
    "classify_queries",
    "count_forbidden_addable",
    "excess",
    "get_oracle",
    "has_minor",
    "inverse_accepted_density",
    "largest_component",
    "max_class_edges",
    "max_degree",
    "pendant_tree_decomposition",
    "predictions",
    "predictions_by_accepted",
    "random_greedy",
    "read_edge_list",
    "run",
    "run_sweep",
    "steps_until_accepted",
    "survival_prob",
    "turan_lower_bound",
    "two_core",
    "weighted_decomposition",
    "write_edge_list",
]
