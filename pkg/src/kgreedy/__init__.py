"""Greedy approximation algorithms for project crashing and k-fold
longest-increasing-subsequence extraction, with exact brute-force oracles,
instance generators, and a ratio-experiment harness."""

from .crashing import (
    DecompositionTrace,
    GreedyCrashResult,
    cost_ratio_bound,
    decompose,
    greedy_crash,
    optimal_one_crash,
    verify_trace,
)
from .flow import UNBOUNDED, Arc, CutResult, FlowGraph, max_flow_value, min_cut
from .generators import (
    RandomNetSpec,
    counterexample_network,
    matrix_optimal_parts,
    matrix_sequence,
    random_network,
    random_sequence,
    with_convex_schedules,
)
from .klis import (
    SubseqSelection,
    TieBreak,
    greedy_klis,
    greedy_klis_scripted,
    lis,
    total_ratio_bound,
)
from .network import (
    Edge,
    Plan,
    ProjectNetwork,
    apply_plan,
    critical_graph,
    duration,
    full_plan,
    is_k_crashing,
    k_max,
    linear_schedule,
    plan_cost,
    validate,
)
from .oracle import OracleBudget, exact_crash_cost, exact_klis, exact_lis_length

__all__ = [
    "Arc",
    "CutResult",
    "DecompositionTrace",
    "Edge",
    "FlowGraph",
    "GreedyCrashResult",
    "OracleBudget",
    "Plan",
    "ProjectNetwork",
    "RandomNetSpec",
    "SubseqSelection",
    "TieBreak",
    "UNBOUNDED",
    "apply_plan",
    "cost_ratio_bound",
    "counterexample_network",
    "critical_graph",
    "decompose",
    "duration",
    "exact_crash_cost",
    "exact_klis",
    "exact_lis_length",
    "full_plan",
    "greedy_crash",
    "greedy_klis",
    "greedy_klis_scripted",
    "is_k_crashing",
    "k_max",
    "linear_schedule",
    "lis",
    "matrix_optimal_parts",
    "matrix_sequence",
    "max_flow_value",
    "min_cut",
    "optimal_one_crash",
    "plan_cost",
    "random_network",
    "random_sequence",
    "total_ratio_bound",
    "validate",
    "verify_trace",
    "with_convex_schedules",
]
