"""Workbench for locally checkable colorings on automaton-presented trees.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its surface.
"""

from ._core import (  # noqa: F401
    BranchWitness,
    Error,
    FDecision,
    LocalProblem,
    StructuredGraph,
    TreeAutomaton,
    Verdict,
    ball_type,
    branch_prefix,
    build_component,
    component_colorable,
    decide_f,
    decode,
    encode,
    enumerate_automata,
    exhaustive_oracle,
    export_dot,
    extract_branch,
    k_of,
    lenient_checked_set,
    lift_problem,
    membership,
    pi_coloring_for_component,
    pi_problem,
    problem_by_name,
    proper_coloring_problem,
    sigma_coloring_from_branch,
    sigma_problem,
    solve_finite_palette,
    truncate,
    validate_pruned,
    verify,
    vertex_orders,
)

__all__ = [
    "BranchWitness",
    "Error",
    "FDecision",
    "LocalProblem",
    "StructuredGraph",
    "TreeAutomaton",
    "Verdict",
    "ball_type",
    "branch_prefix",
    "build_component",
    "component_colorable",
    "decide_f",
    "decode",
    "encode",
    "enumerate_automata",
    "exhaustive_oracle",
    "export_dot",
    "extract_branch",
    "k_of",
    "lenient_checked_set",
    "lift_problem",
    "membership",
    "pi_coloring_for_component",
    "pi_problem",
    "problem_by_name",
    "proper_coloring_problem",
    "sigma_coloring_from_branch",
    "sigma_problem",
    "solve_finite_palette",
    "truncate",
    "validate_pruned",
    "verify",
    "vertex_orders",
]
