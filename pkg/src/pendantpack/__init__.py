"""Exact packing of internally-disjoint pendant Steiner trees in digraphs."""

from .bounds import (
    BoundsReport,
    NordhausGaddumReport,
    bound_cut,
    bound_semidegree,
    bounds_report,
    nordhaus_gaddum_check,
    spec_cut_value,
    zero_rule,
)
from .digraph import (
    DegreeSummary,
    Digraph,
    GraphError,
    build_digraph,
    complement,
    degree_summary,
    is_connected,
    is_eulerian,
    is_symmetric,
)
from .gadgets import (
    GadgetInstance,
    Provenance,
    amplifier_copy_count,
    gadget_amplifier,
    gadget_cllm,
    gadget_eulerian,
    gadget_hypergraph,
)
from .generators import FAMILIES, bidirected_complete, family_predicate, generate
from .oracles import (
    Hypergraph,
    LinkageQuery,
    TripartiteInstance,
    build_hypergraph,
    build_tripartite,
    cllm_solve,
    constrained_disjoint_paths,
    directed_two_linkage,
    hypergraph_two_coloring,
    vertex_connectivity,
)
from .solvers import (
    SearchStats,
    SolveResult,
    TauKResult,
    all_terminal_specs,
    decide_tau_symmetric,
    packing_upper_bound,
    solve_tau_k,
    solve_tau_sr,
)
from .trees import (
    Packing,
    PendantTree,
    Skeleton,
    TerminalSpec,
    ValidationResult,
    check_terminal_spec,
    enumerate_pendant_trees,
    enumerate_skeletons,
    make_spec,
    validate_packing,
    validate_pendant_tree,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "DegreeSummary",
    "Digraph",
    "FAMILIES",
    "GadgetInstance",
    "GraphError",
    "Hypergraph",
    "LinkageQuery",
    "NordhausGaddumReport",
    "Packing",
    "PendantTree",
    "Provenance",
    "SearchStats",
    "Skeleton",
    "SolveResult",
    "TauKResult",
    "TerminalSpec",
    "TripartiteInstance",
    "ValidationResult",
    "all_terminal_specs",
    "amplifier_copy_count",
    "bidirected_complete",
    "bound_cut",
    "bound_semidegree",
    "bounds_report",
    "build_digraph",
    "build_hypergraph",
    "build_tripartite",
    "check_terminal_spec",
    "cllm_solve",
    "complement",
    "constrained_disjoint_paths",
    "decide_tau_symmetric",
    "degree_summary",
    "directed_two_linkage",
    "enumerate_pendant_trees",
    "enumerate_skeletons",
    "family_predicate",
    "gadget_amplifier",
    "gadget_cllm",
    "gadget_eulerian",
    "gadget_hypergraph",
    "generate",
    "hypergraph_two_coloring",
    "is_connected",
    "is_eulerian",
    "is_symmetric",
    "make_spec",
    "nordhaus_gaddum_check",
    "packing_upper_bound",
    "solve_tau_k",
    "solve_tau_sr",
    "spec_cut_value",
    "validate_packing",
    "validate_pendant_tree",
    "vertex_connectivity",
    "zero_rule",
]
