"""Bipartite walk operators, their generators, and transfer scans."""

from ._core import (
    BipartiteGraph,
    ComponentStructure,
    EmbeddedGraph,
    EquivalenceReport,
    Error,
    Hamiltonian,
    HDigraph,
    IsFormResult,
    PermutationReport,
    PstEvent,
    PstScanReport,
    SimpleGraph,
    SkewIdentityReport,
    SpectralComponent,
    SpectralDecomposition,
    StructureReport,
    UpstGraph,
    UpstSchedule,
    WalkOperator,
    WeightedArc,
    build_walk,
    check_arc_reversal,
    check_vertex_face,
    classify,
    continuous_evolve,
    crown_graph,
    cycle_graph,
    discrete_pst_scan,
    evolve,
    from_edge_list,
    h_digraph,
    is_form,
    kn_embedding,
    path_graph,
    permutation_report,
    principal_hamiltonian,
    skew_identity_check,
    spectral_decomposition,
    trace_faces,
    upst_generate,
    upst_verify,
    upst_weight,
    vertex_face_walk,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "ComponentStructure",
    "EmbeddedGraph",
    "EquivalenceReport",
    "Error",
    "Hamiltonian",
    "HDigraph",
    "IsFormResult",
    "PermutationReport",
    "PstEvent",
    "PstScanReport",
    "SimpleGraph",
    "SkewIdentityReport",
    "SpectralComponent",
    "SpectralDecomposition",
    "StructureReport",
    "UpstGraph",
    "UpstSchedule",
    "WalkOperator",
    "WeightedArc",
    "build_walk",
    "check_arc_reversal",
    "check_vertex_face",
    "classify",
    "continuous_evolve",
    "crown_graph",
    "cycle_graph",
    "discrete_pst_scan",
    "evolve",
    "from_edge_list",
    "h_digraph",
    "is_form",
    "kn_embedding",
    "path_graph",
    "permutation_report",
    "principal_hamiltonian",
    "skew_identity_check",
    "spectral_decomposition",
    "trace_faces",
    "upst_generate",
    "upst_verify",
    "upst_weight",
    "vertex_face_walk",
]
