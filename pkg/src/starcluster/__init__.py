"""Star-cluster reductions of hypergraph independence complexes."""

from .cycles import (
    BergeCycle,
    disjoint_ternary_packing,
    has_ternary_berge_cycle,
    is_induced,
    vertex_in_induced_3cycle,
)
from .homology import (
    FaceSet,
    HomologyProfile,
    betti,
    enumerate_faces,
    euler_from_independent_sets,
    join_betti_check,
    mv_inequality_check,
)
from .hypergraph import (
    Hypergraph,
    NormalizationReport,
    cycle_graph,
    disjoint_union,
    lk_expand,
    normalize,
    random_hypergraph,
    tight_path,
)
from .reduction import (
    ReductionTrace,
    edge_gadget,
    graphify,
    hv_edge_check,
    reduce_pipeline,
    star_cluster_reduce,
)

__version__ = "0.1.0"

__all__ = [
    "BergeCycle",
    "disjoint_ternary_packing",
    "has_ternary_berge_cycle",
    "is_induced",
    "vertex_in_induced_3cycle",
    "FaceSet",
    "HomologyProfile",
    "betti",
    "enumerate_faces",
    "euler_from_independent_sets",
    "join_betti_check",
    "mv_inequality_check",
    "Hypergraph",
    "NormalizationReport",
    "cycle_graph",
    "disjoint_union",
    "lk_expand",
    "normalize",
    "random_hypergraph",
    "tight_path",
    "ReductionTrace",
    "edge_gadget",
    "graphify",
    "hv_edge_check",
    "reduce_pipeline",
    "star_cluster_reduce",
]
