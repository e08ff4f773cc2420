"""
Lattice Package
Exports para el retículo de subgrupos normales de GL_cf(ℕ, K)
"""

from .nodes import (
    LatticeNode,
    EdgeKind,
    HASSE_EDGES,
    PAPER_LABELS,
    GraphEdge,
    LatticeGraph,
    leq,
    join,
    meet,
    covers,
    edge_kind,
    quotient_type,
    check_partial_order,
    lattice_graph,
)
from .descriptors import (
    DescriptorVariant,
    NormalSubgroupDescriptor,
    descriptor_for_node,
    node_of_descriptor,
    descriptor_leq,
    descriptor_join,
)
from .classification import (
    classify_minimal_node,
    quotient_image,
    normal_closure,
    descriptor_contains,
    predicted_window_set,
)

__all__ = [
    # Nodes
    "LatticeNode",
    "EdgeKind",
    "HASSE_EDGES",
    "PAPER_LABELS",
    "GraphEdge",
    "LatticeGraph",
    "leq",
    "join",
    "meet",
    "covers",
    "edge_kind",
    "quotient_type",
    "check_partial_order",
    "lattice_graph",
    # Descriptors
    "DescriptorVariant",
    "NormalSubgroupDescriptor",
    "descriptor_for_node",
    "node_of_descriptor",
    "descriptor_leq",
    "descriptor_join",
    # Classification
    "classify_minimal_node",
    "quotient_image",
    "normal_closure",
    "descriptor_contains",
    "predicted_window_set",
]
