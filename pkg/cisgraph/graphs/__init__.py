"""
Graph representation: bitmask backed Graph and VertexSet, graph6 and edge list
codecs, vertex surgery and constructors of the named graph families.
"""
from cisgraph.graphs.families import (
    CONSTRUCTORS,
    FAMILY_PARAMETERS,
    Family,
    FamilySpec,
    construct,
)
from cisgraph.graphs.graph import (
    Graph,
    MAX_ORDER,
    connected_components,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_connected,
    mask_is_connected,
)
from cisgraph.graphs.graph6 import (
    emit_edge_list,
    emit_graph6,
    iter_graphs,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    read_graphs,
)
from cisgraph.graphs.vertexset import VertexSet, iter_bits, popcount

__all__ = [
    "CONSTRUCTORS",
    "FAMILY_PARAMETERS",
    "Family",
    "FamilySpec",
    "Graph",
    "MAX_ORDER",
    "VertexSet",
    "connected_components",
    "construct",
    "delete_vertex",
    "disjoint_union",
    "emit_edge_list",
    "emit_graph6",
    "induced_subgraph",
    "is_connected",
    "iter_bits",
    "iter_graphs",
    "mask_is_connected",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
    "popcount",
    "read_graphs",
]
