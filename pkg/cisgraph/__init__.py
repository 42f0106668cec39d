"""
The `cisgraph` package counts and enumerates the connected induced subgraphs
of small simple graphs.

Next to the counting engine it ships:

*  closed form totals of named families (paths, stars, cycles, tadpoles, ...)
and the extremal bounds over trees, unicyclic graphs and graphs with r components
*  an isomorphism free atlas of small graphs by class, built by orderly generation
*  exhaustive extremal scans and a harness verifying every bound on all graphs
up to configurable orders

Counts are exact python integers, graphs are immutable bitmask adjacency tuples.
"""
from cisgraph.atlas import (  # noqa: I100
    GraphClass,
    canonical_form,
    catalog,
    generate,
    is_isomorphic,
)
from cisgraph.counting import (
    AnchorQuery,
    CountProfile,
    count_by_deletion,
    count_containing,
    count_containing_pair,
    count_profile,
    enumerate_cis,
    naive_count_profile,
    non_cut_vertex_count,
    subtree_count,
)
from cisgraph.exceptions import (
    ArgumentsError,
    CapacityExceededError,
    CisGraphException,
    DisconnectedGraphError,
    EdgeListFormatError,
    EmptyVertexSetError,
    Graph6FormatError,
    GraphDefinitionError,
    NoClosedFormError,
    NotATreeError,
    ParameterRangeError,
    SignalDefinitionError,
    UncharacterizedError,
    UnsupportedClassError,
)
from cisgraph.formulas import (
    BoundId,
    BoundSpec,
    Objective,
    bound_value,
    closed_form_total,
    expected_extremizers,
)
from cisgraph.graphs import (
    Family,
    FamilySpec,
    Graph,
    VertexSet,
    construct,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)
from cisgraph.scan import (
    Caps,
    ScanReport,
    VerificationReport,
    extremal_scan,
    verify_theorems,
)
from cisgraph.signals import Signal

__version__ = "0.1.0"
__all__ = [
    "AnchorQuery",
    "ArgumentsError",
    "BoundId",
    "BoundSpec",
    "Caps",
    "CapacityExceededError",
    "CisGraphException",
    "CountProfile",
    "DisconnectedGraphError",
    "EdgeListFormatError",
    "EmptyVertexSetError",
    "Family",
    "FamilySpec",
    "Graph",
    "Graph6FormatError",
    "GraphClass",
    "GraphDefinitionError",
    "NoClosedFormError",
    "NotATreeError",
    "Objective",
    "ParameterRangeError",
    "ScanReport",
    "Signal",
    "SignalDefinitionError",
    "UncharacterizedError",
    "UnsupportedClassError",
    "VerificationReport",
    "VertexSet",
    "bound_value",
    "canonical_form",
    "catalog",
    "closed_form_total",
    "construct",
    "count_by_deletion",
    "count_containing",
    "count_containing_pair",
    "count_profile",
    "emit_graph6",
    "enumerate_cis",
    "expected_extremizers",
    "extremal_scan",
    "generate",
    "is_isomorphic",
    "naive_count_profile",
    "non_cut_vertex_count",
    "parse_edge_list",
    "parse_graph6",
    "subtree_count",
    "verify_theorems",
]
