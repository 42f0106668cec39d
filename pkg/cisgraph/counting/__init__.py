"""
Enumeration and counting of connected induced subgraphs: streams, per order
profiles, anchored counts, the rooted subtree product for trees and cut vertices.
"""
from cisgraph.counting.cut_vertices import (
    articulation_points,
    is_biconnected,
    non_cut_vertex_count,
)
from cisgraph.counting.enumeration import enumerate_cis, iter_cis_masks, per_order_counts
from cisgraph.counting.profile import (
    CountProfile,
    count_by_deletion,
    count_containing,
    count_containing_pair,
    count_profile,
    naive_count_profile,
)
from cisgraph.counting.query import AnchorMode, AnchorQuery
from cisgraph.counting.trees import rooted_subtree_count, subtree_count

__all__ = [
    "AnchorMode",
    "AnchorQuery",
    "CountProfile",
    "articulation_points",
    "count_by_deletion",
    "count_containing",
    "count_containing_pair",
    "count_profile",
    "enumerate_cis",
    "is_biconnected",
    "iter_cis_masks",
    "naive_count_profile",
    "non_cut_vertex_count",
    "per_order_counts",
    "rooted_subtree_count",
    "subtree_count",
]
