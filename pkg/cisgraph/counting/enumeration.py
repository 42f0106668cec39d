"""
Connected induced subgraph enumeration by fixed-pivot extension.

A branch owns a connected set ``S``, a candidate mask (frontier vertices that may
still join ``S``) and an exclusion mask (vertices this branch will never add).
Candidates are taken lowest id first; a taken candidate is moved to the
exclusion mask of the remaining siblings, so every connected set is reached by
exactly one branch. Pivots are processed in ascending id order and every vertex
below the pivot is excluded, the pivot is therefore the minimum of each set
grown from it.
"""
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from cisgraph.counting.query import AnchorMode, AnchorQuery
from cisgraph.graphs import Graph, VertexSet

logger = logging.getLogger(__name__)


def _grow(
    adjacency: Sequence[int],
    current: int,
    size: int,
    candidates: int,
    excluded: int,
    limit: Optional[int],
) -> Iterator[int]:
    if limit is None or size == limit:
        yield current
    if limit is not None and size >= limit:
        return
    while candidates:
        low = candidates & -candidates
        candidates ^= low
        excluded |= low
        vertex = low.bit_length() - 1
        yield from _grow(
            adjacency,
            current | low,
            size + 1,
            candidates | (adjacency[vertex] & ~excluded),
            excluded,
            limit,
        )


def _grow_counts(
    adjacency: Sequence[int],
    size: int,
    candidates: int,
    excluded: int,
    counts: List[int],
) -> None:
    counts[size] += 1
    while candidates:
        low = candidates & -candidates
        candidates ^= low
        excluded |= low
        vertex = low.bit_length() - 1
        _grow_counts(
            adjacency,
            size + 1,
            candidates | (adjacency[vertex] & ~excluded),
            excluded,
            counts,
        )


def _pivot_starts(adjacency: Sequence[int], pivot: int) -> Tuple[int, int, int]:
    excluded = (1 << (pivot + 1)) - 1
    return 1 << pivot, adjacency[pivot] & ~excluded, excluded


def iter_cis_masks(graph: Graph, query: AnchorQuery = None) -> Iterator[int]:
    """
    Streams bitmasks of the connected induced subgraphs matching the query.

    Sets of the ``any`` mode come grouped by their minimum vertex, ascending.
    Anchored modes grow every set from the first anchor.

    :param graph: host graph
    :type graph: Graph
    :param query: anchors and order filter, defaults to every set
    :type query: AnchorQuery
    :return: generator of bitmasks
    :rtype: Iterator[int]
    """
    query = query or AnchorQuery.any()
    query.validate_for(graph)
    adjacency = graph.adjacency
    limit = query.order_filter
    if limit is not None and limit > graph.order:
        return
    if query.mode == AnchorMode.ANY:
        for pivot in range(graph.order):
            start, candidates, excluded = _pivot_starts(adjacency, pivot)
            yield from _grow(adjacency, start, 1, candidates, excluded, limit)
        return
    anchor = query.anchors[0]
    excluded = 1 << anchor
    stream = _grow(adjacency, excluded, 1, adjacency[anchor], excluded, limit)
    if query.mode == AnchorMode.CONTAINING:
        yield from stream
        return
    partner = 1 << query.anchors[1]
    if not _same_component(graph, anchor, query.anchors[1]):
        logger.debug("anchors %s lie in different components", query.anchors)
        return
    for mask in stream:
        if mask & partner:
            yield mask


def _same_component(graph: Graph, u: int, v: int) -> bool:
    return any(u in part and v in part for part in graph.connected_components())


def enumerate_cis(graph: Graph, query: AnchorQuery = None) -> Iterator[VertexSet]:
    """
    Streams every connected induced subgraph of the graph matching the query,
    each exactly once, as VertexSets.

    :param graph: host graph
    :type graph: Graph
    :param query: anchors and order filter, defaults to every set
    :type query: AnchorQuery
    :return: generator of vertex sets
    :rtype: Iterator[VertexSet]
    """
    for mask in iter_cis_masks(graph, query):
        yield VertexSet(mask)


def per_order_counts(graph: Graph, anchor: int = None) -> List[int]:
    """
    Counts connected induced subgraphs per order without materializing them.

    :param graph: host graph
    :type graph: Graph
    :param anchor: optional vertex every counted set has to contain
    :type anchor: int
    :return: list where index k holds the number of sets with k vertices
    :rtype: List[int]
    """
    adjacency = graph.adjacency
    counts = [0] * (graph.order + 1)
    if anchor is not None:
        excluded = 1 << anchor
        _grow_counts(adjacency, 1, adjacency[anchor], excluded, counts)
        return counts
    for pivot in range(graph.order):
        _, candidates, excluded = _pivot_starts(adjacency, pivot)
        _grow_counts(adjacency, 1, candidates, excluded, counts)
    return counts


