"""
Exact canonical labeling by individualization and refinement.

The search starts from the degree partition, refines it to an equitable
partition, individualizes every vertex of the first non singleton cell in turn
and recurses. Every discrete partition (leaf) orders the vertices, and the
leaf whose relabeled upper triangle, read in graph6 bit order, is smallest
gives the canonical labeling. Only the leaves the search visits are compared,
so a canonical code is the smallest graph6 string among those leaves and is in
general not the smallest graph6 string over all labelings of the graph.
Vertices of a target cell that are twins of an already explored vertex are
skipped, swapping twins is an automorphism that fixes the current partition.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from cisgraph.exceptions import CapacityExceededError
from cisgraph.graphs import Graph, emit_graph6, popcount

CANONICAL_CAP = 12

CanonicalCode = str
Cells = List[List[int]]


def _degree_partition(adjacency: Sequence[int]) -> Cells:
    by_degree: Dict[int, List[int]] = {}
    for vertex, row in enumerate(adjacency):
        by_degree.setdefault(popcount(row), []).append(vertex)
    return [by_degree[degree] for degree in sorted(by_degree)]


def _refine(adjacency: Sequence[int], cells: Cells) -> Cells:
    """
    Splits cells by neighbor counts into every other cell until the partition
    is equitable. Pieces keep the position of the split cell, ordered by count.
    """
    stable = False
    while not stable:
        stable = True
        for splitter in cells:
            splitter_mask = 0
            for vertex in splitter:
                splitter_mask |= 1 << vertex
            refined: Cells = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups: Dict[int, List[int]] = {}
                for vertex in cell:
                    count = popcount(adjacency[vertex] & splitter_mask)
                    groups.setdefault(count, []).append(vertex)
                if len(groups) > 1:
                    stable = False
                refined.extend(groups[count] for count in sorted(groups))
            if not stable:
                cells = refined
                break
    return cells


def _individualize(cells: Cells, index: int, vertex: int) -> Cells:
    rest = [other for other in cells[index] if other != vertex]
    return cells[:index] + [[vertex], rest] + cells[index + 1 :]


def _leaf_code(adjacency: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        column = adjacency[order[j]]
        for i in range(j):
            code = code << 1 | (column >> order[i] & 1)
    return code


def _twins(adjacency: Sequence[int], u: int, v: int) -> bool:
    both = (1 << u) | (1 << v)
    return adjacency[u] & ~both == adjacency[v] & ~both


class _Search:
    def __init__(self, adjacency: Sequence[int]) -> None:
        self.adjacency = adjacency
        self.best_code: Optional[int] = None
        self.best_order: Tuple[int, ...] = ()

    def run(self, cells: Cells) -> None:
        cells = _refine(self.adjacency, cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = tuple(cell[0] for cell in cells)
            code = _leaf_code(self.adjacency, order)
            if self.best_code is None or code < self.best_code:
                self.best_code, self.best_order = code, order
            return
        explored: List[int] = []
        for vertex in cells[target]:
            if any(_twins(self.adjacency, seen, vertex) for seen in explored):
                continue
            explored.append(vertex)
            self.run(_individualize(cells, target, vertex))


def _check_cap(graph: Graph) -> None:
    if graph.order > CANONICAL_CAP:
        raise CapacityExceededError(
            f"Canonical forms are limited to {CANONICAL_CAP} vertices, "
            f"got {graph.order}"
        )


def canonical_labeling(graph: Graph) -> Tuple[int, ...]:
    """
    Computes the canonical vertex order: ``order[position] = vertex``.

    :raises CapacityExceededError: above CANONICAL_CAP vertices
    :param graph: graph to label
    :type graph: Graph
    :return: vertex at every canonical position
    :rtype: Tuple[int, ...]
    """
    _check_cap(graph)
    search = _Search(graph.adjacency)
    search.run(_degree_partition(graph.adjacency))
    return search.best_order


def relabel_canonically(graph: Graph, order: Sequence[int]) -> Graph:
    permutation = [0] * graph.order
    for position, vertex in enumerate(order):
        permutation[vertex] = position
    return graph.relabel(permutation)


def canonical_graph(graph: Graph) -> Graph:
    """
    Returns the canonical representative of the isomorphism class of the graph.
    """
    return relabel_canonically(graph, canonical_labeling(graph))


def canonical_form(graph: Graph) -> CanonicalCode:
    """
    Computes the canonical code: graph6 text of the canonical representative.
    Two graphs share a code iff they are isomorphic. The code is the smallest
    over the visited search leaves, not over every labeling.

    :raises CapacityExceededError: above CANONICAL_CAP vertices
    :param graph: graph to encode
    :type graph: Graph
    :return: canonical graph6 string
    :rtype: CanonicalCode
    """
    return emit_graph6(canonical_graph(graph))


def is_isomorphic(graph: Graph, other: Graph) -> bool:
    if graph.order != other.order or graph.edge_count != other.edge_count:
        return False
    if sorted(graph.degrees()) != sorted(other.degrees()):
        return False
    return canonical_graph(graph) == canonical_graph(other)
