"""
Cut vertices by an iterative Hopcroft-Tarjan depth first search.
"""
from typing import List

from cisgraph.exceptions import DisconnectedGraphError, ParameterRangeError
from cisgraph.graphs import Graph, VertexSet, iter_bits


def _require_connected(graph: Graph) -> None:
    if graph.order < 2:
        raise ParameterRangeError("Cut vertices need a graph of order >= 2")
    if not graph.is_connected():
        raise DisconnectedGraphError(f"Expected a connected graph, got {graph!r}")


def articulation_points(graph: Graph) -> VertexSet:
    """
    Finds vertices whose removal disconnects the graph, in time linear in the
    size of the graph.

    :raises ParameterRangeError: for the single vertex graph
    :raises DisconnectedGraphError: for disconnected graphs
    :param graph: connected graph of order >= 2
    :type graph: Graph
    :return: set of cut vertices
    :rtype: VertexSet
    """
    _require_connected(graph)
    depth: List[int] = [-1] * graph.order
    low: List[int] = [0] * graph.order
    parent: List[int] = [-1] * graph.order
    pending = [list(iter_bits(row)) for row in graph.adjacency]
    cut = 0
    root_children = 0
    depth[0] = 0
    stack = [0]
    while stack:
        vertex = stack[-1]
        if pending[vertex]:
            child = pending[vertex].pop()
            if depth[child] < 0:
                parent[child] = vertex
                depth[child] = low[child] = depth[vertex] + 1
                stack.append(child)
            elif child != parent[vertex]:
                low[vertex] = min(low[vertex], depth[child])
            continue
        stack.pop()
        above = parent[vertex]
        if above < 0:
            continue
        low[above] = min(low[above], low[vertex])
        if above == 0:
            root_children += 1
        elif low[vertex] >= depth[above]:
            cut |= 1 << above
    if root_children > 1:
        cut |= 1
    return VertexSet(cut)


def non_cut_vertex_count(graph: Graph) -> int:
    """
    Counts vertices whose removal keeps the graph connected, which equals
    N_{n-1} of the graph.
    """
    return graph.order - len(articulation_points(graph))


def is_biconnected(graph: Graph) -> bool:
    """
    Checks 2-connectivity: connected, order >= 3 and no cut vertex.
    K_2 is treated as not 2-connected.

    :param graph: any graph
    :type graph: Graph
    :return: result of the check
    :rtype: bool
    """
    if graph.order < 3 or not graph.is_connected():
        return False
    return not articulation_points(graph)
