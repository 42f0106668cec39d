from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from cisgraph.exceptions import (
    CapacityExceededError,
    EmptyVertexSetError,
    GraphDefinitionError,
    ParameterRangeError,
)
from cisgraph.graphs.vertexset import (
    VertexSet,
    VertexSetLike,
    as_mask,
    iter_bits,
    popcount,
)

MAX_ORDER = 64


def component_of(adjacency: Sequence[int], start: int, allowed: int) -> int:
    """
    Grows the connected component of ``start`` inside the ``allowed`` vertices.

    :param adjacency: neighbor bitmask per vertex
    :type adjacency: Sequence[int]
    :param start: vertex id to start from, has to be in allowed
    :type start: int
    :param allowed: bitmask of vertices the search may visit
    :type allowed: int
    :return: bitmask of the component
    :rtype: int
    """
    seen = 1 << start
    frontier = seen
    while frontier:
        reached = 0
        for vertex in iter_bits(frontier):
            reached |= adjacency[vertex]
        frontier = reached & allowed & ~seen
        seen |= frontier
    return seen


def mask_is_connected(adjacency: Sequence[int], mask: int) -> bool:
    """
    Checks if the vertices in a nonempty bitmask induce a connected subgraph.
    """
    start = (mask & -mask).bit_length() - 1
    return component_of(adjacency, start, mask) == mask


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on 1..MAX_ORDER vertices.

    Vertices are ``0..order-1``, ``adjacency[v]`` is the bitmask of neighbors of
    ``v``. Instances are immutable, every surgery returns a new Graph.
    """

    order: int
    adjacency: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.order <= MAX_ORDER:
            raise CapacityExceededError(
                f"Graph order has to be in 1..{MAX_ORDER}, got {self.order}"
            )
        object.__setattr__(self, "adjacency", tuple(self.adjacency))
        if len(self.adjacency) != self.order:
            raise GraphDefinitionError(
                f"Expected {self.order} adjacency rows, got {len(self.adjacency)}"
            )
        full = (1 << self.order) - 1
        for vertex, neighbors in enumerate(self.adjacency):
            if neighbors & ~full or neighbors < 0:
                raise GraphDefinitionError(
                    f"Vertex {vertex} has neighbors outside 0..{self.order - 1}"
                )
            if neighbors >> vertex & 1:
                raise GraphDefinitionError(f"Vertex {vertex} is its own neighbor")
            for other in iter_bits(neighbors):
                if not self.adjacency[other] >> vertex & 1:
                    raise GraphDefinitionError(
                        f"Edge {vertex}-{other} is not symmetric"
                    )

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Builds a graph from an edge list, repeated edges are merged.

        :raises GraphDefinitionError: for loops or vertex ids out of range
        :param order: number of vertices
        :type order: int
        :param edges: pairs of vertex ids
        :type edges: Iterable[Tuple[int, int]]
        :return: new graph
        :rtype: Graph
        """
        if not 1 <= order <= MAX_ORDER:
            raise CapacityExceededError(
                f"Graph order has to be in 1..{MAX_ORDER}, got {order}"
            )
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphDefinitionError(f"Edge {u}-{v} outside 0..{order - 1}")
            if u == v:
                raise GraphDefinitionError(f"Loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order=order, adjacency=tuple(rows))

    @classmethod
    def edgeless(cls, order: int) -> "Graph":
        return cls(order=order, adjacency=(0,) * order)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def vertices(self) -> VertexSet:
        return VertexSet(self.vertex_mask)

    def _check_vertex(self, vertex: int) -> None:
        if not (isinstance(vertex, int) and 0 <= vertex < self.order):
            raise ParameterRangeError(
                f"Vertex {vertex} not in 0..{self.order - 1}"
            )

    def neighbors(self, vertex: int) -> VertexSet:
        self._check_vertex(vertex)
        return VertexSet(self.adjacency[vertex])

    def degree(self, vertex: int) -> int:
        self._check_vertex(vertex)
        return popcount(self.adjacency[vertex])

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """
        Lists edges as ``(u, v)`` pairs with ``u < v``, sorted.

        :return: list of edges
        :rtype: List[Tuple[int, int]]
        """
        return [
            (u, v)
            for u, row in enumerate(self.adjacency)
            for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adjacency) // 2

    def leaves(self) -> VertexSet:
        return VertexSet.of(
            vertex for vertex, row in enumerate(self.adjacency) if popcount(row) == 1
        )

    def add_vertex(self, neighbors: VertexSetLike) -> "Graph":
        """
        Appends vertex ``order`` joined to the given neighbors.

        :param neighbors: neighbors of the new vertex
        :type neighbors: VertexSetLike
        :return: graph of order + 1
        :rtype: Graph
        """
        mask = as_mask(neighbors)
        new = self.order
        rows = [row | (1 << new) if mask >> v & 1 else row for v, row in enumerate(
            self.adjacency
        )]
        rows.append(mask)
        return Graph(order=self.order + 1, adjacency=tuple(rows))

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphDefinitionError(f"Loop at vertex {u}")
        rows = list(self.adjacency)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(order=self.order, adjacency=tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        rows = list(self.adjacency)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(order=self.order, adjacency=tuple(rows))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(
            order=self.order,
            adjacency=tuple(
                full & ~row & ~(1 << v) for v, row in enumerate(self.adjacency)
            ),
        )

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """
        Renames vertex ``v`` to ``permutation[v]``.

        :raises ParameterRangeError: if permutation is not a permutation of 0..n-1
        :param permutation: new id of every vertex
        :type permutation: Sequence[int]
        :return: isomorphic graph
        :rtype: Graph
        """
        if sorted(permutation) != list(range(self.order)):
            raise ParameterRangeError(
                f"Not a permutation of 0..{self.order - 1}: {list(permutation)}"
            )
        rows = [0] * self.order
        for v, row in enumerate(self.adjacency):
            new_row = 0
            for u in iter_bits(row):
                new_row |= 1 << permutation[u]
            rows[permutation[v]] = new_row
        return Graph(order=self.order, adjacency=tuple(rows))

    def induced_subgraph(self, vertices: VertexSetLike) -> "Graph":
        """
        Returns the subgraph induced by the given vertices, relabeled so that the
        kept vertices preserve their relative order.

        :raises EmptyVertexSetError: for the empty set
        :raises ParameterRangeError: for vertices outside of the graph
        :param vertices: vertices to keep
        :type vertices: VertexSetLike
        :return: induced subgraph
        :rtype: Graph
        """
        mask = as_mask(vertices)
        if not mask:
            raise EmptyVertexSetError("Induced subgraph of an empty vertex set")
        if mask & ~self.vertex_mask or mask < 0:
            raise ParameterRangeError(
                f"Vertex set {VertexSet(mask)!r} not within 0..{self.order - 1}"
            )
        kept = list(iter_bits(mask))
        position = {vertex: index for index, vertex in enumerate(kept)}
        rows = []
        for vertex in kept:
            row = 0
            for other in iter_bits(self.adjacency[vertex] & mask):
                row |= 1 << position[other]
            rows.append(row)
        return Graph(order=len(kept), adjacency=tuple(rows))

    def delete_vertex(self, vertex: int) -> "Graph":
        self._check_vertex(vertex)
        return self.induced_subgraph(self.vertex_mask & ~(1 << vertex))

    def connected_components(self) -> List[VertexSet]:
        """
        Splits the vertices into connected components, ordered by their
        lowest vertex id.

        :return: list of components
        :rtype: List[VertexSet]
        """
        remaining = self.vertex_mask
        components = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            component = component_of(self.adjacency, start, remaining)
            components.append(VertexSet(component))
            remaining &= ~component
        return components

    def is_connected(self) -> bool:
        return component_of(self.adjacency, 0, self.vertex_mask) == self.vertex_mask

    @property
    def cyclomatic_number(self) -> int:
        return self.edge_count - self.order + len(self.connected_components())

    def is_tree(self) -> bool:
        return self.edge_count == self.order - 1 and self.is_connected()

    def is_unicyclic(self) -> bool:
        return self.edge_count == self.order and self.is_connected()

    def __repr__(self) -> str:
        edges = ", ".join(f"{u}-{v}" for u, v in self.edges())
        return f"Graph({self.order}; {edges})"


def induced_subgraph(graph: Graph, vertices: VertexSetLike) -> Graph:
    return graph.induced_subgraph(vertices)


def delete_vertex(graph: Graph, vertex: int) -> Graph:
    return graph.delete_vertex(vertex)


def connected_components(graph: Graph) -> List[VertexSet]:
    return graph.connected_components()


def is_connected(graph: Graph) -> bool:
    return graph.is_connected()


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """
    Places the graphs side by side, the vertices of ``graphs[i]`` are shifted by
    the total order of the graphs before it.

    :raises ParameterRangeError: for an empty list
    :raises CapacityExceededError: if the total order exceeds MAX_ORDER
    :param graphs: graphs to join
    :type graphs: Sequence[Graph]
    :return: block diagonal graph
    :rtype: Graph
    """
    if not graphs:
        raise ParameterRangeError("disjoint_union needs at least one graph")
    total = sum(graph.order for graph in graphs)
    if total > MAX_ORDER:
        raise CapacityExceededError(
            f"Disjoint union of order {total} exceeds {MAX_ORDER} vertices"
        )
    rows: List[int] = []
    offset = 0
    for graph in graphs:
        rows.extend(row << offset for row in graph.adjacency)
        offset += graph.order
    return Graph(order=total, adjacency=tuple(rows))
