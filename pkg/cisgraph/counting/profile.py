import logging
from fractions import Fraction
from typing import Any, Dict, List

import pydantic

from cisgraph.counting.enumeration import iter_cis_masks, per_order_counts
from cisgraph.counting.query import AnchorQuery
from cisgraph.exceptions import CapacityExceededError, ParameterRangeError
from cisgraph.graphs import Graph, mask_is_connected, popcount

logger = logging.getLogger(__name__)

NAIVE_CAP = 20


class CountProfile(pydantic.BaseModel):
    """
    Per order counts of connected induced subgraphs of a graph of order n.

    ``per_order[k - 1]`` holds N_k for k = 1..n, all counts are exact python
    integers.
    """

    order: int
    per_order: List[int]

    class Config:
        frozen = True

    @pydantic.root_validator(skip_on_failure=True)
    def check_length(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        order, per_order = values["order"], values["per_order"]
        if len(per_order) != order:
            raise ParameterRangeError(
                f"Profile of order {order} needs {order} counts, got {len(per_order)}"
            )
        if any(count < 0 for count in per_order):
            raise ParameterRangeError("Profile counts have to be non negative")
        return values

    @property
    def total(self) -> int:
        return sum(self.per_order)

    def count(self, k: int) -> int:
        """
        Returns N_k, zero for k outside of 1..n.

        :param k: order of the counted sets
        :type k: int
        :return: number of connected induced subgraphs with k vertices
        :rtype: int
        """
        if 1 <= k <= self.order:
            return self.per_order[k - 1]
        return 0

    @property
    def mean_order(self) -> Fraction:
        weighted = sum(k * count for k, count in enumerate(self.per_order, start=1))
        return Fraction(weighted, self.total)


def count_profile(graph: Graph) -> CountProfile:
    """
    Counts connected induced subgraphs of every order.

    Disconnected graphs are accepted, their totals are sums over components.

    :param graph: host graph
    :type graph: Graph
    :return: exact per order counts
    :rtype: CountProfile
    """
    counts = per_order_counts(graph)
    return CountProfile(order=graph.order, per_order=counts[1:])


def _check_vertex(graph: Graph, vertex: int) -> None:
    if not 0 <= vertex < graph.order:
        raise ParameterRangeError(f"Vertex {vertex} not in 0..{graph.order - 1}")


def count_containing(graph: Graph, vertex: int) -> int:
    """
    Counts connected induced subgraphs that contain the vertex.

    :raises ParameterRangeError: for vertex ids outside of the graph
    :param graph: host graph
    :type graph: Graph
    :param vertex: anchor vertex
    :type vertex: int
    :return: N(G)_v
    :rtype: int
    """
    _check_vertex(graph, vertex)
    return sum(per_order_counts(graph, anchor=vertex))


def count_containing_pair(graph: Graph, u: int, v: int) -> int:
    """
    Counts connected induced subgraphs that contain both vertices.

    :raises ParameterRangeError: for invalid or equal vertex ids
    :param graph: host graph
    :type graph: Graph
    :param u: first anchor
    :type u: int
    :param v: second anchor
    :type v: int
    :return: N(G)_{u,v}
    :rtype: int
    """
    _check_vertex(graph, u)
    _check_vertex(graph, v)
    query = AnchorQuery.containing_pair(u, v)
    return sum(1 for _ in iter_cis_masks(graph, query))


def count_by_deletion(graph: Graph) -> int:
    """
    Computes the total through N(G) = N(G)_v + N(G - v), always peeling the
    lowest vertex of the first component (vertex 0 after the order preserving
    relabeling).

    :param graph: host graph
    :type graph: Graph
    :return: total number of connected induced subgraphs
    :rtype: int
    """
    total = 0
    current = graph
    while current.order > 1:
        total += count_containing(current, 0)
        current = current.delete_vertex(0)
    return total + 1


def naive_count_profile(graph: Graph) -> CountProfile:
    """
    Reference counter testing connectivity of every nonempty vertex subset.

    :raises CapacityExceededError: above NAIVE_CAP vertices
    :param graph: host graph
    :type graph: Graph
    :return: exact per order counts
    :rtype: CountProfile
    """
    if graph.order > NAIVE_CAP:
        raise CapacityExceededError(
            f"Naive counting is limited to {NAIVE_CAP} vertices, got {graph.order}"
        )
    counts = [0] * graph.order
    for mask in range(1, 1 << graph.order):
        if mask_is_connected(graph.adjacency, mask):
            counts[popcount(mask) - 1] += 1
    logger.debug("naive profile of order %d: %s", graph.order, counts)
    return CountProfile(order=graph.order, per_order=counts)
