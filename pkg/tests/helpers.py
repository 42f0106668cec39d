import random

import networkx as nx

from cisgraph.graphs import Graph


def to_networkx(graph: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.order))
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    nx_graph = nx.convert_node_labels_to_integers(nx_graph)
    return Graph.from_edges(nx_graph.number_of_nodes(), nx_graph.edges())


def random_graph(rng: random.Random, order: int, density: float) -> Graph:
    edges = [
        (u, v) for v in range(order) for u in range(v) if rng.random() < density
    ]
    return Graph.from_edges(order, edges)


def nx_cis_count(graph: Graph) -> int:
    nx_graph = to_networkx(graph)
    total = 0
    for mask in range(1, 1 << graph.order):
        nodes = [v for v in range(graph.order) if mask >> v & 1]
        if nx.is_connected(nx_graph.subgraph(nodes)):
            total += 1
    return total
