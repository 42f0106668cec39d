import random

import networkx as nx
import pytest

from cisgraph import DisconnectedGraphError, NotATreeError, ParameterRangeError
from cisgraph.counting import (
    articulation_points,
    count_containing,
    count_profile,
    is_biconnected,
    non_cut_vertex_count,
    rooted_subtree_count,
    subtree_count,
)
from cisgraph.graphs import FamilySpec, Graph, VertexSet, construct
from tests.helpers import from_networkx, random_graph, to_networkx
from tests.settings import RANDOM_SEED


def family(name: str, *params: int) -> Graph:
    return construct(FamilySpec.of(name, *params))


def test_rooted_counts_on_paths_and_stars():
    path = family("path", 5)
    assert rooted_subtree_count(path, 0) == 5
    assert rooted_subtree_count(path, 2) == 9
    star = family("star", 5)
    assert rooted_subtree_count(star, 0) == 16
    assert rooted_subtree_count(star, 3) == 9
    assert rooted_subtree_count(Graph.edgeless(1), 0) == 1


def test_subtree_totals():
    assert subtree_count(family("path", 6)) == 21
    assert subtree_count(family("star", 6)) == 5 + 2 ** 5


@pytest.mark.parametrize("n", range(1, 11))
def test_products_agree_with_enumeration_on_every_tree(n):
    for nx_tree in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
        tree = from_networkx(nx_tree)
        assert subtree_count(tree) == count_profile(tree).total
        for root in range(n):
            assert rooted_subtree_count(tree, root) == count_containing(tree, root)


def test_trees_are_required():
    with pytest.raises(NotATreeError):
        subtree_count(family("cycle", 4))
    with pytest.raises(NotATreeError):
        rooted_subtree_count(Graph.edgeless(2), 0)
    with pytest.raises(ParameterRangeError):
        rooted_subtree_count(family("path", 3), 3)


def test_articulation_points_of_small_graphs():
    assert articulation_points(family("path", 4)) == VertexSet.of([1, 2])
    assert articulation_points(family("star", 5)) == VertexSet.of([0])
    assert articulation_points(family("cycle", 5)) == VertexSet()
    assert articulation_points(family("tadpole", 4, 2)) == VertexSet.of([0, 4])
    assert articulation_points(family("path", 2)) == VertexSet()
    assert non_cut_vertex_count(family("q_graph", 6)) == 5


def test_articulation_points_reject_bad_input():
    with pytest.raises(ParameterRangeError):
        articulation_points(Graph.edgeless(1))
    with pytest.raises(DisconnectedGraphError):
        articulation_points(Graph.edgeless(3))


def test_biconnectivity():
    assert is_biconnected(family("cycle", 4))
    assert is_biconnected(family("complete", 5))
    assert not is_biconnected(family("path", 2))
    assert not is_biconnected(family("banner", 5))
    assert not is_biconnected(Graph.edgeless(4))


def test_articulation_points_agree_with_networkx():
    rng = random.Random(RANDOM_SEED)
    checked = 0
    while checked < 300:
        graph = random_graph(rng, rng.randint(2, 16), rng.choice([0.15, 0.25, 0.4]))
        if not graph.is_connected():
            continue
        expected = set(nx.articulation_points(to_networkx(graph)))
        assert set(articulation_points(graph)) == expected
        checked += 1
