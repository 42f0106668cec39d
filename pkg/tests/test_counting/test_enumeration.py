import networkx as nx
import pytest

from cisgraph import ParameterRangeError
from cisgraph.counting import AnchorMode, AnchorQuery, enumerate_cis, iter_cis_masks
from cisgraph.graphs import FamilySpec, Graph, VertexSet, construct


def cycle(n: int) -> Graph:
    return construct(FamilySpec.of("cycle", n))


def test_every_set_is_connected_and_unique():
    graph = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    sets = list(enumerate_cis(graph))
    assert len(sets) == len(set(sets))
    for vertex_set in sets:
        assert graph.induced_subgraph(vertex_set).is_connected()


def test_any_mode_is_grouped_by_minimum():
    minima = [vertex_set.min for vertex_set in enumerate_cis(cycle(5))]
    assert minima == sorted(minima)


def test_sets_of_one_order():
    edges = list(enumerate_cis(cycle(4), AnchorQuery.any(k=2)))
    assert sorted(edges) == sorted(
        VertexSet.of(pair) for pair in [(0, 1), (1, 2), (2, 3), (0, 3)]
    )


def test_triangle_has_every_subset():
    triangle = construct(FamilySpec.of("complete", 3))
    assert len(list(enumerate_cis(triangle))) == 7


def test_containing_a_vertex():
    path = construct(FamilySpec.of("path", 4))
    sets = list(enumerate_cis(path, AnchorQuery.containing(1)))
    assert sorted(str(vertex_set) for vertex_set in sets) == [
        "0,1",
        "0,1,2",
        "0,1,2,3",
        "1",
        "1,2",
        "1,2,3",
    ]
    assert all(1 in vertex_set for vertex_set in sets)


def test_containing_a_pair():
    path = construct(FamilySpec.of("path", 4))
    sets = list(enumerate_cis(path, AnchorQuery.containing_pair(0, 2)))
    assert sorted(str(vertex_set) for vertex_set in sets) == ["0,1,2", "0,1,2,3"]
    only_three = list(enumerate_cis(path, AnchorQuery.containing_pair(0, 2, k=3)))
    assert only_three == [VertexSet.of([0, 1, 2])]


def test_pair_in_different_components_is_empty():
    graph = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert list(iter_cis_masks(graph, AnchorQuery.containing_pair(0, 3))) == []


def test_order_filter_above_order_is_empty():
    assert list(enumerate_cis(cycle(3), AnchorQuery.any(k=4))) == []


def test_single_vertex_graph():
    assert list(enumerate_cis(Graph.edgeless(1))) == [VertexSet.of([0])]


def test_disconnected_graph_sums_components():
    graph = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    assert len(list(enumerate_cis(graph))) == 3 + 6


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(mode=AnchorMode.ANY, anchors=(1,)),
        dict(mode=AnchorMode.CONTAINING, anchors=()),
        dict(mode=AnchorMode.CONTAINING_PAIR, anchors=(1,)),
        dict(mode=AnchorMode.CONTAINING_PAIR, anchors=(1, 1)),
        dict(mode=AnchorMode.CONTAINING, anchors=(-1,)),
        dict(mode=AnchorMode.ANY, order_filter=0),
    ],
)
def test_invalid_queries(kwargs):
    with pytest.raises(ParameterRangeError):
        AnchorQuery(**kwargs)


def test_anchors_outside_graph():
    with pytest.raises(ParameterRangeError):
        list(enumerate_cis(cycle(3), AnchorQuery.containing(3)))


def test_matches_networkx_connectivity_on_petersen():
    petersen = nx.petersen_graph()
    graph = Graph.from_edges(10, petersen.edges())
    expected = sum(
        1
        for mask in range(1, 1 << 10)
        if nx.is_connected(petersen.subgraph(v for v in range(10) if mask >> v & 1))
    )
    assert len(list(enumerate_cis(graph))) == expected
