import pytest

from cisgraph import CapacityExceededError, EmptyVertexSetError, GraphDefinitionError
from cisgraph.exceptions import ParameterRangeError
from cisgraph.graphs import (
    Graph,
    VertexSet,
    connected_components,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_connected,
    iter_bits,
    popcount,
)


@pytest.fixture()
def path4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def test_bit_helpers():
    assert popcount(0) == 0
    assert popcount(0b101101) == 4
    assert list(iter_bits(0b101101)) == [0, 2, 3, 5]
    assert list(iter_bits(0)) == []


def test_vertex_set_behaves_like_a_set():
    vertices = VertexSet.of([3, 0, 2, 3])
    assert len(vertices) == 3
    assert list(vertices) == [0, 2, 3]
    assert 2 in vertices
    assert 1 not in vertices
    assert str(vertices) == "0,2,3"
    assert vertices | VertexSet.of([1]) == VertexSet.full(4)
    assert vertices & VertexSet.of([0, 1]) == VertexSet.of([0])
    assert vertices - VertexSet.of([0]) == VertexSet.of([2, 3])
    assert VertexSet.of([2]).issubset(vertices)
    assert not VertexSet()
    assert vertices.min == 0


def test_from_edges_builds_symmetric_rows(path4):
    assert path4.order == 4
    assert path4.adjacency == (0b0010, 0b0101, 0b1010, 0b0100)
    assert path4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert path4.edge_count == 3
    assert path4.degrees() == [1, 2, 2, 1]
    assert path4.has_edge(2, 1)
    assert not path4.has_edge(0, 3)
    assert path4.leaves() == VertexSet.of([0, 3])


def test_repeated_edges_are_merged():
    graph = Graph.from_edges(2, [(0, 1), (1, 0), (0, 1)])
    assert graph.edge_count == 1


@pytest.mark.parametrize(
    "order, adjacency",
    [
        (2, (0b01, 0b00)),
        (2, (0b10, 0b00)),
        (2, (0b100, 0b00)),
        (3, (0b010, 0b001)),
    ],
)
def test_invalid_adjacency_is_rejected(order, adjacency):
    with pytest.raises(GraphDefinitionError):
        Graph(order=order, adjacency=adjacency)


def test_order_has_to_fit_one_word():
    with pytest.raises(CapacityExceededError):
        Graph.edgeless(65)
    with pytest.raises(CapacityExceededError):
        Graph.from_edges(0, [])
    assert Graph.edgeless(64).order == 64


def test_from_edges_rejects_loops_and_foreign_vertices():
    with pytest.raises(GraphDefinitionError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphDefinitionError):
        Graph.from_edges(3, [(0, 3)])


def test_vertex_ids_are_checked(path4):
    with pytest.raises(ParameterRangeError):
        path4.neighbors(4)
    with pytest.raises(ParameterRangeError):
        path4.degree(-1)


def test_surgery_returns_new_graphs(path4):
    cycle = path4.add_edge(0, 3)
    assert cycle.edge_count == 4
    assert path4.edge_count == 3
    assert cycle.remove_edge(0, 3) == path4
    grown = path4.add_vertex([0, 3])
    assert grown.order == 5
    assert grown.neighbors(4) == VertexSet.of([0, 3])
    assert grown.degree(0) == 2
    with pytest.raises(GraphDefinitionError):
        path4.add_edge(1, 1)


def test_induced_subgraph_keeps_relative_order(path4):
    sub = induced_subgraph(path4, [1, 2, 3])
    assert sub == Graph.from_edges(3, [(0, 1), (1, 2)])
    assert path4.induced_subgraph(VertexSet.of([0, 2])).edge_count == 0
    assert delete_vertex(path4, 1) == Graph.from_edges(3, [(1, 2)])
    with pytest.raises(EmptyVertexSetError):
        path4.induced_subgraph([])
    with pytest.raises(ParameterRangeError):
        path4.induced_subgraph([5])


def test_components_are_ordered_by_lowest_vertex():
    graph = Graph.from_edges(6, [(0, 4), (1, 2), (2, 5)])
    assert connected_components(graph) == [
        VertexSet.of([0, 4]),
        VertexSet.of([1, 2, 5]),
        VertexSet.of([3]),
    ]
    assert not is_connected(graph)
    assert graph.cyclomatic_number == 0
    assert is_connected(Graph.edgeless(1))


def test_class_predicates(path4):
    assert path4.is_tree()
    assert not path4.is_unicyclic()
    cycle = path4.add_edge(0, 3)
    assert cycle.is_unicyclic()
    assert cycle.cyclomatic_number == 1
    assert not Graph.edgeless(2).is_tree()


def test_complement_and_relabel(path4):
    complement = path4.complement()
    assert complement.edges() == [(0, 2), (0, 3), (1, 3)]
    assert complement.complement() == path4
    relabeled = path4.relabel([3, 2, 1, 0])
    assert relabeled == path4
    moved = path4.relabel([1, 0, 2, 3])
    assert moved.edges() == [(0, 1), (0, 2), (2, 3)]
    with pytest.raises(ParameterRangeError):
        path4.relabel([0, 0, 1, 2])


def test_disjoint_union_shifts_vertices(path4):
    union = disjoint_union([path4, Graph.edgeless(1), Graph.from_edges(2, [(0, 1)])])
    assert union.order == 7
    assert union.edges() == [(0, 1), (1, 2), (2, 3), (5, 6)]
    assert len(union.connected_components()) == 3
    with pytest.raises(ParameterRangeError):
        disjoint_union([])
    with pytest.raises(CapacityExceededError):
        disjoint_union([Graph.edgeless(40), Graph.edgeless(30)])
