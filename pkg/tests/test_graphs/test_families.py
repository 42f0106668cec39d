import networkx as nx
import pytest

from cisgraph import ParameterRangeError
from cisgraph.graphs import Family, FamilySpec, Graph, construct
from tests.helpers import to_networkx


def test_labels_and_orders():
    assert FamilySpec.of("path", 6).label == "P_6"
    assert FamilySpec.of("tadpole", 3, 2).label == "G_{3,2}"
    assert FamilySpec.of("tadpole", 3, 2).order == 5
    assert str(FamilySpec.of("complete_minus_matching", 4, 2)) == "K_4-2e"
    assert FamilySpec.of("q_graph", 5).params == {"n": 5}
    assert FamilySpec.of("tadpole", 4, 1).params == {"p": 4, "q": 1}


@pytest.mark.parametrize(
    "family, params",
    [
        ("path", ()),
        ("path", (0,)),
        ("cycle", (2,)),
        ("banner", (3,)),
        ("q_graph", (2,)),
        ("tadpole", (2, 1)),
        ("tadpole", (3, -1)),
        ("complete_minus_matching", (4, 3)),
        ("complete", (65,)),
        ("wheel", (5,)),
    ],
)
def test_invalid_parameters(family, params):
    with pytest.raises(ParameterRangeError):
        FamilySpec.of(family, *params)


def test_keyword_parameters_are_checked():
    with pytest.raises(ParameterRangeError):
        FamilySpec(family=Family.PATH, n=3, q=1)
    with pytest.raises(ParameterRangeError):
        FamilySpec(family=Family.TADPOLE, p=3)


def test_specs_are_hashable():
    assert len({FamilySpec.of("path", 3), FamilySpec.of("path", 3)}) == 1


def test_documented_labelings():
    assert construct(FamilySpec.of("path", 3)).edges() == [(0, 1), (1, 2)]
    assert construct(FamilySpec.of("star", 4)).edges() == [(0, 1), (0, 2), (0, 3)]
    assert construct(FamilySpec.of("tadpole", 3, 2)).edges() == [
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (3, 4),
    ]
    assert construct(FamilySpec.of("q_graph", 5)).edges() == [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 2),
    ]
    assert construct(FamilySpec.of("banner", 5)).edges() == [
        (0, 1),
        (0, 3),
        (0, 4),
        (1, 2),
        (2, 3),
    ]
    assert construct(FamilySpec.of("complete_minus_matching", 4, 2)).edges() == [
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
    ]


def test_tadpole_without_tail_is_the_cycle():
    assert construct(FamilySpec.of("tadpole", 3, 0)) == construct(
        FamilySpec.of("cycle", 3)
    )


@pytest.mark.parametrize("n", range(3, 10))
def test_families_match_networkx_generators(n):
    def same(graph: Graph, expected: nx.Graph) -> bool:
        return nx.is_isomorphic(to_networkx(graph), expected)

    assert same(construct(FamilySpec.of("path", n)), nx.path_graph(n))
    assert same(construct(FamilySpec.of("cycle", n)), nx.cycle_graph(n))
    assert same(construct(FamilySpec.of("star", n)), nx.star_graph(n - 1))
    assert same(construct(FamilySpec.of("complete", n)), nx.complete_graph(n))
    assert same(construct(FamilySpec.of("edgeless", n)), nx.empty_graph(n))
    assert same(construct(FamilySpec.of("tadpole", 3, n - 3)), nx.tadpole_graph(3, n - 3))


@pytest.mark.parametrize("n", range(4, 10))
def test_unicyclic_families(n):
    for family in ("banner", "q_graph", "cycle"):
        graph = construct(FamilySpec.of(family, n))
        assert graph.order == n
        assert graph.is_unicyclic()
