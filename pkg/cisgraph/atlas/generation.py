"""
Isomorphism free generation of small graph catalogs by orderly augmentation.

Every canonical parent of order n - 1 is extended by a new vertex ``m`` joined
to each admissible neighbor set. A child is kept when deleting its canonical
deletion vertex (the eligible vertex at the largest canonical position) gives
back a graph isomorphic to the parent; children of a single parent are
deduplicated by canonical code.
"""
import itertools
import logging
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Sequence, Set, Tuple

from cisgraph.atlas.canonical import (
    CanonicalCode,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    relabel_canonically,
)
from cisgraph.atlas.classes import ClassTag, GraphClass
from cisgraph.counting.cut_vertices import articulation_points
from cisgraph.graphs import (
    Family,
    FamilySpec,
    Graph,
    construct,
    disjoint_union,
    emit_graph6,
    parse_graph6,
)

logger = logging.getLogger(__name__)

Catalog = Tuple[Tuple[CanonicalCode, Graph], ...]


def _all_eligible(graph: Graph) -> int:
    return graph.vertex_mask


def _non_cut_eligible(graph: Graph) -> int:
    if graph.order < 2:
        return graph.vertex_mask
    return graph.vertex_mask & ~articulation_points(graph).mask


def _leaf_eligible(graph: Graph) -> int:
    return graph.leaves().mask


def _all_subsets(order: int) -> Iterator[int]:
    return iter(range(1 << order))


def _nonempty_subsets(order: int) -> Iterator[int]:
    return iter(range(1, 1 << order))


def _singletons(order: int) -> Iterator[int]:
    return (1 << vertex for vertex in range(order))


class _Augmentation:
    def __init__(
        self,
        neighbor_sets: Callable[[int], Iterator[int]],
        eligible: Callable[[Graph], int],
    ) -> None:
        self.neighbor_sets = neighbor_sets
        self.eligible = eligible

    def children(self, parent: Graph) -> Dict[CanonicalCode, Graph]:
        """
        Canonical children of one canonical parent, each isomorphism class once.
        """
        new_vertex = parent.order
        seen: Set[Graph] = set()
        for neighbors in self.neighbor_sets(parent.order):
            child = parent.add_vertex(neighbors)
            order = canonical_labeling(child)
            eligible = self.eligible(child)
            deletion = next(
                vertex for vertex in reversed(order) if eligible >> vertex & 1
            )
            if deletion != new_vertex:
                if canonical_graph(child.delete_vertex(deletion)) != parent:
                    continue
            seen.add(relabel_canonically(child, order))
        return {emit_graph6(canonical): canonical for canonical in seen}


_AUGMENTATIONS = {
    ClassTag.ALL: _Augmentation(_all_subsets, _all_eligible),
    ClassTag.CONNECTED: _Augmentation(_nonempty_subsets, _non_cut_eligible),
    ClassTag.TREE: _Augmentation(_singletons, _leaf_eligible),
    ClassTag.UNICYCLIC: _Augmentation(_singletons, _leaf_eligible),
}


def _as_catalog(graphs: Sequence[Graph]) -> Catalog:
    codes = sorted({canonical_form(graph) for graph in graphs})
    return tuple((code, parse_graph6(code)) for code in codes)


def _base(tag: ClassTag, order: int) -> List[Graph]:
    if tag == ClassTag.UNICYCLIC:
        return [construct(FamilySpec.of("cycle", 3))] if order == 3 else []
    return [Graph.edgeless(1)] if order == 1 else []


@lru_cache(maxsize=None)
def _augmented_catalog(tag: ClassTag, order: int) -> Catalog:
    base_order = 3 if tag == ClassTag.UNICYCLIC else 1
    if order <= base_order:
        return _as_catalog(_base(tag, order))
    augmentation = _AUGMENTATIONS[tag]
    children: Dict[CanonicalCode, Graph] = {}
    for _, parent in _augmented_catalog(tag, order - 1):
        children.update(augmentation.children(parent))
    if tag == ClassTag.UNICYCLIC:
        cycle = construct(FamilySpec(family=Family.CYCLE, n=order))
        children[canonical_form(cycle)] = cycle
    catalog = tuple(
        (code, parse_graph6(code)) for code in sorted(children)
    )
    logger.debug("generated %d %s graphs of order %d", len(catalog), tag.value, order)
    return catalog


def _partitions(total: int, parts: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """
    Partitions of total into exactly ``parts`` positive parts, non increasing,
    none above ``largest``.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total - parts + 1, largest), 0, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _r_components_catalog(components: int, order: int) -> Catalog:
    graphs: List[Graph] = []
    for sizes in _partitions(order, components, order):
        choices = [
            itertools.combinations_with_replacement(
                [graph for _, graph in _augmented_catalog(ClassTag.CONNECTED, size)],
                sizes.count(size),
            )
            for size in sorted(set(sizes), reverse=True)
        ]
        for selection in itertools.product(*choices):
            parts = [graph for group in selection for graph in group]
            graphs.append(disjoint_union(parts))
    return _as_catalog(graphs)


def catalog(graph_class: GraphClass, order: int) -> Catalog:
    """
    Complete isomorphism free catalog of a class, as (canonical code, canonical
    graph) pairs sorted by code.

    :raises UnsupportedClassError: for orders above the class cap
    :param graph_class: class to generate
    :type graph_class: GraphClass
    :param order: number of vertices
    :type order: int
    :return: catalog entries
    :rtype: Catalog
    """
    graph_class.check_order(order)
    tag = graph_class.tag
    if tag in _AUGMENTATIONS:
        return _augmented_catalog(tag, order)
    if tag == ClassTag.R_COMPONENTS:
        if graph_class.r > order:  # type: ignore
            return ()
        return _r_components_catalog(graph_class.r, order)  # type: ignore
    return tuple(
        (code, graph)
        for code, graph in _augmented_catalog(ClassTag.CONNECTED, order)
        if graph_class.contains(graph)
    )


def generate(graph_class: GraphClass, order: int) -> Iterator[Graph]:
    """
    Streams one canonical representative per isomorphism class of the given
    class and order, sorted by canonical code.

    :raises UnsupportedClassError: for orders above the class cap
    :param graph_class: class to generate
    :type graph_class: GraphClass
    :param order: number of vertices
    :type order: int
    :return: generator of graphs
    :rtype: Iterator[Graph]
    """
    for _, graph in catalog(graph_class, order):
        yield graph


def generate_with_codes(
    graph_class: GraphClass, order: int
) -> Iterator[Tuple[CanonicalCode, Graph]]:
    yield from catalog(graph_class, order)


def catalog_size(graph_class: GraphClass, order: int) -> int:
    return len(catalog(graph_class, order))

