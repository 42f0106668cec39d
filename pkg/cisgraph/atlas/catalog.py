import logging
from collections import Counter
from pathlib import Path
from typing import Iterable, List, Union

import pydantic

from cisgraph.atlas.canonical import canonical_form
from cisgraph.atlas.classes import GraphClass
from cisgraph.atlas.generation import catalog
from cisgraph.graphs import Graph, read_graphs

logger = logging.getLogger(__name__)


class CatalogCheck(pydantic.BaseModel):
    """
    Comparison of an external graph list with the generated catalog,
    all entries are canonical codes, sorted.
    """

    graph_class: str
    order: int
    expected: int
    received: int
    missing: List[str] = []
    extra: List[str] = []
    duplicates: List[str] = []

    @property
    def passed(self) -> bool:
        return not (self.missing or self.extra or self.duplicates)


def compare_catalog(
    graphs: Iterable[Graph], graph_class: GraphClass, order: int
) -> CatalogCheck:
    """
    Compares canonical codes of the given graphs with generate(graph_class, order).

    :param graphs: externally produced graphs
    :type graphs: Iterable[Graph]
    :param graph_class: class the graphs claim to enumerate
    :type graph_class: GraphClass
    :param order: order the graphs claim to have
    :type order: int
    :return: differences between both catalogs
    :rtype: CatalogCheck
    """
    expected = {code for code, _ in catalog(graph_class, order)}
    received = Counter(
        canonical_form(graph) if graph.order == order else f"order {graph.order}"
        for graph in graphs
    )
    check = CatalogCheck(
        graph_class=graph_class.label,
        order=order,
        expected=len(expected),
        received=sum(received.values()),
        missing=sorted(expected - set(received)),
        extra=sorted(set(received) - expected),
        duplicates=sorted(code for code, seen in received.items() if seen > 1),
    )
    if not check.passed:
        logger.warning(
            "catalog mismatch for %s n=%d: %d missing, %d extra, %d duplicated",
            graph_class.label,
            order,
            len(check.missing),
            len(check.extra),
            len(check.duplicates),
        )
    return check


def check_catalog(
    path: Union[str, Path], graph_class: GraphClass, order: int
) -> CatalogCheck:
    """
    Cross checks a graph6 / edge list file against the generator.
    """
    return compare_catalog(read_graphs(path), graph_class, order)
