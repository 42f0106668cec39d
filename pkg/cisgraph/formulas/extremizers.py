import logging
from typing import List

import pydantic

from cisgraph.atlas.classes import ClassTag, GraphClass
from cisgraph.exceptions import ParameterRangeError, UncharacterizedError
from cisgraph.formulas.bounds import near_equal_parts
from cisgraph.formulas.objectives import Objective, Sense
from cisgraph.graphs import Family, FamilySpec, Graph, construct, disjoint_union

logger = logging.getLogger(__name__)


class Extremizer(pydantic.BaseModel):
    """
    Predicted extremal graph, the disjoint union of its components in order.
    """

    components: List[FamilySpec]

    class Config:
        frozen = True

    @pydantic.validator("components")
    def check_components(cls, value: List[FamilySpec]) -> List[FamilySpec]:
        if not value:
            raise ParameterRangeError("Extremizer needs at least one component")
        return value

    @classmethod
    def single(cls, family: str, *params: int) -> "Extremizer":
        return cls(components=[FamilySpec.of(family, *params)])

    @property
    def order(self) -> int:
        return sum(component.order for component in self.components)

    @property
    def label(self) -> str:
        labels = []
        for component in self.components:
            repeated = sum(1 for other in self.components if other == component)
            label = component.label if repeated == 1 else f"{repeated}{component.label}"
            if label not in labels:
                labels.append(label)
        return " + ".join(labels)

    def __str__(self) -> str:
        return self.label

    def build(self) -> Graph:
        return disjoint_union([construct(component) for component in self.components])


def _uncharacterized(graph_class: GraphClass, n: int, objective: Objective) -> None:
    raise UncharacterizedError(
        f"No extremizer characterization for {graph_class.label}, n={n}, "
        f"{objective.label}"
    )


def _all_graphs(n: int, objective: Objective) -> List[Extremizer]:
    if objective.k is None:
        family = "edgeless" if objective.sense == Sense.MIN else "complete"
        return [Extremizer.single(family, n)]
    return []


def _trees(n: int, objective: Objective) -> List[Extremizer]:
    if objective.k is None:
        family = "path" if objective.sense == Sense.MIN else "star"
        return [Extremizer.single(family, n)]
    if objective.sense == Sense.MIN and 2 < objective.k < n:
        return [Extremizer.single("path", n)]
    return []


def _connected(n: int, objective: Objective) -> List[Extremizer]:
    if objective.k is None:
        family = "path" if objective.sense == Sense.MIN else "complete"
        return [Extremizer.single(family, n)]
    if objective.sense == Sense.MIN and 2 < objective.k < n:
        return [Extremizer.single("path", n)]
    if objective.sense == Sense.MAX and objective.k == 3 and n >= 3:
        return [
            Extremizer.single("complete_minus_matching", n, removed)
            for removed in range(n // 2 + 1)
        ]
    return []


def _unicyclic(n: int, objective: Objective) -> List[Extremizer]:
    if n < 3 or objective.k is not None:
        return []
    if objective.sense == Sense.MIN:
        return [Extremizer.single("tadpole", 3, n - 3)]
    if n == 3:
        return [Extremizer.single("cycle", 3)]
    if n == 4:
        return [Extremizer.single("cycle", 4)]
    if n == 5:
        return [
            Extremizer.single("cycle", 5),
            Extremizer.single("banner", 5),
            Extremizer.single("q_graph", 5),
        ]
    return [Extremizer.single("q_graph", n)]


def _r_components(n: int, r: int, objective: Objective) -> List[Extremizer]:
    if objective.k is not None or r > n:
        return []
    if objective.sense == Sense.MIN:
        return [
            Extremizer(
                components=[
                    FamilySpec(family=Family.PATH, n=part)
                    for part in near_equal_parts(n, r)
                ]
            )
        ]
    components = [FamilySpec(family=Family.COMPLETE, n=n - r + 1)]
    components.extend(FamilySpec(family=Family.EDGELESS, n=1) for _ in range(r - 1))
    return [Extremizer(components=components)]


def expected_extremizers(
    graph_class: GraphClass, n: int, objective: Objective
) -> List[Extremizer]:
    """
    Returns the predicted extremizer set of an objective over a class, some of
    the listed graphs may be isomorphic for small n.

    :raises ParameterRangeError: for an objective without sense or n < 1
    :raises UncharacterizedError: where no characterization is known
    :param graph_class: scanned class
    :type graph_class: GraphClass
    :param n: order of the scanned graphs
    :type n: int
    :param objective: objective with sense set
    :type objective: Objective
    :return: predicted extremizers
    :rtype: List[Extremizer]
    """
    if objective.sense is None:
        raise ParameterRangeError(
            f"Objective {objective.label} needs a _min or _max suffix"
        )
    if n < 1:
        raise ParameterRangeError(f"Order has to be >= 1, got {n}")
    objective.check_order(n)
    tag = graph_class.tag
    if tag == ClassTag.ALL:
        predicted = _all_graphs(n, objective)
    elif tag == ClassTag.TREE:
        predicted = _trees(n, objective)
    elif tag == ClassTag.CONNECTED:
        predicted = _connected(n, objective)
    elif tag == ClassTag.UNICYCLIC:
        predicted = _unicyclic(n, objective)
    elif tag == ClassTag.R_COMPONENTS:
        predicted = _r_components(n, graph_class.r, objective)  # type: ignore
    else:
        predicted = []
    if not predicted:
        _uncharacterized(graph_class, n, objective)
    logger.debug(
        "expected %s for %s n=%d: %s",
        objective.label,
        graph_class.label,
        n,
        [extremizer.label for extremizer in predicted],
    )
    return predicted
