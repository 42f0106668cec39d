from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

import pydantic

from cisgraph.exceptions import ParameterRangeError
from cisgraph.graphs.graph import Graph, MAX_ORDER


class Family(str, Enum):
    EDGELESS = "edgeless"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    TADPOLE = "tadpole"
    BANNER = "banner"
    Q_GRAPH = "q_graph"
    COMPLETE_MINUS_MATCHING = "complete_minus_matching"


# family -> (parameter names, minimum of the order parameter)
FAMILY_PARAMETERS: Dict[Family, Tuple[Tuple[str, ...], int]] = {
    Family.EDGELESS: (("n",), 1),
    Family.PATH: (("n",), 1),
    Family.CYCLE: (("n",), 3),
    Family.STAR: (("n",), 1),
    Family.COMPLETE: (("n",), 1),
    Family.TADPOLE: (("p", "q"), 3),
    Family.BANNER: (("n",), 4),
    Family.Q_GRAPH: (("n",), 3),
    Family.COMPLETE_MINUS_MATCHING: (("n", "l"), 3),
}

_SYMBOLS = {
    Family.EDGELESS: "E",
    Family.PATH: "P",
    Family.CYCLE: "C",
    Family.STAR: "S",
    Family.COMPLETE: "K",
    Family.BANNER: "B",
    Family.Q_GRAPH: "Q",
}


class FamilySpec(pydantic.BaseModel):
    """
    Tagged description of a named graph family member.

    Families with a single order parameter use ``n``, the tadpole uses ``p``
    (cycle length) and ``q`` (tail length) and the complete graph minus a
    matching uses ``n`` and ``l`` (number of removed independent edges).
    """

    family: Family
    n: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    l: Optional[int] = None  # noqa: E741

    class Config:
        frozen = True

    @pydantic.root_validator(skip_on_failure=True)
    def check_parameters(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        family: Family = values["family"]
        names, minimum = FAMILY_PARAMETERS[family]
        for name in ("n", "p", "q", "l"):
            given = values.get(name)
            if name in names and given is None:
                raise ParameterRangeError(f"{family.value} requires parameter {name}")
            if name not in names and given is not None:
                raise ParameterRangeError(
                    f"{family.value} does not take parameter {name}"
                )
        if family == Family.TADPOLE:
            p, q = values["p"], values["q"]
            if p < minimum or q < 0:
                raise ParameterRangeError(
                    f"tadpole needs p >= 3 and q >= 0, got p={p}, q={q}"
                )
            order = p + q
        else:
            order = values["n"]
            if order < minimum:
                raise ParameterRangeError(
                    f"{family.value} needs n >= {minimum}, got n={order}"
                )
        if order > MAX_ORDER:
            raise ParameterRangeError(
                f"{family.value} of order {order} exceeds {MAX_ORDER} vertices"
            )
        if family == Family.COMPLETE_MINUS_MATCHING:
            removed = values["l"]
            if not 0 <= removed <= order // 2:
                raise ParameterRangeError(
                    f"complete_minus_matching needs 0 <= l <= {order // 2}, "
                    f"got l={removed}"
                )
        return values

    @classmethod
    def of(cls, family: str, *params: int) -> "FamilySpec":
        """
        Positional shortcut, ``FamilySpec.of("tadpole", 3, 2)``.

        :raises ParameterRangeError: for wrong number or range of parameters
        :param family: family tag
        :type family: str
        :param params: parameters in the documented order
        :type params: int
        :return: validated spec
        :rtype: FamilySpec
        """
        try:
            tag = Family(family)
        except ValueError as exc:
            raise ParameterRangeError(f"Unknown family {family!r}") from exc
        names, _ = FAMILY_PARAMETERS[tag]
        if len(params) != len(names):
            raise ParameterRangeError(
                f"{tag.value} takes parameters ({', '.join(names)}), got {params}"
            )
        return cls(family=tag, **dict(zip(names, params)))

    @property
    def params(self) -> Dict[str, int]:
        names, _ = FAMILY_PARAMETERS[self.family]
        return {name: getattr(self, name) for name in names}

    @property
    def order(self) -> int:
        if self.family == Family.TADPOLE:
            return self.p + self.q  # type: ignore
        return self.n  # type: ignore

    @property
    def label(self) -> str:
        if self.family == Family.TADPOLE:
            return f"G_{{{self.p},{self.q}}}"
        if self.family == Family.COMPLETE_MINUS_MATCHING:
            return f"K_{self.n}-{self.l}e"
        return f"{_SYMBOLS[self.family]}_{self.n}"

    def __str__(self) -> str:
        return self.label


def _cycle_edges(length: int, offset: int = 0) -> List[Tuple[int, int]]:
    return [(offset + i, offset + (i + 1) % length) for i in range(length)]


def _edgeless(spec: FamilySpec) -> Graph:
    return Graph.edgeless(spec.order)


def _path(spec: FamilySpec) -> Graph:
    return Graph.from_edges(spec.order, [(i, i + 1) for i in range(spec.order - 1)])


def _cycle(spec: FamilySpec) -> Graph:
    return Graph.from_edges(spec.order, _cycle_edges(spec.order))


def _star(spec: FamilySpec) -> Graph:
    return Graph.from_edges(spec.order, [(0, leaf) for leaf in range(1, spec.order)])


def _complete(spec: FamilySpec) -> Graph:
    order = spec.order
    full = (1 << order) - 1
    return Graph(order=order, adjacency=tuple(full & ~(1 << v) for v in range(order)))


def _tadpole(spec: FamilySpec) -> Graph:
    p, q = spec.p, spec.q
    edges = _cycle_edges(p)  # type: ignore
    tail = [0] + list(range(p, p + q))  # type: ignore
    edges.extend(zip(tail, tail[1:]))
    return Graph.from_edges(spec.order, edges)


def _banner(spec: FamilySpec) -> Graph:
    edges = _cycle_edges(4) + [(0, leaf) for leaf in range(4, spec.order)]
    return Graph.from_edges(spec.order, edges)


def _q_graph(spec: FamilySpec) -> Graph:
    edges = [(0, leaf) for leaf in range(1, spec.order)] + [(1, 2)]
    return Graph.from_edges(spec.order, edges)


def _complete_minus_matching(spec: FamilySpec) -> Graph:
    graph = _complete(spec)
    for index in range(spec.l):  # type: ignore
        graph = graph.remove_edge(2 * index, 2 * index + 1)
    return graph


CONSTRUCTORS: Dict[Family, Callable[[FamilySpec], Graph]] = {
    Family.EDGELESS: _edgeless,
    Family.PATH: _path,
    Family.CYCLE: _cycle,
    Family.STAR: _star,
    Family.COMPLETE: _complete,
    Family.TADPOLE: _tadpole,
    Family.BANNER: _banner,
    Family.Q_GRAPH: _q_graph,
    Family.COMPLETE_MINUS_MATCHING: _complete_minus_matching,
}


def construct(spec: FamilySpec) -> Graph:
    """
    Builds the family member with its fixed labeling:

    * path: 0-1-...-(n-1), vertex 0 is an end
    * cycle: 0-1-...-(n-1)-0
    * star: center 0, leaves 1..n-1
    * tadpole G_{p,q}: cycle on 0..p-1, tail p..p+q-1 hanging from junction 0
    * banner B_n: hub 0 on the 4-cycle 0-1-2-3-0, pendant leaves 4..n-1 on 0
    * Q_n: hub 0, leaves 1..n-1, extra edge 1-2
    * complete minus matching: K_n without edges (0,1), (2,3), ... (2l-2,2l-1)

    :param spec: validated family spec
    :type spec: FamilySpec
    :return: graph of the family
    :rtype: Graph
    """
    return CONSTRUCTORS[spec.family](spec)
