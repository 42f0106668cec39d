from enum import Enum
from typing import Any, Dict, Optional

import pydantic

from cisgraph.exceptions import ParameterRangeError, UnsupportedClassError
from cisgraph.graphs import Graph


class ClassTag(str, Enum):
    ALL = "all"
    CONNECTED = "connected"
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    R_COMPONENTS = "r_components"
    CYCLOMATIC = "cyclomatic"
    SERIES_REDUCED = "series_reduced"


# largest order generate() accepts per class
CLASS_CAPS: Dict[ClassTag, int] = {
    ClassTag.ALL: 7,
    ClassTag.CONNECTED: 8,
    ClassTag.TREE: 11,
    ClassTag.UNICYCLIC: 11,
    ClassTag.R_COMPONENTS: 8,
    ClassTag.CYCLOMATIC: 8,
    ClassTag.SERIES_REDUCED: 8,
}


class GraphClass(pydantic.BaseModel):
    """
    Graph class a catalog is generated for.

    ``r`` is the number of components of ``r_components`` and ``d`` the
    cyclomatic number of ``cyclomatic`` (d = 2 are the bicyclic graphs).
    """

    tag: ClassTag
    r: Optional[int] = None
    d: Optional[int] = None

    class Config:
        frozen = True

    @pydantic.root_validator(skip_on_failure=True)
    def check_parameters(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        tag, r, d = values["tag"], values.get("r"), values.get("d")
        if tag == ClassTag.R_COMPONENTS:
            if r is None or r < 1:
                raise ParameterRangeError(f"r_components needs r >= 1, got {r}")
        elif r is not None:
            raise ParameterRangeError(f"{tag.value} does not take parameter r")
        if tag == ClassTag.CYCLOMATIC:
            if d is None or d < 0:
                raise ParameterRangeError(f"cyclomatic needs d >= 0, got {d}")
        elif d is not None:
            raise ParameterRangeError(f"{tag.value} does not take parameter d")
        return values

    @classmethod
    def of(cls, tag: str, r: int = None, d: int = None) -> "GraphClass":
        try:
            class_tag = ClassTag(tag)
        except ValueError as exc:
            raise ParameterRangeError(f"Unknown graph class {tag!r}") from exc
        return cls(tag=class_tag, r=r, d=d)

    @property
    def cap(self) -> int:
        return CLASS_CAPS[self.tag]

    @property
    def label(self) -> str:
        if self.tag == ClassTag.R_COMPONENTS:
            return f"r_components({self.r})"
        if self.tag == ClassTag.CYCLOMATIC:
            return f"cyclomatic({self.d})"
        return self.tag.value

    def __str__(self) -> str:
        return self.label

    def check_order(self, order: int) -> None:
        """
        Validates that a catalog of the given order can be generated.

        :raises ParameterRangeError: for orders below 1
        :raises UnsupportedClassError: for orders above the class cap
        :param order: number of vertices
        :type order: int
        """
        if order < 1:
            raise ParameterRangeError(f"Order has to be >= 1, got {order}")
        if order > self.cap:
            raise UnsupportedClassError(
                f"{self.label} graphs are generated up to order {self.cap}, "
                f"got {order}"
            )

    def contains(self, graph: Graph) -> bool:
        """
        Membership predicate of the class.

        :param graph: graph to test
        :type graph: Graph
        :return: result of the check
        :rtype: bool
        """
        if self.tag == ClassTag.ALL:
            return True
        if self.tag == ClassTag.R_COMPONENTS:
            return len(graph.connected_components()) == self.r
        if not graph.is_connected():
            return False
        if self.tag == ClassTag.TREE:
            return graph.edge_count == graph.order - 1
        if self.tag == ClassTag.UNICYCLIC:
            return graph.edge_count == graph.order
        if self.tag == ClassTag.CYCLOMATIC:
            return graph.edge_count == graph.order - 1 + self.d  # type: ignore
        if self.tag == ClassTag.SERIES_REDUCED:
            return 2 not in graph.degrees()
        return True


ALL = GraphClass(tag=ClassTag.ALL)
CONNECTED = GraphClass(tag=ClassTag.CONNECTED)
TREE = GraphClass(tag=ClassTag.TREE)
UNICYCLIC = GraphClass(tag=ClassTag.UNICYCLIC)


def r_components(r: int) -> GraphClass:
    return GraphClass(tag=ClassTag.R_COMPONENTS, r=r)


def cyclomatic(d: int) -> GraphClass:
    return GraphClass(tag=ClassTag.CYCLOMATIC, d=d)


SERIES_REDUCED = GraphClass(tag=ClassTag.SERIES_REDUCED)
