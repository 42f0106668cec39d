from enum import Enum
from typing import Any, Dict, Optional, Tuple

import pydantic

from cisgraph.exceptions import ParameterRangeError
from cisgraph.graphs import Graph


class AnchorMode(str, Enum):
    ANY = "any"
    CONTAINING = "containing"
    CONTAINING_PAIR = "containing_pair"


_ANCHOR_COUNTS = {
    AnchorMode.ANY: 0,
    AnchorMode.CONTAINING: 1,
    AnchorMode.CONTAINING_PAIR: 2,
}


class AnchorQuery(pydantic.BaseModel):
    """
    Restricts an enumeration to sets containing given anchor vertices and,
    optionally, to sets of a single order k.
    """

    mode: AnchorMode = AnchorMode.ANY
    anchors: Tuple[int, ...] = ()
    order_filter: Optional[int] = None

    class Config:
        frozen = True

    @pydantic.root_validator(skip_on_failure=True)
    def check_anchors(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        mode, anchors = values["mode"], values["anchors"]
        if len(anchors) != _ANCHOR_COUNTS[mode]:
            raise ParameterRangeError(
                f"{mode.value} takes {_ANCHOR_COUNTS[mode]} anchor vertices, "
                f"got {len(anchors)}"
            )
        if len(set(anchors)) != len(anchors):
            raise ParameterRangeError(f"Anchor vertices have to be distinct: {anchors}")
        if any(anchor < 0 for anchor in anchors):
            raise ParameterRangeError(f"Anchor vertices have to be >= 0: {anchors}")
        order_filter = values.get("order_filter")
        if order_filter is not None and order_filter < 1:
            raise ParameterRangeError(f"Order filter has to be >= 1, got {order_filter}")
        return values

    @classmethod
    def any(cls, k: int = None) -> "AnchorQuery":  # noqa: A003
        return cls(mode=AnchorMode.ANY, order_filter=k)

    @classmethod
    def containing(cls, vertex: int, k: int = None) -> "AnchorQuery":
        return cls(mode=AnchorMode.CONTAINING, anchors=(vertex,), order_filter=k)

    @classmethod
    def containing_pair(cls, u: int, v: int, k: int = None) -> "AnchorQuery":
        return cls(mode=AnchorMode.CONTAINING_PAIR, anchors=(u, v), order_filter=k)

    def validate_for(self, graph: Graph) -> None:
        """
        Checks that anchors and the order filter fit the given graph.

        :raises ParameterRangeError: for anchors outside of the graph
        :param graph: graph the query will run against
        :type graph: Graph
        """
        for anchor in self.anchors:
            if anchor >= graph.order:
                raise ParameterRangeError(
                    f"Anchor vertex {anchor} not in 0..{graph.order - 1}"
                )
