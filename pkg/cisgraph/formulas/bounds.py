"""
Extremal bounds on connected induced subgraph counts, pure integer arithmetic.
"""
from enum import Enum
from math import comb
from typing import Any, Callable, Dict, List, Optional, Tuple

import pydantic

from cisgraph.exceptions import ParameterRangeError


class BoundId(str, Enum):
    MIN_TOTAL_GRAPH = "min_total_graph"
    MAX_TOTAL_GRAPH = "max_total_graph"
    MIN_NK_CONNECTED = "min_Nk_connected"
    MAX_NK_CONNECTED = "max_Nk_connected"
    MIN_TOTAL_UNICYCLIC = "min_total_unicyclic"
    MAX_TOTAL_UNICYCLIC = "max_total_unicyclic"
    MIN_ROOTED_SUBTREES = "min_rooted_subtrees"
    MAX_ROOTED_SUBTREES = "max_rooted_subtrees"
    MAX_ROOTED_LEAF_SUBTREES = "max_rooted_leaf_subtrees"
    MIN_TOTAL_R_COMPONENTS = "min_total_r_components"
    MAX_TOTAL_R_COMPONENTS = "max_total_r_components"
    MIN_TOTAL_TREE = "min_total_tree"
    MAX_TOTAL_TREE = "max_total_tree"
    MIN_TOTAL_CONNECTED = "min_total_connected"
    MAX_TOTAL_CONNECTED = "max_total_connected"
    MIN_NK_TREE = "min_Nk_tree"


# bound -> (extra parameter besides n, minimal n)
BOUND_PARAMETERS: Dict[BoundId, Tuple[Optional[str], int]] = {
    BoundId.MIN_TOTAL_GRAPH: (None, 1),
    BoundId.MAX_TOTAL_GRAPH: (None, 1),
    BoundId.MIN_NK_CONNECTED: ("k", 1),
    BoundId.MAX_NK_CONNECTED: ("k", 3),
    BoundId.MIN_TOTAL_UNICYCLIC: (None, 3),
    BoundId.MAX_TOTAL_UNICYCLIC: (None, 3),
    BoundId.MIN_ROOTED_SUBTREES: (None, 1),
    BoundId.MAX_ROOTED_SUBTREES: (None, 1),
    BoundId.MAX_ROOTED_LEAF_SUBTREES: (None, 2),
    BoundId.MIN_TOTAL_R_COMPONENTS: ("r", 1),
    BoundId.MAX_TOTAL_R_COMPONENTS: ("r", 1),
    BoundId.MIN_TOTAL_TREE: (None, 1),
    BoundId.MAX_TOTAL_TREE: (None, 1),
    BoundId.MIN_TOTAL_CONNECTED: (None, 1),
    BoundId.MAX_TOTAL_CONNECTED: (None, 1),
    BoundId.MIN_NK_TREE: ("k", 1),
}


class BoundSpec(pydantic.BaseModel):
    bound: BoundId
    n: int
    k: Optional[int] = None
    r: Optional[int] = None

    class Config:
        frozen = True

    @pydantic.root_validator(skip_on_failure=True)
    def check_parameters(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        bound: BoundId = values["bound"]
        n = values["n"]
        extra, minimum = BOUND_PARAMETERS[bound]
        for name in ("k", "r"):
            given = values.get(name)
            if name == extra and given is None:
                raise ParameterRangeError(f"{bound.value} requires parameter {name}")
            if name != extra and given is not None:
                raise ParameterRangeError(
                    f"{bound.value} does not take parameter {name}"
                )
        if n < minimum:
            raise ParameterRangeError(f"{bound.value} needs n >= {minimum}, got n={n}")
        if extra is not None:
            lowest = 3 if bound == BoundId.MAX_NK_CONNECTED else 1
            value = values[extra]
            if not lowest <= value <= n:
                raise ParameterRangeError(
                    f"{bound.value} needs {lowest} <= {extra} <= n, "
                    f"got {extra}={value}, n={n}"
                )
        return values

    @classmethod
    def of(cls, bound: str, n: int, k: int = None, r: int = None) -> "BoundSpec":
        try:
            bound_id = BoundId(bound)
        except ValueError as exc:
            raise ParameterRangeError(f"Unknown bound {bound!r}") from exc
        return cls(bound=bound_id, n=n, k=k, r=r)

    @property
    def params(self) -> Dict[str, int]:
        extra, _ = BOUND_PARAMETERS[self.bound]
        params = {"n": self.n}
        if extra is not None:
            params[extra] = getattr(self, extra)
        return params


def near_equal_parts(n: int, r: int) -> List[int]:
    """
    Splits n into r parts differing by at most one: ceil(n / r) repeated
    ``n mod r`` times, then floor(n / r).

    :raises ParameterRangeError: unless 1 <= r <= n
    :param n: number to split
    :type n: int
    :param r: number of parts
    :type r: int
    :return: non increasing list of parts
    :rtype: List[int]
    """
    if not 1 <= r <= n:
        raise ParameterRangeError(f"Need 1 <= r <= n, got r={r}, n={n}")
    quotient, remainder = divmod(n, r)
    return [quotient + 1] * remainder + [quotient] * (r - remainder)


def _max_total_unicyclic(n: int) -> int:
    if n == 3:
        return 7
    if n == 4:
        return 13
    return n + 2 ** (n - 1)


_BOUNDS: Dict[BoundId, Callable[[BoundSpec], int]] = {
    BoundId.MIN_TOTAL_GRAPH: lambda b: b.n,
    BoundId.MAX_TOTAL_GRAPH: lambda b: 2 ** b.n - 1,
    BoundId.MIN_NK_CONNECTED: lambda b: b.n - b.k + 1,  # type: ignore
    BoundId.MAX_NK_CONNECTED: lambda b: comb(b.n, b.k),  # type: ignore
    BoundId.MIN_TOTAL_UNICYCLIC: lambda b: (b.n * b.n + 3 * b.n - 4) // 2,
    BoundId.MAX_TOTAL_UNICYCLIC: lambda b: _max_total_unicyclic(b.n),
    BoundId.MIN_ROOTED_SUBTREES: lambda b: b.n,
    BoundId.MAX_ROOTED_SUBTREES: lambda b: 2 ** (b.n - 1),
    BoundId.MAX_ROOTED_LEAF_SUBTREES: lambda b: 2 ** (b.n - 2),
    BoundId.MIN_TOTAL_R_COMPONENTS: lambda b: sum(
        comb(part + 1, 2) for part in near_equal_parts(b.n, b.r)  # type: ignore
    ),
    BoundId.MAX_TOTAL_R_COMPONENTS: (
        lambda b: (b.r - 1) + 2 ** (b.n - b.r + 1) - 1  # type: ignore
    ),
    BoundId.MIN_TOTAL_TREE: lambda b: comb(b.n + 1, 2),
    BoundId.MAX_TOTAL_TREE: lambda b: b.n - 1 + 2 ** (b.n - 1),
    BoundId.MIN_TOTAL_CONNECTED: lambda b: comb(b.n + 1, 2),
    BoundId.MAX_TOTAL_CONNECTED: lambda b: 2 ** b.n - 1,
    BoundId.MIN_NK_TREE: lambda b: b.n - b.k + 1,  # type: ignore
}


def bound_value(spec: BoundSpec) -> int:
    """
    Returns the exact value of the bound.

    :param spec: validated bound spec
    :type spec: BoundSpec
    :return: bound value
    :rtype: int
    """
    return _BOUNDS[spec.bound](spec)
