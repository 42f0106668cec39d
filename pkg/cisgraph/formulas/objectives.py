import re
from enum import Enum
from typing import Any, Dict, Optional

import pydantic

from cisgraph.counting import CountProfile
from cisgraph.exceptions import ParameterRangeError

_OBJECTIVE_RE = re.compile(r"^(?:total|order_(?P<k>\d+))(?:_(?P<sense>min|max))?$")


class Sense(str, Enum):
    MIN = "min"
    MAX = "max"


class Objective(pydantic.BaseModel):
    """
    Quantity a scan optimizes: the total count (``k`` unset) or N_k.
    ``sense`` selects the extremum an expected extremizer set refers to, scans
    always report both ends.
    """

    k: Optional[int] = None
    sense: Optional[Sense] = None

    class Config:
        frozen = True

    @pydantic.root_validator(skip_on_failure=True)
    def check_order(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        k = values.get("k")
        if k is not None and k < 1:
            raise ParameterRangeError(f"Objective order has to be >= 1, got {k}")
        return values

    @classmethod
    def parse(cls, text: str) -> "Objective":
        """
        Reads ``total``, ``total_min``, ``order_3``, ``order_3_max`` etc.

        :raises ParameterRangeError: for any other text
        :param text: objective name
        :type text: str
        :return: parsed objective
        :rtype: Objective
        """
        match = _OBJECTIVE_RE.match(text.strip())
        if not match:
            raise ParameterRangeError(
                f"Unknown objective {text!r}, expected total[_min|_max] "
                "or order_<k>[_min|_max]"
            )
        k = match.group("k")
        sense = match.group("sense")
        return cls(k=int(k) if k else None, sense=Sense(sense) if sense else None)

    @classmethod
    def total(cls, sense: Sense = None) -> "Objective":
        return cls(sense=sense)

    @classmethod
    def order(cls, k: int, sense: Sense = None) -> "Objective":
        return cls(k=k, sense=sense)

    @property
    def base(self) -> str:
        return "total" if self.k is None else f"order_{self.k}"

    @property
    def label(self) -> str:
        return self.base if self.sense is None else f"{self.base}_{self.sense.value}"

    def __str__(self) -> str:
        return self.label

    def with_sense(self, sense: Sense) -> "Objective":
        return Objective(k=self.k, sense=sense)

    def check_order(self, order: int) -> None:
        if self.k is not None and self.k > order:
            raise ParameterRangeError(
                f"Objective {self.label} needs k <= n, got n={order}"
            )

    def value_of(self, profile: CountProfile) -> int:
        """
        Evaluates the objective on a count profile.

        :param profile: profile of a scanned graph
        :type profile: CountProfile
        :return: total or N_k
        :rtype: int
        """
        return profile.total if self.k is None else profile.count(self.k)
