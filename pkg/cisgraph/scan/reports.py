from enum import Enum
from typing import Any, Dict, List

import pydantic

from cisgraph.atlas.classes import CLASS_CAPS, ClassTag
from cisgraph.exceptions import ParameterRangeError, UnsupportedClassError

CLOSED_FORMS_CAP = 20


class ScanReport(pydantic.BaseModel):
    """
    Exact minimum and maximum of an objective over a complete catalog, with
    the canonical codes of every graph attaining them.
    """

    graph_class: str
    order: int
    objective: str
    min_value: int
    max_value: int
    minimizers: List[str]
    maximizers: List[str]
    graphs_scanned: int
    elapsed: float = 0.0

    @pydantic.root_validator(skip_on_failure=True)
    def check_extremes(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        if values["min_value"] > values["max_value"]:
            raise ParameterRangeError("Scan minimum exceeds its maximum")
        if not values["minimizers"] or not values["maximizers"]:
            raise ParameterRangeError("Scan extremizer lists cannot be empty")
        return values


class ClaimStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class ClaimResult(pydantic.BaseModel):
    """
    Outcome of one verified claim. ``parameters`` records the swept ranges,
    ``checked`` the number of graph / parameter combinations tested.
    """

    claim: str
    description: str
    status: ClaimStatus
    parameters: Dict[str, Any] = {}
    checked: int = 0
    counterexamples: List[str] = []
    details: List[str] = []

    @pydantic.root_validator(skip_on_failure=True)
    def check_counterexamples(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        if values["status"] == ClaimStatus.FAIL and not values["counterexamples"]:
            raise ParameterRangeError(
                f"Failed claim {values['claim']} needs at least one counterexample"
            )
        return values


class Caps(pydantic.BaseModel):
    """
    Largest orders the verification harness sweeps per claim family.
    """

    all_graphs: int = 6
    connected: int = 7
    trees: int = 9
    rooted: int = 8
    unicyclic: int = 9
    r_components_order: int = 7
    r_components_max_r: int = 3
    closed_forms: int = 14

    @pydantic.root_validator(skip_on_failure=True)
    def check_caps(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        limits = {
            "all_graphs": CLASS_CAPS[ClassTag.ALL],
            "connected": CLASS_CAPS[ClassTag.CONNECTED],
            "trees": CLASS_CAPS[ClassTag.TREE],
            "rooted": CLASS_CAPS[ClassTag.TREE],
            "unicyclic": CLASS_CAPS[ClassTag.UNICYCLIC],
            "r_components_order": CLASS_CAPS[ClassTag.R_COMPONENTS],
            "closed_forms": CLOSED_FORMS_CAP,
        }
        for name, limit in limits.items():
            if values[name] > limit:
                raise UnsupportedClassError(
                    f"Cap {name}={values[name]} exceeds the supported {limit}"
                )
        for name, value in values.items():
            if value < 0:
                raise ParameterRangeError(f"Cap {name} cannot be negative, got {value}")
        return values


class VerificationReport(pydantic.BaseModel):
    caps: Caps
    results: List[ClaimResult]
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(result.status != ClaimStatus.FAIL for result in self.results)

    def failed(self) -> List[ClaimResult]:
        return [result for result in self.results if result.status == ClaimStatus.FAIL]

    def result(self, claim: str) -> ClaimResult:
        """
        Looks a claim up by id.

        :raises ParameterRangeError: if the claim was not run
        :param claim: claim id, e.g. THM-3.4
        :type claim: str
        :return: result of the claim
        :rtype: ClaimResult
        """
        for result in self.results:
            if result.claim == claim:
                return result
        raise ParameterRangeError(f"Claim {claim} is not part of the report")
