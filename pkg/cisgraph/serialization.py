"""
JSON payloads and CSV summaries of counts, formulas, scans and verification.

Counts are written as decimal strings, run times only inside the ``meta``
object, so payloads without ``meta`` are identical between runs.
"""
import csv
import io
from typing import Any, Dict, Iterable, Optional

from cisgraph.counting import CountProfile
from cisgraph.scan.reports import ScanReport, VerificationReport

try:
    import orjson as json
except ImportError:  # pragma: no cover
    import json  # type: ignore

SCAN_CSV_HEADER = (
    "class",
    "order",
    "objective",
    "min_value",
    "max_value",
    "minimizers",
    "maximizers",
    "graphs_scanned",
)
CLAIM_CSV_HEADER = ("claim", "status", "parameters", "counterexamples")


def dumps(payload: Dict[str, Any], indent: bool = False) -> str:
    """
    Serializes a payload keeping the key order.

    :param payload: json compatible dictionary
    :type payload: Dict[str, Any]
    :param indent: pretty print with two spaces
    :type indent: bool
    :return: json text
    :rtype: str
    """
    if json.__name__ == "orjson":
        option = json.OPT_INDENT_2 if indent else 0  # type: ignore
        return json.dumps(payload, option=option).decode("utf-8")  # type: ignore
    if indent:
        return json.dumps(payload, indent=2)
    return json.dumps(payload, separators=(",", ":"))


def _meta(elapsed: Optional[float]) -> Dict[str, Any]:
    return {"elapsed": round(elapsed, 6)} if elapsed is not None else {}


def profile_payload(
    profile: CountProfile, anchored: Optional[Dict[str, Any]] = None
) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "order": profile.order,
        "per_order": [str(count) for count in profile.per_order],
        "total": str(profile.total),
        "mean_order": (
            f"{profile.mean_order.numerator}/{profile.mean_order.denominator}"
        ),
    }
    if anchored is not None:
        payload["anchored"] = anchored
    return payload


def formula_payload(kind: str, name: str, params: Dict[str, int], value: int) -> Dict:
    """
    Payload of a closed form or bound evaluation.

    :param kind: ``family`` or ``bound``
    :type kind: str
    :param name: family tag or bound id
    :type name: str
    :param params: parameters of the family or bound
    :type params: Dict[str, int]
    :param value: evaluated count
    :type value: int
    :return: payload
    :rtype: Dict
    """
    return {kind: name, "params": params, "value": str(value)}


def scan_payload(report: ScanReport, with_meta: bool = True) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "class": report.graph_class,
        "order": report.order,
        "objective": report.objective,
        "min_value": str(report.min_value),
        "max_value": str(report.max_value),
        "minimizers": report.minimizers,
        "maximizers": report.maximizers,
        "graphs_scanned": report.graphs_scanned,
    }
    if with_meta:
        payload["meta"] = _meta(report.elapsed)
    return payload


def verification_payload(report: VerificationReport) -> Dict[str, Any]:
    return {
        "passed": report.passed,
        "caps": report.caps.dict(),
        "claims": [
            {
                "claim": result.claim,
                "description": result.description,
                "status": result.status.value,
                "parameters": result.parameters,
                "checked": result.checked,
                "counterexamples": result.counterexamples,
                "details": result.details,
            }
            for result in report.results
        ],
        "meta": _meta(report.elapsed),
    }


def _csv(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def scan_csv(reports: Iterable[ScanReport]) -> str:
    return _csv(
        SCAN_CSV_HEADER,
        (
            (
                report.graph_class,
                report.order,
                report.objective,
                report.min_value,
                report.max_value,
                " ".join(report.minimizers),
                " ".join(report.maximizers),
                report.graphs_scanned,
            )
            for report in reports
        ),
    )


def verification_csv(report: VerificationReport) -> str:
    return _csv(
        CLAIM_CSV_HEADER,
        (
            (
                result.claim,
                result.status.value,
                dumps(result.parameters),
                " ".join(result.counterexamples),
            )
            for result in report.results
        ),
    )
