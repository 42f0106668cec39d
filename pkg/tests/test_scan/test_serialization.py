import json
from math import comb

from cisgraph.counting import CountProfile
from cisgraph.scan.reports import (
    Caps,
    ClaimResult,
    ClaimStatus,
    ScanReport,
    VerificationReport,
)
from cisgraph.serialization import (
    dumps,
    formula_payload,
    profile_payload,
    scan_csv,
    scan_payload,
    verification_csv,
    verification_payload,
)


def scan_report() -> ScanReport:
    return ScanReport(
        graph_class="tree",
        order=4,
        objective="total",
        min_value=10,
        max_value=11,
        minimizers=["Ch"],
        maximizers=["Cs"],
        graphs_scanned=2,
        elapsed=0.25,
    )


def test_dumps_keeps_key_order():
    payload = {"b": 1, "a": [1, 2]}
    assert dumps(payload) == '{"b":1,"a":[1,2]}'
    assert dumps(payload, indent=True).startswith('{\n  "b": 1,')


def test_counts_are_strings():
    profile = CountProfile(order=64, per_order=[comb(64, k) for k in range(1, 65)])
    payload = profile_payload(profile)
    assert payload["total"] == str(2 ** 64 - 1)
    assert payload["mean_order"] == f"{2 ** 69}/{2 ** 64 - 1}"
    assert all(isinstance(count, str) for count in payload["per_order"])
    assert formula_payload("bound", "max_total_graph", {"n": 64}, 2 ** 64 - 1) == {
        "bound": "max_total_graph",
        "params": {"n": 64},
        "value": "18446744073709551615",
    }


def test_run_times_only_under_meta():
    report = scan_report()
    payload = scan_payload(report)
    assert payload["meta"] == {"elapsed": 0.25}
    assert "meta" not in scan_payload(report, with_meta=False)
    other = scan_report().copy(update={"elapsed": 3.0})
    assert scan_payload(other, with_meta=False) == scan_payload(report, with_meta=False)


def test_scan_csv():
    text = scan_csv([scan_report(), scan_report()])
    lines = text.splitlines()
    assert len(lines) == 3
    assert lines[1] == "tree,4,total,10,11,Ch,Cs,2"


def test_verification_outputs():
    report = VerificationReport(
        caps=Caps(),
        results=[
            ClaimResult(
                claim="THM-1.1",
                description="trees",
                status=ClaimStatus.PASS,
                parameters={"n": [1, 9]},
                checked=9,
            ),
            ClaimResult(
                claim="X",
                description="x",
                status=ClaimStatus.FAIL,
                counterexamples=["Bw", "Ch"],
            ),
        ],
    )
    payload = verification_payload(report)
    assert payload["passed"] is False
    assert payload["caps"]["trees"] == 9
    assert [claim["status"] for claim in payload["claims"]] == ["PASS", "FAIL"]
    json.loads(dumps(payload))

    lines = verification_csv(report).splitlines()
    assert lines[1] == 'THM-1.1,PASS,"{""n"":[1,9]}",'
    assert lines[2] == "X,FAIL,{},Bw Ch"
