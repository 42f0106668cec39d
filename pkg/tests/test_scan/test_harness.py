from typing import Any, List

import pytest

from cisgraph import ParameterRangeError, UnsupportedClassError
from cisgraph.scan import (
    CLAIMS,
    Caps,
    ClaimResult,
    ClaimStatus,
    ScanPool,
    Scanner,
    UNICYCLIC_SEQUENCE,
    VerificationReport,
    claim,
    claim_ids,
    run_claims,
    verify_theorems,
)
from cisgraph.scan.claims import ClaimContext, Tally
from cisgraph.signals import on_claim_checked
from tests.settings import TEST_JOBS

SMALL_CAPS = Caps(
    all_graphs=5,
    connected=5,
    trees=7,
    rooted=6,
    unicyclic=7,
    r_components_order=5,
    r_components_max_r=2,
    closed_forms=8,
)


def test_registry_lists_every_claim():
    assert claim_ids() == list(CLAIMS)
    assert {
        "PROP-2.1",
        "THM-1.1",
        "LEM-1.2",
        "THM-2.2",
        "PROP-2.3",
        "THM-3.4",
        "THM-3.5",
        "LEM-3.3",
        "PROP-3.6",
        "PROP-3.8",
        "SEC-4-MIN",
        "SEC-4-MAX",
        "SEQ-UNICYCLIC",
        "CLOSED-FORMS",
    } <= set(claim_ids())
    assert UNICYCLIC_SEQUENCE[:7] == (1, 2, 5, 13, 33, 89, 240)


def test_caps_are_validated():
    with pytest.raises(UnsupportedClassError):
        Caps(all_graphs=8)
    with pytest.raises(UnsupportedClassError):
        Caps(unicyclic=12)
    with pytest.raises(ParameterRangeError):
        Caps(trees=-1)


@pytest.mark.asyncio
async def test_small_caps_pass_every_claim():
    report = await verify_theorems(SMALL_CAPS, jobs=TEST_JOBS)
    assert report.passed, [result.details for result in report.failed()]
    assert [result.claim for result in report.results] == claim_ids()
    for result in report.results:
        assert result.status == ClaimStatus.PASS, result.claim
        assert result.checked > 0


@pytest.mark.asyncio
async def test_selected_claims_and_signals():
    checked: List[str] = []
    async with ScanPool() as pool:
        scanner = Scanner(pool)

        @on_claim_checked(scanner)
        async def collect(sender: Scanner, result: ClaimResult, **kwargs: Any) -> None:
            checked.append(result.claim)

        report = await run_claims(scanner, SMALL_CAPS, ["THM-3.4", "PROP-3.8"])
    assert checked == ["THM-3.4", "PROP-3.8"]
    assert report.result("THM-3.4").status == ClaimStatus.PASS
    assert report.result("PROP-3.8").parameters
    with pytest.raises(ParameterRangeError):
        report.result("THM-1.1")


@pytest.mark.asyncio
async def test_claims_without_orders_to_check_are_skipped():
    caps = Caps(unicyclic=2, connected=2, trees=3)
    report = await verify_theorems(
        caps, claims=["THM-3.4", "THM-3.5", "SEQ-UNICYCLIC", "PROP-2.3", "LEM-1.2"]
    )
    assert report.passed
    assert {result.status for result in report.results} == {ClaimStatus.SKIPPED}


@pytest.mark.asyncio
async def test_unknown_claims_are_rejected():
    with pytest.raises(ParameterRangeError):
        await verify_theorems(SMALL_CAPS, claims=["THM-9.9"])


@pytest.mark.asyncio
async def test_failing_claims_are_reported_not_raised():
    @claim("ALWAYS-FAILS", "a claim that never holds")
    async def always_fails(context: ClaimContext) -> ClaimResult:
        tally = Tally("ALWAYS-FAILS", {"n": [1, 1]})
        tally.expect(False, ["@"], "never holds")
        return tally.result()

    try:
        report = await verify_theorems(SMALL_CAPS, claims=["ALWAYS-FAILS", "THM-1.1"])
    finally:
        del CLAIMS["ALWAYS-FAILS"]
    assert not report.passed
    assert [result.claim for result in report.failed()] == ["ALWAYS-FAILS"]
    assert report.result("ALWAYS-FAILS").counterexamples == ["@"]
    assert report.result("THM-1.1").status == ClaimStatus.PASS


def test_failed_results_need_counterexamples():
    with pytest.raises(ParameterRangeError):
        ClaimResult(claim="X", description="x", status=ClaimStatus.FAIL)


@pytest.mark.asyncio
async def test_default_caps_pass_every_claim():
    report: VerificationReport = await verify_theorems(jobs=TEST_JOBS)
    assert report.caps == Caps()
    assert report.passed, [result.details for result in report.failed()]
    assert not [r for r in report.results if r.status == ClaimStatus.SKIPPED]
