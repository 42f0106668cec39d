import logging
import time
from typing import List, Optional, Sequence

from cisgraph.exceptions import ParameterRangeError
from cisgraph.scan.claims import CLAIMS, ClaimContext
from cisgraph.scan.extremal import Scanner
from cisgraph.scan.pool import ScanPool
from cisgraph.scan.reports import Caps, ClaimResult, ClaimStatus, VerificationReport

logger = logging.getLogger(__name__)


def claim_ids() -> List[str]:
    return list(CLAIMS)


async def run_claims(
    scanner: Scanner, caps: Caps, claims: Optional[Sequence[str]] = None
) -> VerificationReport:
    """
    Runs the selected claims with an existing scanner, sending claim_checked on
    the scanner signals after every claim.

    :raises ParameterRangeError: for unknown claim ids
    :param scanner: scanner providing profiles and scans
    :type scanner: Scanner
    :param caps: orders swept per claim family
    :type caps: Caps
    :param claims: claim ids to run, defaults to all registered claims
    :type claims: Optional[Sequence[str]]
    :return: report with one result per claim, in registry order
    :rtype: VerificationReport
    """
    selected = list(CLAIMS) if claims is None else list(claims)
    unknown = [claim_id for claim_id in selected if claim_id not in CLAIMS]
    if unknown:
        raise ParameterRangeError(f"Unknown claims: {', '.join(unknown)}")
    context = ClaimContext(scanner=scanner, caps=caps)
    started = time.perf_counter()
    results: List[ClaimResult] = []
    for claim_id in selected:
        claim_started = time.perf_counter()
        result = await CLAIMS[claim_id].check(context)
        logger.info(
            "%s %s after %d checks in %.2fs",
            claim_id,
            result.status.value,
            result.checked,
            time.perf_counter() - claim_started,
        )
        if result.status == ClaimStatus.FAIL:
            logger.warning(
                "%s failed, counterexamples: %s", claim_id, result.counterexamples
            )
        results.append(result)
        await scanner.signals.claim_checked.send(sender=scanner, result=result)
    return VerificationReport(
        caps=caps, results=results, elapsed=time.perf_counter() - started
    )


async def verify_theorems(
    caps: Optional[Caps] = None,
    jobs: int = 1,
    claims: Optional[Sequence[str]] = None,
    scanner: Optional[Scanner] = None,
) -> VerificationReport:
    """
    Verifies every registered claim over the catalogs allowed by the caps.
    Failures are report entries, never exceptions.

    :param caps: orders swept per claim family, defaults to Caps()
    :type caps: Optional[Caps]
    :param jobs: number of worker processes counting profiles
    :type jobs: int
    :param claims: claim ids to run, defaults to all
    :type claims: Optional[Sequence[str]]
    :param scanner: optional scanner with connected receivers, its pool is used
    :type scanner: Optional[Scanner]
    :return: verification report
    :rtype: VerificationReport
    """
    caps = caps or Caps()
    if scanner is not None:
        return await run_claims(scanner, caps, claims)
    async with ScanPool(jobs=jobs) as pool:
        return await run_claims(Scanner(pool), caps, claims)
