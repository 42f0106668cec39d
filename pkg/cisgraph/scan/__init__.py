"""
Exhaustive extremal scans over generated catalogs and the claim verification
harness.
"""
from cisgraph.scan.claims import CLAIMS, UNICYCLIC_SEQUENCE, claim
from cisgraph.scan.extremal import ScannedGraph, Scanner, extremal_scan
from cisgraph.scan.harness import claim_ids, run_claims, verify_theorems
from cisgraph.scan.pool import ScanPool, count_chunk
from cisgraph.scan.reports import (
    Caps,
    ClaimResult,
    ClaimStatus,
    ScanReport,
    VerificationReport,
)

__all__ = [
    "CLAIMS",
    "Caps",
    "ClaimResult",
    "ClaimStatus",
    "ScanPool",
    "ScanReport",
    "ScannedGraph",
    "Scanner",
    "UNICYCLIC_SEQUENCE",
    "VerificationReport",
    "claim",
    "claim_ids",
    "count_chunk",
    "extremal_scan",
    "run_claims",
    "verify_theorems",
]
