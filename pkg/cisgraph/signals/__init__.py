"""
Signals and SignalEmitter that gathers the signals of a scanner.
Used to notify receiver functions about scan and verification progress.
"""
from cisgraph.signals.decorators import (
    on_claim_checked,
    on_scan_finished,
    on_scan_started,
    receiver,
)
from cisgraph.signals.signal import Signal, SignalEmitter

__all__ = [
    "Signal",
    "SignalEmitter",
    "on_claim_checked",
    "on_scan_finished",
    "on_scan_started",
    "receiver",
]
