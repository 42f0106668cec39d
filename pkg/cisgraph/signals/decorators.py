from typing import Any, Callable, List, Union

Senders = Union[Any, List[Any]]


def receiver(signal: str, senders: Senders) -> Callable:
    """
    Connect given function to the named signal of all senders.

    :param signal: name of the signal to register to
    :type signal: str
    :param senders: one or a list of objects exposing a ``signals`` emitter
    (scanners)
    :type senders: Senders
    :return: returns the original function untouched
    :rtype: Callable
    """

    def _decorator(func: Callable) -> Callable:
        targets = senders if isinstance(senders, list) else [senders]
        for sender in targets:
            getattr(sender.signals, signal).connect(func)
        return func

    return _decorator


def on_scan_started(senders: Senders) -> Callable:
    """
    Connect given function to scan_started, sent with graph_class, order and
    objective before a scan counts its catalog.
    """
    return receiver(signal="scan_started", senders=senders)


def on_scan_finished(senders: Senders) -> Callable:
    """
    Connect given function to scan_finished, sent with the finished report.
    """
    return receiver(signal="scan_finished", senders=senders)


def on_claim_checked(senders: Senders) -> Callable:
    return receiver(signal="claim_checked", senders=senders)
