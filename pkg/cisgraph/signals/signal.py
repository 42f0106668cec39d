import asyncio
import inspect
from typing import Any, Callable, Dict, List, TYPE_CHECKING, Tuple, Union

from cisgraph.exceptions import SignalDefinitionError


def callable_accepts_kwargs(func: Callable) -> bool:
    """
    Checks if function accepts **kwargs.

    :param func: function which signature needs to be checked
    :type func: function
    :return: result of the check
    :rtype: bool
    """
    return any(
        p
        for p in inspect.signature(func).parameters.values()
        if p.kind == p.VAR_KEYWORD
    )


def make_id(target: Any) -> Union[int, Tuple[int, int]]:
    """
    Creates id of a function or bound method, used to spot receivers that are
    already connected.

    :param target: target which id we want
    :type target: Any
    :return: id of the target
    :rtype: Union[int, Tuple[int, int]]
    """
    if hasattr(target, "__func__"):
        return id(target.__self__), id(target.__func__)
    return id(target)


class Signal:
    """
    Signal that notifies all connected receivers.
    Scans send scan_started and scan_finished, the verification harness
    sends claim_checked.
    """

    def __init__(self) -> None:
        self._receivers: List[Tuple[Union[int, Tuple[int, int]], Callable]] = []

    @property
    def receivers(self) -> List[Callable]:
        return [receiver for _, receiver in self._receivers]

    def connect(self, receiver: Callable) -> None:
        """
        Connects given receiver to the signal, connecting twice is a no op.

        :raises SignalDefinitionError: if receiver is not callable
        or does not accept **kwargs
        :param receiver: async receiver function
        :type receiver: Callable
        """
        if not callable(receiver):
            raise SignalDefinitionError("Signal receivers must be callable.")
        if not callable_accepts_kwargs(receiver):
            raise SignalDefinitionError(
                "Signal receivers must accept **kwargs argument."
            )
        receiver_key = make_id(receiver)
        if not any(rec_id == receiver_key for rec_id, _ in self._receivers):
            self._receivers.append((receiver_key, receiver))

    def disconnect(self, receiver: Callable) -> bool:
        """
        Removes the receiver from the signal.

        :param receiver: receiver function
        :type receiver: Callable
        :return: flag if receiver was removed
        :rtype: bool
        """
        receiver_key = make_id(receiver)
        for index, (rec_id, _) in enumerate(self._receivers):
            if rec_id == receiver_key:
                del self._receivers[index]
                return True
        return False

    async def send(self, sender: Any, **kwargs: Any) -> None:
        """
        Notifies all receivers with given kwargs, concurrently.

        :param sender: scanner or harness that sends the signal
        :type sender: Any
        :param kwargs: arguments passed to receivers
        :type kwargs: Any
        """
        await asyncio.gather(
            *[receiver(sender=sender, **kwargs) for _, receiver in self._receivers]
        )


class SignalEmitter:
    """
    Registry of named signals, a signal is created on first access.
    """

    if TYPE_CHECKING:  # pragma: no cover
        signals: Dict[str, Signal]

    def __init__(self) -> None:
        object.__setattr__(self, "signals", dict())

    def __getattr__(self, item: str) -> Signal:
        return self.signals.setdefault(item, Signal())

    def __setattr__(self, key: str, value: Any) -> None:
        if not isinstance(value, Signal):
            raise SignalDefinitionError(f"{key} has to be a Signal, got {value!r}")
        signals = object.__getattribute__(self, "signals")
        signals[key] = value
