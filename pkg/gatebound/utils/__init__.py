import datetime
import logging
from enum import Enum
from time import perf_counter
from typing import TypeVar, List, Generic, Callable, Optional, Any

import numpy as np

_logger = logging.getLogger(__name__)


class KwargsException(Exception):
    """
    the basic exception type we use.
    adds the ability to add KWARGS to exception
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args)
        self.kwargs = kwargs


class AggregatedException(KwargsException):
    """
    an exception that can hold multiple inner exceptions
    """

    def __init__(self, *args, inner_exceptions: Optional[List[Exception]] = None, **kwargs):
        super().__init__(*args, **kwargs)
        self.inner_exceptions = inner_exceptions


class InvariantViolationException(AggregatedException):
    """
    raised when one or more exact invariant checks failed (the cli maps it to exit status 2)
    """
    pass


TEventType = TypeVar('TEventType')


class ObservableEvent(Generic[TEventType]):
    """
    a list of callbacks fired with a single event object (progress reports, for example).
    a failing callback is logged and does not stop the others
    """

    def __init__(self) -> None:
        self._handlers: List[Callable[[TEventType], None]] = []

    def subscribe(self, handler: Callable[[TEventType], None]) -> None:
        """
        subscribes a callback to the event

        :param handler: the callback to subscribe
        """
        self._handlers.append(handler)

    def fire(self, event: TEventType) -> bool:
        """
        calls every callback with the event

        :return: True if all the callbacks succeeded, False otherwise
        """
        ret_val = True
        for handler in self._handlers:
            try:
                handler(event)
            except Exception:
                _logger.exception(f"Event handler {handler!r} failed")
                ret_val = False
        return ret_val


class ContextDidNotEndException(KwargsException):
    """
    this exception is raised when elapsed seconds is called on a context that was not run
    """
    pass


class TimerContext:
    """
    a context object that records how long the context lasted
    """

    def __init__(self):
        self._start: float = perf_counter()
        self._elapsed: Optional[float] = None

    @property
    def elapsed_seconds(self) -> float:
        """
        the elapsed time (in seconds) between __enter__ and __exit__.
        raises ContextDidNotEndException if the context was not run to its end
        """
        if self._elapsed is None:
            raise ContextDidNotEndException("Context did not end")
        return self._elapsed

    def __enter__(self):
        self._start = perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self._elapsed = perf_counter() - self._start


def json_safe_encoder(obj: Any):
    """
    Convert objects that json can't handle into json-friendly values.

    numpy scalars and arrays become python numbers and lists, sets become sorted lists,
    enums become their values and objects exposing ``to_dict`` are converted through it.
    everything else falls back to its string form.

    :param obj: The object to make serializable.
    :return: Serializable version of the object.
    """

    try:
        if isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.bool_):
            return bool(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, (set, frozenset)):
            return sorted(obj)
        elif isinstance(obj, Enum):
            return obj.value
        elif hasattr(obj, 'to_dict'):
            return obj.to_dict()
        elif isinstance(obj, datetime.datetime):
            return obj.isoformat()
        elif isinstance(obj, bytes):
            return obj.decode()
        else:
            return str(obj)
    except Exception:
        return "UNENCODABLE"
