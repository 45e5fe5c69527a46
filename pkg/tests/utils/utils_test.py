import json
from enum import Enum
from time import sleep

import numpy as np
import pytest

from gatebound.utils import (AggregatedException, ContextDidNotEndException, InvariantViolationException,
                             KwargsException, ObservableEvent, TimerContext, json_safe_encoder)


def test_kwargs_exception_keeps_kwargs():
    ex = KwargsException('bad region', n=5, bad_indices=[7])
    assert str(ex) == 'bad region'
    assert ex.kwargs == {'n': 5, 'bad_indices': [7]}


def test_invariant_violation_is_aggregated():
    inner = [InvariantViolationException('a'), InvariantViolationException('b')]
    ex = InvariantViolationException('2 failed', inner_exceptions=inner, failed_cases=['a', 'b'])
    assert isinstance(ex, AggregatedException)
    assert ex.inner_exceptions == inner
    assert ex.kwargs['failed_cases'] == ['a', 'b']


def test_observable_event():
    fired = []
    event: ObservableEvent[int] = ObservableEvent()
    event.subscribe(fired.append)
    assert event.fire(3)
    assert event.fire(4)
    assert fired == [3, 4]


def test_observable_event_failures():
    calls = []

    def failing(value):
        raise RuntimeError(value)

    event: ObservableEvent[int] = ObservableEvent()
    event.subscribe(failing)
    event.subscribe(calls.append)
    assert not event.fire(1)
    assert calls == [1]


def test_timer_context():
    timer = TimerContext()
    with pytest.raises(ContextDidNotEndException):
        _ = timer.elapsed_seconds
    with timer:
        sleep(0.01)
    assert timer.elapsed_seconds >= 0.01


class _Color(Enum):
    RED = 'red'


class _WithDict:
    def to_dict(self):
        return {'value': 1}


def test_json_safe_encoder():
    data = {'int': np.int64(3), 'float': np.float32(0.5), 'bool': np.bool_(True), 'array': np.arange(3),
            'set': frozenset({2, 1}), 'enum': _Color.RED, 'object': _WithDict(), 'bytes': b'xz'}
    assert json.loads(json.dumps(data, default=json_safe_encoder)) == {
        'int': 3, 'float': 0.5, 'bool': True, 'array': [0, 1, 2], 'set': [1, 2], 'enum': 'red',
        'object': {'value': 1}, 'bytes': 'xz'}
