"""Operator cache, timing decorator and package exports."""

from __future__ import annotations

import numpy as np
import pytest

import tools
from tools.cache import OperatorCache
from tools.performance_monitor import get_timings, performance_monitor, reset_timings


def test_cache_builds_each_entry_once() -> None:
    cache = OperatorCache(prefix="test", max_entries=2)
    calls = []

    def build():
        calls.append(1)
        return np.eye(2)

    first = cache.get_or_build("a", build)
    second = cache.get_or_build("a", build)
    assert first is second
    assert len(calls) == 1
    assert not first.flags.writeable
    assert (cache.hits, cache.misses) == (1, 1)


def test_cache_clears_when_full_and_invalidates() -> None:
    cache = OperatorCache(max_entries=2)
    for key in "abc":
        cache.get_or_build(key, lambda: np.zeros(1))
    assert len(cache) == 1
    cache.invalidate("c")
    assert cache.get("c") is None
    cache.get_or_build("d", lambda: np.zeros(1))
    cache.invalidate()
    assert len(cache) == 0


def test_performance_monitor_records_and_reraises() -> None:
    reset_timings()

    @performance_monitor("test.square")
    def square(x: int) -> int:
        return x * x

    @performance_monitor("test.broken")
    def broken() -> None:
        raise RuntimeError("nope")

    assert square(3) == 9
    with pytest.raises(RuntimeError):
        broken()
    timings = get_timings()
    assert len(timings["test.square"]) == 1
    assert "test.broken" not in timings
    reset_timings()
    assert get_timings() == {}


def test_lazy_tool_exports() -> None:
    from tools.question_algebra import xnor_compose

    assert tools.xnor_compose is xnor_compose
    assert "validate_axioms" in tools.__all__
    with pytest.raises(AttributeError):
        tools.not_a_tool
