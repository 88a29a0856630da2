"""Sorted-array backends with galloping search, for both iterator flavours.

Every backend takes a ``ProbeCounters`` that records each key inspected
(``probes``) and each call to a seek function (``seeks``). Probe counts are
deterministic, which makes them the portable measure of work.
"""

from __future__ import annotations

import functools
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, Callable, Optional

from fairjoin.bound import DONE, Atleast, Bound, Found, Greater
from fairjoin.naive import Iter, check_strictly_ascending
from fairjoin.seek import Seek


def gallop(pred: Callable[[int], bool], lo: int, hi: int) -> int:
    """Smallest ``i`` in ``[lo, hi)`` with ``pred(i)``, or ``hi`` if none.

    ``pred`` must be monotone. Exponential probing then binary search, so the
    number of probes is O(log(i - lo)).
    """
    if lo >= hi:
        return hi
    if pred(lo):
        return lo
    step = 1
    while True:
        if lo + step >= hi:
            return _bisect(pred, lo, hi)
        if pred(lo + step):
            return _bisect(pred, lo, lo + step)
        lo += step
        step *= 2


def _bisect(pred: Callable[[int], bool], lo: int, hi: int) -> int:
    # pred(lo) is false; pred(hi) is true or hi is out of range
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


class Repeated(Sequence):
    """``length`` copies of ``value`` without materializing them."""

    def __init__(self, value: Any, length: int):
        self.value = value
        self.length = length

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self.value] * len(range(*i.indices(self.length)))
        if not -self.length <= i < self.length:
            raise IndexError(i)
        return self.value


@dataclass(frozen=True)
class SortedArray:
    keys: Sequence[Any]
    values: Sequence[Any]

    def __post_init__(self):
        if len(self.keys) != len(self.values):
            raise ValueError(f"{len(self.keys)} keys but {len(self.values)} values")
        check_strictly_ascending(self.keys)

    @classmethod
    def from_pairs(cls, pairs) -> SortedArray:
        pairs = list(pairs)
        return cls([k for k, _ in pairs], [v for _, v in pairs])

    def __len__(self) -> int:
        return len(self.keys)

    def pairs(self) -> list[tuple[Any, Any]]:
        return list(zip(self.keys, self.values))


@dataclass
class ProbeCounters:
    probes: int = 0
    seeks: int = 0

    def reset(self) -> None:
        self.probes = 0
        self.seeks = 0

    def snapshot(self) -> tuple[int, int]:
        return self.probes, self.seeks


def _probe(keys: Sequence[Any], counters: ProbeCounters, accept: Callable[[Any], bool]):
    def pred(i: int) -> bool:
        counters.probes += 1
        return accept(keys[i])

    return pred


def from_sorted_array_iter(arr: SortedArray, counters: ProbeCounters | None = None) -> Optional[Iter]:
    """Unfair iterator over ``arr``; seeking gallops from the next index on."""
    c = counters if counters is not None else ProbeCounters()
    keys, values, hi = arr.keys, arr.values, len(arr)

    def go(lo: int) -> Optional[Iter]:
        if lo >= hi:
            return None
        c.probes += 1
        k = keys[lo]

        def seek(target: Any) -> Optional[Iter]:
            c.seeks += 1
            return go(gallop(_probe(keys, c, lambda key: target <= key), lo + 1, hi))

        return Iter(k, values[lo], seek)

    return go(0)


class ArraySeek(Seek):
    """Fair iterator over a sorted array; seeking gallops from the current index."""

    __slots__ = ("array", "lo", "counters")

    def __init__(self, array: SortedArray, lo: int, counters: ProbeCounters):
        self.array = array
        self.lo = lo
        self.counters = counters
        if lo >= len(array):
            self.posn = DONE
        else:
            counters.probes += 1
            self.posn = Found(array.keys[lo], array.values[lo])

    def seek(self, bound: Bound) -> Seek:
        c = self.counters
        c.seeks += 1
        if type(bound) is Atleast:
            k = bound.key
            accept = lambda key: key >= k  # noqa: E731
        elif type(bound) is Greater:
            k = bound.key
            accept = lambda key: key > k  # noqa: E731
        else:
            accept = lambda key: False  # noqa: E731
        lo = gallop(_probe(self.array.keys, c, accept), self.lo, len(self.array))
        return self if lo == self.lo else ArraySeek(self.array, lo, c)


def from_sorted_array_seek(arr: SortedArray, counters: ProbeCounters | None = None) -> Seek:
    return ArraySeek(arr, 0, counters if counters is not None else ProbeCounters())


def with_counters(backend_factory, counters: ProbeCounters):
    """Bind ``counters`` into a backend factory such as ``from_sorted_array_seek``."""
    return functools.partial(backend_factory, counters=counters)

