"""Lower bounds on iterator keys and the positions built from them.

A bound constrains every key an iterator may still produce:

    Atleast(k)   keys >= k
    Greater(k)   keys >  k
    DONE         no keys at all

Bounds are ordered so that ``p <= q`` exactly when every key satisfying ``q``
also satisfies ``p``. ``DONE`` is the top element.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Any, Union


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@functools.total_ordering
class Bound:
    __slots__ = ()

    def _embed(self) -> tuple:
        raise NotImplementedError

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Bound):
            return NotImplemented
        return self._embed() < other._embed()


@dataclass(frozen=True, eq=True, slots=True)
class Atleast(Bound):
    key: Any

    def _embed(self) -> tuple:
        return (1, self.key, 1)

    def __repr__(self) -> str:
        return f"Atleast({self.key!r})"


@dataclass(frozen=True, eq=True, slots=True)
class Greater(Bound):
    key: Any

    def _embed(self) -> tuple:
        return (1, self.key, 2)

    def __repr__(self) -> str:
        return f"Greater({self.key!r})"


class _Done(Bound):
    __slots__ = ()
    _instance: _Done | None = None

    def __new__(cls) -> _Done:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def _embed(self) -> tuple:
        # keys are never compared against this, only the leading tag
        return (2,)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Done)

    def __hash__(self) -> int:
        return hash(_Done)

    def __repr__(self) -> str:
        return "DONE"

    def __reduce__(self):
        return (_Done, ())


DONE = _Done()


@dataclass(frozen=True, slots=True)
class Found:
    """An iterator positioned at the pair ``(key, value)``."""

    key: Any
    value: Any


Position = Union[Found, Bound]


def compare_bounds(p: Bound, q: Bound) -> Ordering:
    a, b = p._embed(), q._embed()
    if a < b:
        return Ordering.LT
    if a > b:
        return Ordering.GT
    return Ordering.EQ


def max_bound(p: Bound, q: Bound) -> Bound:
    return q if compare_bounds(p, q) is Ordering.LT else p


def satisfies(bound: Bound, key: Any) -> bool:
    """True if ``key`` meets ``bound``; defined as ``bound <= Atleast(key)``."""
    return compare_bounds(bound, Atleast(key)) is not Ordering.GT


def key_predicate(bound: Bound):
    """Return a fast ``key -> bool`` equivalent to ``satisfies(bound, key)``."""
    if type(bound) is Atleast:
        k = bound.key
        return lambda key: key >= k
    if type(bound) is Greater:
        k = bound.key
        return lambda key: key > k
    return lambda key: False
