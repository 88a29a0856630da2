"""Lazy streams with an explicit "later" marker.

A stream is a memoized suspension which, when forced, produces one of three
constructors:

    EMPTY          the stream has ended
    Yield(x, tl)   element ``x`` followed by stream ``tl``
    Later(tl)      no information yet; continue with ``tl``

``Later`` lets a stream hand control back to its consumer after a bounded
amount of work. ``union_stream`` uses it as the signal to switch between its
inputs, which makes it complete even when one input never yields again.
``append_stream`` and ``interleave_stream`` are kept as the incomplete
alternatives.

Forcing is the unit of work: ``observe`` spends one unit of fuel per
constructor it forces, so divergence shows up as ``Status.OUT_OF_FUEL``
rather than a hang.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Iterable, Iterator, TypeVar, Union

E = TypeVar("E")


class _Empty:
    __slots__ = ()

    def __repr__(self) -> str:
        return "EMPTY"


EMPTY = _Empty()


@dataclass(frozen=True, slots=True)
class Yield(Generic[E]):
    head: E
    tail: Stream[E]


@dataclass(frozen=True, slots=True)
class Later(Generic[E]):
    tail: Stream[E]


Node = Union[_Empty, Yield, Later]


class Stream(Generic[E]):
    """A suspended stream constructor, evaluated at most once."""

    __slots__ = ("_thunk", "_node")

    def __init__(self, thunk: Callable[[], Node]):
        self._thunk = thunk
        self._node: Node | None = None

    @classmethod
    def now(cls, node: Node) -> Stream[E]:
        s = cls.__new__(cls)
        s._thunk = None
        s._node = node
        return s

    def force(self) -> Node:
        if self._node is None:
            thunk, self._thunk = self._thunk, None
            if thunk is None:
                raise RuntimeError("stream forced itself while being evaluated")
            self._node = thunk()
        return self._node

    def __repr__(self) -> str:
        return f"Stream({self._node!r})" if self._node is not None else "Stream(<unforced>)"


def empty() -> Stream[Any]:
    return Stream.now(EMPTY)


def from_list(xs: Iterable[E], later_every: int = 1) -> Stream[E]:
    """A finite stream of ``xs`` with one ``Later`` after every ``later_every`` elements."""
    if later_every < 1:
        raise ValueError(f"later_every must be >= 1, got {later_every}")
    items = list(xs)

    def go(i: int) -> Stream[E]:
        def step() -> Node:
            if i == len(items):
                return EMPTY
            rest = go(i + 1)
            if (i + 1) % later_every == 0:
                inner = rest
                rest = Stream(lambda: Later(inner))
            return Yield(items[i], rest)

        return Stream(step)

    return go(0)


def from_iterator(it: Iterator[E], later_every: int = 1) -> Stream[E]:
    """Like ``from_list`` but pulls lazily, so ``it`` may be infinite."""
    if later_every < 1:
        raise ValueError(f"later_every must be >= 1, got {later_every}")
    sentinel = object()

    def go(i: int) -> Stream[E]:
        def step() -> Node:
            x = next(it, sentinel)
            if x is sentinel:
                return EMPTY
            rest = go(i + 1)
            if (i + 1) % later_every == 0:
                inner = rest
                rest = Stream(lambda: Later(inner))
            return Yield(x, rest)

        return Stream(step)

    return go(0)


def never_yield() -> Stream[Any]:
    """The stream ``Later(Later(Later(...)))``."""
    s: Stream[Any] = Stream(lambda: Later(s))
    return s


def naturals(later_every: int = 1) -> Stream[int]:
    return from_iterator(itertools.count(), later_every)


def _primes() -> Iterator[int]:
    found: list[int] = []
    for n in itertools.count(2):
        if all(n % p for p in found if p * p <= n):
            found.append(n)
            yield n


def primes_like() -> Stream[int]:
    """2, 3, 5, 7, ... with a ``Later`` after each element."""
    return from_iterator(_primes(), 1)


def append_stream(s: Stream[E], t: Stream[E]) -> Stream[E]:
    """Concatenation. Never looks at ``t`` while ``s`` is unfinished."""

    def step() -> Node:
        node = s.force()
        if node is EMPTY:
            return t.force()
        if type(node) is Yield:
            return Yield(node.head, append_stream(node.tail, t))
        return Later(append_stream(node.tail, t))

    return Stream(step)


def interleave_stream(s: Stream[E], t: Stream[E]) -> Stream[E]:
    """Alternate focus after every element; ``Later`` keeps the focus."""

    def step() -> Node:
        node = s.force()
        if node is EMPTY:
            return t.force()
        if type(node) is Yield:
            return Yield(node.head, interleave_stream(t, node.tail))
        return Later(interleave_stream(node.tail, t))

    return Stream(step)


def union_stream(s: Stream[E], t: Stream[E]) -> Stream[E]:
    """Fair union: keep focus on ``Yield``, swap focus on ``Later``."""

    def step() -> Node:
        node = s.force()
        if node is EMPTY:
            return t.force()
        if type(node) is Yield:
            return Yield(node.head, union_stream(node.tail, t))
        return Later(union_stream(t, node.tail))

    return Stream(step)


def filter_stream(pred: Callable[[E], bool], s: Stream[E]) -> Stream[E]:
    """Keep elements satisfying ``pred``. Every ``Later`` of ``s`` is preserved,
    so a Later-productive input gives a Later-productive output."""

    def step() -> Node:
        src = s
        while True:
            node = src.force()
            if node is EMPTY:
                return EMPTY
            if type(node) is Later:
                return Later(filter_stream(pred, node.tail))
            if pred(node.head):
                return Yield(node.head, filter_stream(pred, node.tail))
            src = node.tail

    return Stream(step)


@dataclass
class Meter:
    forced: int = 0


def metered(s: Stream[E], meter: Meter) -> Stream[E]:
    """Mirror ``s``, counting every constructor forced through the copy."""

    def step() -> Node:
        node = s.force()
        meter.forced += 1
        if node is EMPTY:
            return EMPTY
        if type(node) is Yield:
            return Yield(node.head, metered(node.tail, meter))
        return Later(metered(node.tail, meter))

    return Stream(step)


class Status(enum.Enum):
    COMPLETED = "completed"
    GOT_COUNT = "got_count"
    OUT_OF_FUEL = "out_of_fuel"


@dataclass
class ObserveResult(Generic[E]):
    elements: list[E] = field(default_factory=list)
    status: Status = Status.COMPLETED
    fuel_used: int = 0

    def __iter__(self):
        # allows ``elements, status = observe(...)``
        return iter((self.elements, self.status))


def observe(s: Stream[E], count: int, fuel: int) -> ObserveResult[E]:
    """Force at most ``fuel`` constructors of ``s`` collecting up to ``count`` elements."""
    out = ObserveResult()
    while True:
        if len(out.elements) >= count:
            out.status = Status.GOT_COUNT
            return out
        if out.fuel_used >= fuel:
            out.status = Status.OUT_OF_FUEL
            return out
        node = s.force()
        out.fuel_used += 1
        if node is EMPTY:
            out.status = Status.COMPLETED
            return out
        if type(node) is Yield:
            out.elements.append(node.head)
        s = node.tail


def constructors(s: Stream[E], fuel: int) -> list[Node]:
    """The first ``fuel`` constructors of ``s`` (fewer if it ends)."""
    out: list[Node] = []
    while len(out) < fuel:
        node = s.force()
        out.append(node)
        if node is EMPTY:
            break
        s = node.tail
    return out
