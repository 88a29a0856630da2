"""Fair seekable iterators.

A ``Seek`` exposes a ``posn`` (either ``Found(key, value)`` or a ``Bound`` on
all remaining keys) and ``seek(bound)``, which moves to the first pair whose
key satisfies ``bound``. Seeking keeps the current pair if it already
satisfies the bound, so it is idempotent.

Because a position may be a bound rather than a pair, an intersection can
report progress without having found a match. Each ``seek`` on an
intersection seeks each side exactly once, so the work per step stays
bounded however the intersections are nested.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Callable, Iterator, Sequence

from fairjoin.bound import (
    DONE,
    Atleast,
    Bound,
    Found,
    Greater,
    Ordering,
    Position,
    compare_bounds,
    key_predicate,
    max_bound,
)
from fairjoin.naive import check_strictly_ascending


class StuckIteratorError(RuntimeError):
    """Raised when seeking to an iterator's own bound makes no progress."""


class Seek(ABC):
    __slots__ = ("posn",)

    posn: Position

    @abstractmethod
    def seek(self, bound: Bound) -> Seek: ...

    @staticmethod
    def of(posn: Position, seek_fn: Callable[[Bound], Seek]) -> Seek:
        return FnSeek(posn, seek_fn)

    def __iter__(self) -> Iterator[tuple[Any, Any]]:
        return iter_sorted(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.posn!r})"


class FnSeek(Seek):
    __slots__ = ("_seek_fn",)

    def __init__(self, posn: Position, seek_fn: Callable[[Bound], Seek]):
        self.posn = posn
        self._seek_fn = seek_fn

    def seek(self, bound: Bound) -> Seek:
        return self._seek_fn(bound)


class Exhausted(Seek):
    __slots__ = ()

    def __init__(self):
        self.posn = DONE

    def seek(self, bound: Bound) -> Seek:
        return self


def bound_of(s: Seek) -> Bound:
    p = s.posn
    return Atleast(p.key) if type(p) is Found else p


class SortedListSeek(Seek):
    """Seek over a sorted list, dropping unsatisfying pairs one at a time."""

    __slots__ = ("_pairs", "_i")

    def __init__(self, pairs: Sequence[tuple[Any, Any]], i: int = 0):
        self._pairs = pairs
        self._i = i
        self.posn = Found(*pairs[i]) if i < len(pairs) else DONE

    def seek(self, bound: Bound) -> Seek:
        ok = key_predicate(bound)
        pairs, j = self._pairs, self._i
        while j < len(pairs) and not ok(pairs[j][0]):
            j += 1
        return self if j == self._i else SortedListSeek(pairs, j)


def from_sorted_seek(pairs: Sequence[tuple[Any, Any]]) -> Seek:
    pairs = [tuple(p) for p in pairs]
    check_strictly_ascending([k for k, _ in pairs])
    return SortedListSeek(pairs)


class Intersection(Seek):
    __slots__ = ("left", "right")

    def __init__(self, left: Seek, right: Seek):
        self.left = left
        self.right = right
        p, q = left.posn, right.posn
        if type(p) is Found and type(q) is Found and p.key == q.key:
            self.posn = Found(p.key, (p.value, q.value))
        else:
            self.posn = max_bound(bound_of(left), bound_of(right))

    def seek(self, bound: Bound) -> Seek:
        return Intersection(self.left.seek(bound), self.right.seek(bound))


def intersect_seek(s: Seek, t: Seek) -> Seek:
    return Intersection(s, t)


class Union(Seek):
    """Keywise merge; a key present on both sides gets ``combine(sv, tv)``."""

    __slots__ = ("left", "right", "combine")

    def __init__(self, left: Seek, right: Seek, combine: Callable[[Any, Any], Any]):
        self.left = left
        self.right = right
        self.combine = combine
        order = compare_bounds(bound_of(left), bound_of(right))
        p, q = left.posn, right.posn
        if order is Ordering.LT:
            self.posn = p
        elif order is Ordering.GT:
            self.posn = q
        elif type(p) is Found and type(q) is Found:
            self.posn = Found(p.key, combine(p.value, q.value))
        else:
            # tied, but one side has only a bound: it may still produce this key
            self.posn = bound_of(left)

    def seek(self, bound: Bound) -> Seek:
        return Union(self.left.seek(bound), self.right.seek(bound), self.combine)


def union_seek(s: Seek, t: Seek, combine: Callable[[Any, Any], Any]) -> Seek:
    return Union(s, t, combine)


class Mapped(Seek):
    """Apply ``fn`` to each found value, lazily."""

    __slots__ = ("inner", "fn", "_posn")

    def __init__(self, inner: Seek, fn: Callable[[Any], Any]):
        self.inner = inner
        self.fn = fn
        self._posn = None

    @property
    def posn(self) -> Position:
        if self._posn is None:
            p = self.inner.posn
            self._posn = Found(p.key, self.fn(p.value)) if type(p) is Found else p
        return self._posn

    def seek(self, bound: Bound) -> Seek:
        moved = self.inner.seek(bound)
        return self if moved is self.inner else Mapped(moved, self.fn)


def map_values(s: Seek, fn: Callable[[Any], Any]) -> Seek:
    return Mapped(s, fn)


def iter_sorted(s: Seek) -> Iterator[tuple[Any, Any]]:
    """Enumerate ``s`` in key order.

    Raises StuckIteratorError if seeking to the current bound leaves the
    position unchanged twice in a row.
    """
    stalled = 0
    while True:
        p = s.posn
        if type(p) is Found:
            yield p.key, p.value
            s = s.seek(Greater(p.key))
            stalled = 0
        elif p is DONE:
            return
        else:
            s = s.seek(p)
            if s.posn == p:
                stalled += 1
                if stalled >= 2:
                    raise StuckIteratorError(f"no progress seeking to {p!r}")
            else:
                stalled = 0


def to_sorted_seek(s: Seek) -> list[tuple[Any, Any]]:
    return list(iter_sorted(s))

