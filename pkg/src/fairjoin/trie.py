"""Relations as nested seekable iterators, intersected level by level.

A depth-``d`` trie is a ``Seek`` over the distinct first columns whose values
are depth ``d - 1`` tries; at depth 1 the values are ``()``. Intersecting
tries folds ``intersect_seek`` over the roots and recurses into the matched
sub-tries only when a key is found.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Any, Sequence

from fairjoin.array import ProbeCounters, gallop
from fairjoin.bound import DONE, Atleast, Bound, Found, Greater
from fairjoin.seek import Seek, intersect_seek, iter_sorted, map_values


@dataclass(frozen=True)
class Trie:
    root: Seek
    depth: int

    def __iter__(self):
        return iter(trie_to_tuples(self))


class TrieLevel(Seek):
    """One level of a trie over ``rows[start:stop]``, grouped on column ``col``.

    ``groups`` holds ``(key, start, stop)`` for each distinct key. Sub-tries
    are built when their key is first found.
    """

    __slots__ = ("rows", "col", "depth", "groups", "i", "counters", "_posn")

    def __init__(self, rows, col, depth, groups, i, counters):
        self.rows = rows
        self.col = col
        self.depth = depth
        self.groups = groups
        self.i = i
        self.counters = counters
        self._posn = None

    @property
    def posn(self):
        if self._posn is None:
            if self.i >= len(self.groups):
                self._posn = DONE
            else:
                key, start, stop = self.groups[self.i]
                if self.depth == 1:
                    value = ()
                else:
                    value = Trie(_level(self.rows, self.col + 1, self.depth - 1, start, stop, self.counters), self.depth - 1)
                self._posn = Found(key, value)
        return self._posn

    def seek(self, bound: Bound) -> Seek:
        c = self.counters
        if c is not None:
            c.seeks += 1
        groups = self.groups
        if type(bound) is Atleast:
            accept = lambda key: key >= bound.key  # noqa: E731
        elif type(bound) is Greater:
            accept = lambda key: key > bound.key  # noqa: E731
        else:
            accept = lambda key: False  # noqa: E731

        def pred(i: int) -> bool:
            if c is not None:
                c.probes += 1
            return accept(groups[i][0])

        i = gallop(pred, self.i, len(groups))
        if i == self.i:
            return self
        return TrieLevel(self.rows, self.col, self.depth, groups, i, c)


def _level(rows, col, depth, start, stop, counters) -> TrieLevel:
    groups = []
    j = start
    while j < stop:
        key = rows[j][col]
        k = j + 1
        while k < stop and rows[k][col] == key:
            k += 1
        groups.append((key, j, k))
        j = k
    return TrieLevel(rows, col, depth, groups, 0, counters)


def trie_from_sorted_tuples(
    rows: Sequence[Sequence[Any]], depth: int, counters: ProbeCounters | None = None
) -> Trie:
    """Build a trie from lexicographically sorted, duplicate-free rows of arity ``depth``.

    ``counters``, if given, records seeks and probes on every level.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    rows = [tuple(r) for r in rows]
    for n, r in enumerate(rows):
        if len(r) != depth:
            raise ValueError(f"row {n} has arity {len(r)}, expected {depth}")
        if n and not rows[n - 1] < r:
            raise ValueError(f"rows must be sorted and distinct: {rows[n - 1]!r} then {r!r} at row {n}")
    return Trie(_level(rows, 0, depth, 0, len(rows), counters), depth)


def _flatten(nested: Any, n: int) -> list[Any]:
    # left fold of n values gives ((v1, v2), v3), ...
    out = []
    for _ in range(n - 1):
        nested, last = nested
        out.append(last)
    out.append(nested)
    out.reverse()
    return out


def intersect_tries(tries: Sequence[Trie]) -> Trie:
    """Tuples present in every input, by a left fold of fair binary intersection."""
    if not tries:
        raise ValueError("need at least one trie")
    depth = tries[0].depth
    if any(t.depth != depth for t in tries):
        raise ValueError(f"tries have mismatched depths: {[t.depth for t in tries]}")
    if len(tries) == 1:
        return tries[0]
    n = len(tries)
    root = reduce(intersect_seek, [t.root for t in tries])
    if depth == 1:
        return Trie(map_values(root, lambda _: ()), 1)
    return Trie(map_values(root, lambda nested: intersect_tries(_flatten(nested, n))), depth)


def trie_to_tuples(t: Trie) -> list[tuple[Any, ...]]:
    out: list[tuple[Any, ...]] = []
    for key, sub in iter_sorted(t.root):
        if t.depth == 1:
            out.append((key,))
        else:
            out.extend((key, *rest) for rest in trie_to_tuples(sub))
    return out
