"""The unfair seekable iterator and its leapfrog intersection.

An ``Iter`` is either ``None`` (exhausted) or a node holding the current
pair and a ``seek`` function: ``node.seek(target)`` continues with the pairs
after the current one whose keys are ``>= target``.

Leapfrogging two iterators works, but nesting it does not compose: in
``intersect_iter(intersect_iter(a, b), c)`` the outer call waits for the
inner one to find a match before ``c`` can contribute its lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence


@dataclass(frozen=True, slots=True)
class Iter:
    key: Any
    value: Any
    seek: Callable[[Any], Optional["Iter"]]


def check_strictly_ascending(keys: Sequence[Any]) -> None:
    if isinstance(keys, range):
        if keys.step <= 0 and len(keys) > 1:
            raise ValueError("keys must be strictly ascending")
        return
    for i in range(1, len(keys)):
        if not keys[i - 1] < keys[i]:
            raise ValueError(
                f"keys must be strictly ascending: {keys[i - 1]!r} then {keys[i]!r} at index {i}"
            )


def from_sorted_iter(pairs: Sequence[tuple[Any, Any]]) -> Optional[Iter]:
    """Iterate a sorted list of pairs. Seeking scans forward linearly."""
    pairs = list(pairs)
    check_strictly_ascending([k for k, _ in pairs])

    def go(i: int) -> Optional[Iter]:
        if i >= len(pairs):
            return None
        k, v = pairs[i]

        def seek(target: Any) -> Optional[Iter]:
            j = i + 1
            while j < len(pairs) and pairs[j][0] < target:
                j += 1
            return go(j)

        return Iter(k, v, seek)

    return go(0)


def to_sorted_iter(it: Optional[Iter]) -> list[tuple[Any, Any]]:
    out = []
    while it is not None:
        out.append((it.key, it.value))
        it = it.seek(it.key)
    return out


def intersect_iter(s: Optional[Iter], t: Optional[Iter]) -> Optional[Iter]:
    """Leapfrog the smaller key toward the larger until they meet."""
    while s is not None and t is not None:
        if s.key < t.key:
            s = s.seek(t.key)
        elif t.key < s.key:
            t = t.seek(s.key)
        else:
            return _matched(s, t)
    return None


def _matched(s: Iter, t: Iter) -> Iter:
    return Iter(s.key, (s.value, t.value), lambda k: intersect_iter(s.seek(k), t.seek(k)))
