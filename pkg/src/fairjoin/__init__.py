"""Fairness via bounded work, for unions of streams and intersections of
seekable iterators."""

from fairjoin.bound import DONE, Atleast, Found, Greater, Ordering, compare_bounds, max_bound, satisfies
from fairjoin.seek import Seek, bound_of, intersect_seek, to_sorted_seek, union_seek

__all__ = [
    "DONE",
    "Atleast",
    "Found",
    "Greater",
    "Ordering",
    "Seek",
    "bound_of",
    "compare_bounds",
    "intersect_seek",
    "max_bound",
    "satisfies",
    "to_sorted_seek",
    "union_seek",
]
