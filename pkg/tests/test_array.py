import math

import pytest
from conftest import sorted_pairs
from hypothesis import given
from hypothesis import strategies as st
from oracles import linear_first

from fairjoin.array import (
    ProbeCounters,
    Repeated,
    SortedArray,
    from_sorted_array_iter,
    from_sorted_array_seek,
    gallop,
    with_counters,
)
from fairjoin.bound import DONE, Atleast, Found, Greater
from fairjoin.naive import to_sorted_iter
from fairjoin.seek import to_sorted_seek


def counting(pred):
    calls = []

    def p(i):
        calls.append(i)
        return pred(i)

    return p, calls


def test_gallop_examples():
    assert gallop(lambda i: True, 3, 3) == 3
    keys = [0, 2, 4, 6, 8]
    assert gallop(lambda i: keys[i] >= 5, 0, 5) == 3
    assert gallop(lambda i: False, 0, 10) == 10


def test_gallop_small_exhaustive():
    for hi in range(40):
        for lo in range(hi + 1):
            for step in range(lo, hi + 1):
                p, calls = counting(lambda i: i >= step)
                i = gallop(p, lo, hi)
                assert i == linear_first(lambda i: i >= step, lo, hi)
                assert len(calls) <= 2 * math.log2(i - lo + 1) + 4
                assert all(lo <= c < hi for c in calls)


@given(st.integers(0, 5000), st.integers(0, 5000), st.integers(0, 5000))
def test_gallop_random(lo, hi, step):
    lo, hi = min(lo, hi), max(lo, hi)
    p, calls = counting(lambda i: i >= step)
    i = gallop(p, lo, hi)
    assert i == linear_first(lambda i: i >= step, lo, hi)
    assert len(calls) <= 2 * math.log2(i - lo + 1) + 4


def test_sorted_array_validation():
    with pytest.raises(ValueError):
        SortedArray([1, 1], ["a", "b"])
    with pytest.raises(ValueError):
        SortedArray([1, 2], ["a"])
    SortedArray(range(0, 10, 2), Repeated("even", 5))


def test_repeated():
    r = Repeated("x", 3)
    assert list(r) == ["x"] * 3
    assert r[1:] == ["x", "x"]
    with pytest.raises(IndexError):
        r[3]


def test_empty_backends():
    empty = SortedArray([], [])
    assert from_sorted_array_iter(empty) is None
    assert from_sorted_array_seek(empty).posn is DONE


def test_seek_to_current_key_is_noop():
    c = ProbeCounters()
    s = from_sorted_array_seek(SortedArray([3, 5], ["a", "b"]), c)
    probes = c.probes
    t = s.seek(Atleast(3))
    assert t.posn == Found(3, "a")
    assert c.probes == probes + 1
    assert s.seek(Greater(3)).posn == Found(5, "b")


def test_counters():
    c = ProbeCounters()
    to_sorted_seek(with_counters(from_sorted_array_seek, c)(SortedArray([1, 2, 3], "abc")))
    assert c.probes >= 3 and c.seeks == 3
    c.reset()
    assert c.snapshot() == (0, 0)
    to_sorted_iter(with_counters(from_sorted_array_iter, c)(SortedArray([1, 2, 3], "abc")))
    assert c.probes >= 3


@pytest.mark.parametrize("i", [1, 2, 3, 7, 8, 100, 1000, 4095])
def test_iter_seek_probe_bound(i):
    c = ProbeCounters()
    it = from_sorted_array_iter(SortedArray(range(4096), range(4096)), c)
    c.reset()
    it = it.seek(i)
    assert it.key == i
    # one probe reads the new position
    assert c.probes - 1 <= 2 * math.log2(i + 1) + 4


@given(sorted_pairs(max_size=100, domain=300))
def test_round_trips(pairs):
    arr = SortedArray.from_pairs(pairs)
    assert to_sorted_seek(from_sorted_array_seek(arr)) == pairs
    assert to_sorted_iter(from_sorted_array_iter(arr)) == pairs
