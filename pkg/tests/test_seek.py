import pytest
from conftest import sorted_pairs
from hypothesis import given
from hypothesis import strategies as st
from oracles import drop_until, intersect_pairs, merge_pairs

from fairjoin.array import ProbeCounters, SortedArray, from_sorted_array_seek
from fairjoin.bench import generate_workload
from fairjoin.bound import DONE, Atleast, Found, Greater, Ordering, compare_bounds, key_predicate
from fairjoin.naive import from_sorted_iter, intersect_iter, to_sorted_iter
from fairjoin.seek import (
    Exhausted,
    Seek,
    StuckIteratorError,
    bound_of,
    from_sorted_seek,
    intersect_seek,
    to_sorted_seek,
    union_seek,
)

bounds = st.one_of(st.builds(Atleast, st.integers(-2, 62)), st.builds(Greater, st.integers(-2, 62)), st.just(DONE))


def fixed(posn):
    s = Seek.of(posn, lambda b: s)
    return s


def test_exhausted():
    assert to_sorted_seek(Exhausted()) == []
    assert from_sorted_seek([]).posn is DONE


def test_round_trip():
    assert to_sorted_seek(from_sorted_seek([(1, "a"), (2, "b")])) == [(1, "a"), (2, "b")]


def test_seek_examples():
    s = from_sorted_seek([(2, "b")])
    assert s.seek(Atleast(2)).posn == Found(2, "b")
    assert s.seek(Greater(2)).posn is DONE


def test_rejects_unsorted():
    with pytest.raises(ValueError):
        from_sorted_seek([(3, "a"), (3, "b")])


def test_bound_of():
    assert bound_of(fixed(Found(7, "x"))) == Atleast(7)
    assert bound_of(fixed(DONE)) is DONE
    assert bound_of(fixed(Greater(3))) == Greater(3)


def test_intersect_examples():
    s = intersect_seek(from_sorted_seek([(1, "a")]), from_sorted_seek([(2, "c")]))
    assert s.posn == Atleast(2)
    assert intersect_seek(from_sorted_seek([(1, "a")]), Exhausted()).posn is DONE
    got = intersect_seek(from_sorted_seek([(1, "a"), (2, "b")]), from_sorted_seek([(2, "c"), (3, "d")]))
    assert to_sorted_seek(got) == [(2, ("b", "c"))]


def test_evens_odds_empty():
    evens, odds, _ = generate_workload(1000)
    assert to_sorted_seek(intersect_seek(from_sorted_array_seek(evens), from_sorted_array_seek(odds))) == []


def test_union_examples():
    def first(x, y):
        return x

    a, b = from_sorted_seek([(1, "a")]), from_sorted_seek([(2, "b")])
    assert to_sorted_seek(union_seek(a, b, first)) == [(1, "a"), (2, "b")]
    s = from_sorted_seek([(1, "a"), (5, "e")])
    assert to_sorted_seek(union_seek(s, Exhausted(), first)) == to_sorted_seek(s)
    both = union_seek(from_sorted_seek([(1, "a")]), from_sorted_seek([(1, "b")]), lambda x, y: x + y)
    assert to_sorted_seek(both) == [(1, "ab")]


def test_union_waits_on_tied_bound():
    # the bound side may still produce key 2, so the union cannot commit to it
    inner = intersect_seek(from_sorted_seek([(1, "x"), (2, "y")]), from_sorted_seek([(2, "z")]))
    assert inner.posn == Atleast(2)
    u = union_seek(from_sorted_seek([(2, "a")]), inner, lambda x, y: (x, y))
    assert u.posn == Atleast(2)
    assert to_sorted_seek(u) == [(2, ("a", ("y", "z")))]


def test_stuck_iterator_detected():
    with pytest.raises(StuckIteratorError):
        to_sorted_seek(fixed(Atleast(1)))


@given(sorted_pairs(tag="a"), sorted_pairs(tag="b"))
def test_intersect_matches_oracle(a, b):
    assert to_sorted_seek(intersect_seek(from_sorted_seek(a), from_sorted_seek(b))) == intersect_pairs(a, b)


@given(sorted_pairs(tag="a"), sorted_pairs(tag="b"))
def test_union_matches_oracle(a, b):
    def cat(x, y):
        return x + y

    assert to_sorted_seek(union_seek(from_sorted_seek(a), from_sorted_seek(b), cat)) == merge_pairs(a, b, cat)


@given(sorted_pairs(tag="a"), sorted_pairs(tag="b"))
def test_agrees_with_naive(a, b):
    fair = to_sorted_seek(intersect_seek(from_sorted_seek(a), from_sorted_seek(b)))
    naive = to_sorted_iter(intersect_iter(from_sorted_iter(a), from_sorted_iter(b)))
    assert fair == naive


@given(sorted_pairs(tag="a"), sorted_pairs(tag="b"), sorted_pairs(tag="c"))
def test_associativity(a, b, c):
    left = to_sorted_seek(intersect_seek(intersect_seek(from_sorted_seek(a), from_sorted_seek(b)), from_sorted_seek(c)))
    right = to_sorted_seek(intersect_seek(from_sorted_seek(a), intersect_seek(from_sorted_seek(b), from_sorted_seek(c))))
    common = sorted(set(dict(a)) & set(dict(b)) & set(dict(c)))
    assert [k for k, _ in left] == [k for k, _ in right] == common
    assert [(x, y, z) for _, ((x, y), z) in left] == [(x, y, z) for _, (x, (y, z)) in right]


def _laws(s, b):
    once = s.seek(b)
    assert once.seek(b).posn == once.posn
    p = once.posn
    if type(p) is Found:
        assert key_predicate(b)(p.key)
    else:
        assert compare_bounds(p, b) is not Ordering.LT
    return once


@given(sorted_pairs(), st.lists(bounds, max_size=8))
def test_list_seek_laws(pairs, bs):
    s, i = from_sorted_seek(pairs), 0
    for b in bs:
        s = _laws(s, b)
        i = drop_until(pairs, i, key_predicate(b))
        assert s.posn == (Found(*pairs[i]) if i < len(pairs) else DONE)


@given(sorted_pairs(tag="a"), sorted_pairs(tag="b"), st.lists(bounds, max_size=8))
def test_intersection_seek_laws(a, b, bs):
    s = intersect_seek(from_sorted_seek(a), from_sorted_seek(b))
    for bound in bs:
        s = _laws(s, bound)


def test_each_intersection_seek_seeks_every_leaf_once():
    arrays = [SortedArray.from_pairs([(k, k) for k in range(0, 200, step)]) for step in (1, 2, 3, 5)]
    counters = [ProbeCounters() for _ in arrays]
    leaves = [from_sorted_array_seek(a, c) for a, c in zip(arrays, counters)]
    root = intersect_seek(intersect_seek(leaves[0], leaves[1]), intersect_seek(leaves[2], leaves[3]))
    for b in (Atleast(7), Greater(30), Atleast(31), Atleast(150)):
        root = root.seek(b)
        assert [c.seeks for c in counters] == [counters[0].seeks] * 4
    assert counters[0].seeks == 4
