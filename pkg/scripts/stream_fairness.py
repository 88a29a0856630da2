"""Show why ``union`` is complete and ``append``/``interleave`` are not.

Each line observes at most 3 elements with a budget of 10,000 forced
constructors.
"""

from fairjoin.stream import (
    append_stream,
    filter_stream,
    from_list,
    interleave_stream,
    observe,
    primes_like,
    union_stream,
)


def even_primes():
    return filter_stream(lambda x: x % 2 == 0, primes_like())


def main():
    for name, combine in [("append", append_stream), ("interleave", interleave_stream), ("union", union_stream)]:
        got = observe(combine(even_primes(), from_list([3, 4], 99)), count=3, fuel=10_000)
        print(f"{name:<10} {got.elements!s:<10} {got.status.value} after {got.fuel_used} constructors")


if __name__ == "__main__":
    main()
