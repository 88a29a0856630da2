"""The evens/odds/ends experiment and file intersection, for both iterator kinds."""

from __future__ import annotations

import csv
import io
import re
import time
from dataclasses import astuple, dataclass, fields
from functools import reduce
from typing import Iterator, Sequence

from fairjoin.array import ProbeCounters, Repeated, SortedArray, from_sorted_array_iter, from_sorted_array_seek
from fairjoin.naive import intersect_iter, to_sorted_iter
from fairjoin.seek import intersect_seek, iter_sorted

MODES = ("naive", "fair")
ASSOCS = ("left", "right")
INT64_MIN, INT64_MAX = -(2**63), 2**63 - 1


class DataError(ValueError):
    """Malformed input data."""


@dataclass
class BenchConfig:
    n: int = 30_000_000
    modes: tuple[str, ...] = MODES
    assoc: tuple[str, ...] = ASSOCS
    repeat: int = 3
    format: str = "human"
    pairs: bool = True

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.repeat < 1:
            raise ValueError(f"repeat must be >= 1, got {self.repeat}")
        for m in self.modes:
            if m not in MODES:
                raise ValueError(f"unknown mode {m!r}")
        for a in self.assoc:
            if a not in ASSOCS:
                raise ValueError(f"unknown assoc {a!r}")
        if self.format not in ("human", "csv"):
            raise ValueError(f"unknown format {self.format!r}")


@dataclass
class BenchRow:
    label: str
    mode: str
    assoc: str
    result_count: int
    probes: int
    seeks: int
    wall_seconds: float


def generate_workload(n: int) -> tuple[SortedArray, SortedArray, SortedArray]:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    evens = range(0, n + 1, 2)
    odds = range(1, n + 1, 2)
    return (
        SortedArray(evens, Repeated("even", len(evens))),
        SortedArray(odds, Repeated("odd", len(odds))),
        SortedArray([0, n], ["end", "end"]),
    )


def fold_intersection(arrays: Sequence[SortedArray], mode: str, assoc: str, counters: ProbeCounters):
    """Intersect ``arrays`` pairwise and return an iterator over ``(key, nested_values)``."""
    if mode == "naive":
        leaves = [from_sorted_array_iter(a, counters) for a in arrays]
        combine = intersect_iter
    else:
        leaves = [from_sorted_array_seek(a, counters) for a in arrays]
        combine = intersect_seek
    if assoc == "left":
        root = reduce(combine, leaves)
    else:
        root = reduce(lambda acc, x: combine(x, acc), reversed(leaves))
    return iter(to_sorted_iter(root)) if mode == "naive" else iter_sorted(root)


def flatten_values(nested, n: int, assoc: str) -> list:
    out = []
    if assoc == "left":
        for _ in range(n - 1):
            nested, last = nested
            out.append(last)
        out.append(nested)
        out.reverse()
    else:
        for _ in range(n - 1):
            first, nested = nested
            out.append(first)
        out.append(nested)
    return out


def run_case(label: str, arrays: Sequence[SortedArray], mode: str, assoc: str) -> BenchRow:
    counters = ProbeCounters()
    start = time.perf_counter()
    count = sum(1 for _ in fold_intersection(arrays, mode, assoc, counters))
    elapsed = time.perf_counter() - start
    return BenchRow(label, mode, assoc, count, counters.probes, counters.seeks, elapsed)


def bench_cases(cfg: BenchConfig, workload=None):
    evens, odds, ends = workload if workload is not None else generate_workload(cfg.n)
    cases = []
    if cfg.pairs:
        cases.append(("odds & ends", [odds, ends], "left"))
        cases.append(("evens & odds", [evens, odds], "left"))
    if "left" in cfg.assoc:
        cases.append(("(evens & odds) & ends", [evens, odds, ends], "left"))
    if "right" in cfg.assoc:
        cases.append(("evens & (odds & ends)", [evens, odds, ends], "right"))
    return cases


def run_bench(cfg: BenchConfig, workload=None) -> Iterator[BenchRow]:
    """Yield one row per (mode, case, repetition)."""
    cases = bench_cases(cfg, workload)
    for mode in cfg.modes:
        for label, arrays, assoc in cases:
            for _ in range(cfg.repeat):
                yield run_case(label, arrays, mode, assoc)


CSV_COLUMNS = [f.name for f in fields(BenchRow)]


def format_row(row: BenchRow, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="").writerow(astuple(row))
        return buf.getvalue()
    return (
        f"{row.label} [{row.mode}]: {row.result_count} results, "
        f"{row.probes} probes, {row.seeks} seeks, {row.wall_seconds * 1000:.3f} ms"
    )


_KEY = re.compile(r"-?[0-9]+")


def read_pairs_file(path: str) -> SortedArray:
    keys: list[int] = []
    values: list[str] = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.rstrip("\n")
            parts = line.split(",")
            if len(parts) != 2:
                raise DataError(f"{path}:{lineno}: expected 'key,value', got {line!r}")
            key_text, value = parts
            if not _KEY.fullmatch(key_text):
                raise DataError(f"{path}:{lineno}: key {key_text!r} is not a decimal integer")
            key = int(key_text)
            if not INT64_MIN <= key <= INT64_MAX:
                raise DataError(f"{path}:{lineno}: key {key} does not fit in 64 bits")
            if keys and key <= keys[-1]:
                raise DataError(f"{path}:{lineno}: key {key} is not greater than previous key {keys[-1]}")
            keys.append(key)
            values.append(value)
    return SortedArray(keys, values)


def intersect_files(paths: Sequence[str], mode: str = "fair", assoc: str = "left") -> Iterator[str]:
    """Yield ``key,v1,v2,...`` for each key present in every file, ascending."""
    if len(paths) < 2:
        raise ValueError("need at least two files")
    arrays = [read_pairs_file(p) for p in paths]
    for key, nested in fold_intersection(arrays, mode, assoc, ProbeCounters()):
        yield ",".join([str(key), *flatten_values(nested, len(arrays), assoc)])
