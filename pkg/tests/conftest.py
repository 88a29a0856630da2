import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


def sorted_pairs(max_size=40, domain=60, tag="v"):
    return st.lists(st.integers(0, domain), max_size=max_size, unique=True).map(
        lambda ks: [(k, f"{tag}{k}") for k in sorted(ks)]
    )


def random_sorted_pairs(rng: random.Random, max_len: int, domain: int, tag: str):
    n = rng.randint(0, min(max_len, domain))
    return [(k, f"{tag}{k}") for k in sorted(rng.sample(range(domain), n))]


@pytest.fixture
def rng():
    return random.Random(20251015)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
