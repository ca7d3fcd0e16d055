import random

import pytest
from hypothesis import strategies as st

from schedsim import Workload

TABLE1_BURSTS = (16, 13, 15, 10, 12, 22, 8, 24, 26, 25)
TABLE2_BURSTS = (15, 20, 7, 30, 4)


@pytest.fixture
def table1():
    return Workload.from_bursts(TABLE1_BURSTS)


@pytest.fixture
def table2():
    return Workload.from_bursts(TABLE2_BURSTS)


def workloads(min_size=1, max_size=10, max_burst=40):
    return st.lists(st.integers(1, max_burst), min_size=min_size, max_size=max_size).map(
        Workload.from_bursts
    )


def seeded_workloads(n, seed, min_size=1, max_size=10, max_burst=40):
    """``n`` reproducible random workloads for the fixed-count acceptance sweeps."""
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        size = rng.randint(min_size, max_size)
        out.append(Workload.from_bursts(rng.randint(1, max_burst) for _ in range(size)))
    return out
