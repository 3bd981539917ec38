import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from hypercut import build, example_hypergraph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def example():
    return example_hypergraph()


@pytest.fixture
def triangle():
    return build(3, [[0, 1], [1, 2], [0, 2]])


@pytest.fixture
def single_edge():
    return build(2, [[0, 1]])


@pytest.fixture
def cycle4():
    return build(4, [[0, 1], [1, 2], [2, 3], [0, 3]])


@st.composite
def uniform_hypergraphs(draw, max_n=8, ks=(2, 3, 4), max_m=8):
    """Classical k-uniform hypergraphs; isolated vertices possible."""
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(min_value=max(k, 2), max_value=max_n))
    m = draw(st.integers(min_value=1, max_value=max_m))
    edges = []
    for _ in range(m):
        perm = draw(st.permutations(range(n)))
        edges.append(sorted(perm[:k]))
    return build(n, edges)


@st.composite
def signed_hypergraphs(draw, max_n=7, max_m=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    m = draw(st.integers(min_value=1, max_value=max_m))
    edges = []
    for _ in range(m):
        size = draw(st.integers(min_value=1, max_value=n))
        verts = draw(st.permutations(range(n)))[:size]
        signs = draw(st.lists(st.sampled_from([1, -1]), min_size=size, max_size=size))
        edges.append(list(zip(verts, signs)))
    return build(n, edges)


def seeded(seed):
    return np.random.default_rng(seed)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                lines.append((rep.nodeid.split("::")[-1], outcome.upper()))
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
