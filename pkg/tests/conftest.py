import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from flexcolor.graph import Graph

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        # a random spanning tree guarantees connectivity
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def list_assignments(draw, g, min_size=1, max_size=4, palette=6):
    return [
        frozenset(draw(st.lists(st.integers(0, palette - 1), min_size=min_size, max_size=max_size, unique=True)))
        for _ in range(g.n)
    ]


def random_graph(rng: np.random.Generator, n: int, p: float, connected: bool = False) -> Graph:
    edges = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    if connected:
        for v in range(1, n):
            u = int(rng.integers(v))
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
