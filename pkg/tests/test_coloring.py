import itertools
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import chisquare

from conftest import graphs, list_assignments, random_graph
from flexcolor.coloring import (
    brute_force_colorable,
    count_colorings,
    degree_criterion_colorable,
    enumerate_colorings,
    greedy_extend,
    is_colorable,
    sample_uniform,
    validate_coloring,
)
from flexcolor.errors import InputError, UncolorableError
from flexcolor.graph import Graph
from flexcolor.instances import complete, cycle, path, star


def product_colorings(g, lists):
    return sorted(
        phi for phi in itertools.product(*[sorted(l) for l in lists]) if all(phi[u] != phi[v] for u, v in g.edges)
    )


# --- existence ----------------------------------------------------------------


def test_colorable_examples():
    assert is_colorable(complete(3), [{1, 2}] * 3) is None
    assert is_colorable(cycle(4), [{1, 2}] * 4) in ((1, 2, 1, 2), (2, 1, 2, 1))
    phi = is_colorable(complete(3), [{1, 2}, {1, 2}, {1, 3}])
    assert phi is not None and validate_coloring(complete(3), [{1, 2}, {1, 2}, {1, 3}], phi)


def test_empty_list_and_empty_graph():
    assert is_colorable(path(2), [set(), {1}]) is None
    assert is_colorable(Graph(0), []) == ()


def test_list_length_mismatch():
    with pytest.raises(InputError):
        is_colorable(path(3), [{1}, {2}])


@given(st.data())
def test_colorable_matches_product(data):
    g = data.draw(graphs(max_n=7))
    lists = data.draw(list_assignments(g, 1, 3, 4))
    phi = is_colorable(g, lists)
    assert (phi is not None) == brute_force_colorable(g, lists)
    if phi is not None:
        assert validate_coloring(g, lists, phi)


def test_large_palette_falls_back():
    # colours beyond the bitmask width still work through the pure path
    g = cycle(5)
    lists = [{100 + i, 200 + i, 300} for i in range(5)]
    phi = is_colorable(g, lists)
    assert validate_coloring(g, lists, phi)
    assert count_colorings(g, lists) == len(product_colorings(g, lists))


# --- enumeration ------------------------------------------------------------


def test_enumeration_examples():
    assert count_colorings(path(2), [{1, 2}] * 2) == 2
    assert count_colorings(Graph(1), [{1, 2, 3, 4}]) == 4
    assert count_colorings(complete(3), [{1, 2, 3}] * 3) == 6


@given(st.data())
def test_enumeration_matches_product(data):
    g = data.draw(graphs(max_n=6))
    lists = data.draw(list_assignments(g, 1, 3, 5))
    en = enumerate_colorings(g, lists)
    assert not en.overflow
    assert en.colorings == product_colorings(g, lists)
    assert count_colorings(g, lists) == en.count


def test_enumeration_cap():
    en = enumerate_colorings(Graph(3), [{0, 1, 2}] * 3, cap=5)
    assert en.overflow and en.count == 5
    assert en.colorings == sorted(itertools.product(range(3), repeat=3))[:5]
    full = enumerate_colorings(Graph(3), [{0, 1, 2}] * 3, cap=27)
    assert not full.overflow and full.count == 27


# --- uniform sampling -------------------------------------------------------


def chi_square_ok(draws, support):
    counts = Counter(draws)
    assert set(counts) <= set(support)
    obs = [counts[s] for s in support]
    return chisquare(obs).pvalue > 1e-3


def test_sampling_single_vertex():
    rng = np.random.default_rng(11)
    draws = [sample_uniform(Graph(1), [{1, 2}], rng) for _ in range(10_000)]
    assert chi_square_ok(draws, [(1,), (2,)])


def test_sampling_edge_and_triangle():
    rng = np.random.default_rng(12)
    draws = [sample_uniform(path(2), [{1, 2}] * 2, rng) for _ in range(4000)]
    assert chi_square_ok(draws, [(1, 2), (2, 1)])
    support = list(itertools.permutations((1, 2, 3)))
    draws = [sample_uniform(complete(3), [{1, 2, 3}] * 3, rng) for _ in range(6000)]
    assert chi_square_ok(draws, sorted(support))


def test_sampling_is_seeded():
    g, lists = cycle(6), [{0, 1, 2}] * 6
    assert [sample_uniform(g, lists, s) for s in range(20)] == [sample_uniform(g, lists, s) for s in range(20)]


def test_sampling_uncolorable():
    with pytest.raises(UncolorableError):
        sample_uniform(complete(3), [{1, 2}] * 3, 0)


# --- degree criterion -------------------------------------------------------


def test_degree_criterion_examples():
    res = degree_criterion_colorable(cycle(4), [{1, 2}, {2, 3}, {3, 4}, {4, 1}])
    assert res.applicable and validate_coloring(cycle(4), [{1, 2}, {2, 3}, {3, 4}, {4, 1}], res.coloring)
    assert not degree_criterion_colorable(complete(3), [{1, 2}] * 3).applicable
    res = degree_criterion_colorable(path(3), [{1}, {1, 2, 3}, {1}])
    assert res.applicable and res.coloring == (1, 2, 1)


def test_degree_criterion_precondition():
    with pytest.raises(InputError):
        degree_criterion_colorable(complete(3), [{1}, {1, 2}, {1, 2}])
    with pytest.raises(InputError):
        degree_criterion_colorable(Graph(2), [{1}, {1}])


def degree_lists(rng, g, palette):
    return [frozenset(int(c) for c in rng.choice(palette, size=max(g.degree(v), 1) + int(rng.random() < 0.1), replace=False)) for v in range(g.n)]


def test_degree_criterion_against_brute_force():
    rng = np.random.default_rng(21)
    seen = Counter()
    for _ in range(600):
        n = int(rng.integers(2, 8))
        g = random_graph(rng, n, float(rng.uniform(0.3, 0.8)), connected=True)
        lists = degree_lists(rng, g, 8)
        res = degree_criterion_colorable(g, lists)
        seen[res.applicable] += 1
        if res.applicable:
            assert validate_coloring(g, lists, res.coloring)
        else:
            # outside the criterion every block is complete or an odd cycle
            assert all(len(lists[v]) == g.degree(v) for v in range(g.n))
    assert seen[True] and seen[False]


def test_gallai_tree_with_equal_lists_is_uncolorable():
    # a bowtie with identical degree-sized lists: the criterion does not apply, and indeed no colouring exists
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    lists = [{1, 2}, {1, 2}, {1, 2, 3, 4}, {3, 4}, {3, 4}]
    assert not degree_criterion_colorable(bowtie, lists).applicable
    assert not brute_force_colorable(bowtie, lists)


# --- greedy -----------------------------------------------------------------


def test_greedy_examples():
    res = greedy_extend(path(2), [{1}, {1, 2}], {0: 1}, [1])
    assert res.ok and res.coloring[1] == 2
    res = greedy_extend(star(4), [{5}] + [{5, 6}] * 4, {0: 5}, [1, 2, 3, 4])
    assert res.ok and all(res.coloring[i] == 6 for i in range(1, 5))
    res = greedy_extend(complete(3), [{1}, {2}, {1, 2}], {0: 1, 1: 2}, [2])
    assert res.stuck == 2


def test_greedy_rejects_bad_precoloring():
    with pytest.raises(InputError):
        greedy_extend(path(2), [{1}, {1}], {0: 1, 1: 1}, [])
    with pytest.raises(InputError):
        greedy_extend(path(2), [{1}, {1}], {0: 3}, [1])


@settings(max_examples=80)
@given(st.data())
def test_greedy_output_is_proper(data):
    g = data.draw(graphs(max_n=8))
    lists = data.draw(list_assignments(g, 1, 4, 5))
    order = data.draw(st.permutations(range(g.n)))
    res = greedy_extend(g, lists, {}, order)
    if res.ok:
        assert validate_coloring(g, lists, tuple(res.coloring[v] for v in range(g.n)))
    else:
        v = res.stuck
        assert lists[v] <= {res.coloring[u] for u in g.adj[v] if u in res.coloring}
