import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquerho.cliques import count_snla, count_t_cliques, enumerate_t_cliques
from cliquerho.errors import DomainError
from cliquerho.graph import complete_graph, construct_snla, cycle_graph
from strategies import brute_graph, graphs


def brute_cliques(g, t):
    return [k for k in combinations(range(g.n), t)
            if all(g.has_edge(u, v) for u, v in combinations(k, 2))]


def test_examples():
    assert len(enumerate_t_cliques(complete_graph(4), 3)) == 4
    assert len(enumerate_t_cliques(cycle_graph(5), 3)) == 0
    assert len(enumerate_t_cliques(construct_snla(6, 2, 2), 3)) == 6
    assert [tuple(k) for k in enumerate_t_cliques(complete_graph(4), 3).cliques] == \
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_single_vertex_cliques():
    cs = enumerate_t_cliques(cycle_graph(4), 1)
    assert len(cs) == 4
    assert count_t_cliques(cycle_graph(4), 1) == 4


def test_bad_t():
    with pytest.raises(DomainError):
        enumerate_t_cliques(complete_graph(3), 0)


@settings(max_examples=300)
@given(graphs(max_n=10), st.integers(1, 6))
def test_against_brute_force(g, t):
    cs = enumerate_t_cliques(g, t)
    assert [tuple(k) for k in cs.cliques] == brute_cliques(g, t)
    assert count_t_cliques(g, t) == len(cs)
    assert sum(len(inc) for inc in cs.incidence) == t * len(cs)


@given(graphs(min_n=2, max_n=10), st.integers(2, 5), st.data())
def test_adding_edge_never_decreases_count(g, t, data):
    missing = [(u, v) for v in range(g.n) for u in range(v) if not g.has_edge(u, v)]
    if not missing:
        return
    edge = data.draw(st.sampled_from(missing))
    assert count_t_cliques(g.with_edges(add=[edge]), t) >= count_t_cliques(g, t)


def test_edge_count_and_complete():
    rng = random.Random(3)
    for _ in range(50):
        g = brute_graph(rng.randint(0, 14), rng.random(), rng)
        assert count_t_cliques(g, 2) == g.num_edges
    for n in range(1, 12):
        for t in range(1, n + 1):
            assert count_t_cliques(complete_graph(n), t) == comb(n, t)


def test_snla_closed_form_exhaustive():
    for n in range(2, 11):
        for l in range(1, n):
            for a in range(1, n - l + 1):
                g = construct_snla(n, l, a)
                for t in range(1, n + 1):
                    assert count_snla(n, l, a, t) == len(brute_cliques(g, t))
                    assert count_t_cliques(g, t) == count_snla(n, l, a, t)


def test_pivot_count_larger_graphs():
    rng = random.Random(11)
    for _ in range(30):
        g = brute_graph(rng.randint(15, 22), rng.uniform(0.3, 0.8), rng)
        for t in (3, 4, 5):
            assert count_t_cliques(g, t) == len(enumerate_t_cliques(g, t))
