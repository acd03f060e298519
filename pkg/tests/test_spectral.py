import random
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquerho.cliques import enumerate_t_cliques
from cliquerho.errors import ConvergenceError, DomainError
from cliquerho.graph import (Graph, complete_graph, construct_snla, cycle_graph, parse_graph6,
                             path_graph,
                             union_disjoint)
from cliquerho.spectral import (EIGEN_TOL, clique_components, rho_complete, rho_snab,
                                rho_snab_reduced, rho_t, tensor_apply, tensor_form)
from cliquerho.transforms import kelmans_shift
from strategies import brute_graph, graphs

BOWTIE = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def matrix_power_rho(g, iters=20000):
    """Power method on A + I with a Rayleigh quotient, independent of the tensor code."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    if g.n == 0 or not a.any():
        return 0.0
    m = a + np.eye(g.n)
    x = np.ones(g.n) / np.sqrt(g.n)
    prev = -1.0
    for _ in range(iters):
        y = m @ x
        x = y / np.linalg.norm(y)
        q = float(x @ a @ x)
        if abs(q - prev) < 1e-15:
            break
        prev = q
    return q


def brute_apply(g, t, x):
    # Dense sum over ordered index tuples with weight 1/(t-1)!.
    from itertools import permutations
    from math import factorial
    cl = enumerate_t_cliques(g, t).cliques
    out = np.zeros(g.n)
    for k in cl:
        for perm in permutations(k):
            out[perm[0]] += np.prod([x[j] for j in perm[1:]]) / factorial(t - 1)
    return out


def test_tensor_apply_examples():
    k3 = complete_graph(3)
    assert tensor_apply(enumerate_t_cliques(k3, 3), [1, 1, 1]).tolist() == [1, 1, 1]
    assert tensor_apply(enumerate_t_cliques(k3, 2), [1, 1, 1]).tolist() == [2, 2, 2]
    assert tensor_apply(enumerate_t_cliques(cycle_graph(5), 3), [0.3] * 5).tolist() == [0] * 5


def test_tensor_apply_rejects_bad_vectors():
    cs = enumerate_t_cliques(complete_graph(3), 3)
    with pytest.raises(DomainError):
        tensor_apply(cs, [1, 1])
    with pytest.raises(DomainError):
        tensor_apply(cs, [1, np.nan, 1])


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.integers(2, 4), st.integers(0, 2**32 - 1))
def test_tensor_apply_matches_dense_sum(g, t, seed):
    x = np.random.default_rng(seed).random(g.n)
    cs = enumerate_t_cliques(g, t)
    assert np.allclose(tensor_apply(cs, x), brute_apply(g, t, x), atol=1e-12)
    assert tensor_form(cs, x) == pytest.approx(float(x @ tensor_apply(cs, x)), abs=1e-12)


def test_components():
    assert clique_components(union_disjoint(complete_graph(3), complete_graph(3)), 3) == \
        [[0, 1, 2], [3, 4, 5]]
    assert clique_components(complete_graph(4), 3) == [[0, 1, 2, 3]]
    assert clique_components(BOWTIE, 3) == [[0, 1, 2, 3, 4]]


def test_rho_examples():
    assert rho_t(complete_graph(4), 3).rho == pytest.approx(3.0, abs=1e-9)
    assert rho_t(cycle_graph(5), 3).rho == 0.0
    res = rho_t(union_disjoint(complete_graph(4), complete_graph(5)), 3)
    assert res.rho == pytest.approx(6.0, abs=1e-9)
    assert res.component == [4, 5, 6, 7, 8]
    assert res.vector[:4] == [0.0] * 4


def test_rho_complete():
    assert rho_complete(4, 3) == 3
    for n in range(2, 10):
        assert rho_complete(n, 2) == n - 1
        assert rho_complete(n, n) == 1
    with pytest.raises(DomainError):
        rho_complete(3, 4)


def test_two_shared_vertex_k4():
    # two K_4 sharing one vertex: the Perron equations give rho_4^4 = 2
    g = parse_graph6("FJaNw")
    assert rho_t(g, 4).rho == pytest.approx(2 ** 0.25, abs=1e-9)


def test_t2_matches_matrix_power_method():
    rng = random.Random(5)
    for _ in range(200):
        g = brute_graph(rng.randint(1, 12), rng.random(), rng)
        assert rho_t(g, 2).rho == pytest.approx(matrix_power_rho(g), abs=1e-8)


def test_convergence_error_carries_bracket():
    with pytest.raises(ConvergenceError) as info:
        rho_t(path_graph(6), 2, max_iter=2)
    lo, hi = info.value.bracket
    assert lo <= 2 * np.cos(np.pi / 7) <= hi


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9), st.integers(2, 4))
def test_result_invariants(g, t):
    res = rho_t(g, t)
    if res.rho == 0:
        return
    x = np.array(res.vector)
    assert res.bracket_lo <= res.rho <= res.bracket_hi
    assert res.bracket_hi - res.bracket_lo <= max(EIGEN_TOL, 1e-14 * res.rho)
    assert np.sum(x ** t) == pytest.approx(1.0, abs=1e-12)
    assert np.all(x[res.component] > 0)
    assert res.residual <= 1e-8
    # variational form: x^T A x^{t-1} = rho for the Perron vector, <= rho for any unit vector
    cs = enumerate_t_cliques(g, t)
    assert tensor_form(cs, x) == pytest.approx(res.rho, abs=1e-8)
    y = np.random.default_rng(0).random(g.n)
    y /= np.sum(y ** t) ** (1 / t)
    assert tensor_form(cs, y) <= res.rho + 1e-9


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=9), st.integers(2, 4), st.data())
def test_shift_never_lowers_rho(g, t, data):
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1).filter(lambda w: w != u))
    assert rho_t(kelmans_shift(g, u, v), t).rho >= rho_t(g, t).rho - 1e-8


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=9), st.integers(2, 4))
def test_component_maximum(g, t):
    # rho of the whole graph is the max over its t-clique components
    whole = rho_t(g, t).rho
    parts = [rho_t(g.induced(c), t).rho for c in clique_components(g, t)]
    assert whole == pytest.approx(max(parts, default=0.0), abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=3, max_n=8), st.integers(2, 3), st.data())
def test_proper_subgraph_of_connected_is_strictly_smaller(g, t, data):
    comps = clique_components(g, t)
    if len(comps) != 1 or len(enumerate_t_cliques(g, t)) < 2:
        return
    sub = g.induced(comps[0])
    drop = data.draw(st.sampled_from(sub.edges()))
    assert rho_t(sub.with_edges(remove=[drop]), t).rho < rho_t(sub, t).rho - 1e-9


def test_orbit_examples():
    o = rho_snab_reduced(20, 2, 3, 3)
    full = rho_t(construct_snla(20, 2, 3), 3)
    assert o.rho == pytest.approx(full.rho, abs=1e-8)
    x = full.vector
    assert (o.x_a, o.x_b, o.x_c) == pytest.approx((x[0], x[2], x[5]), abs=1e-7)

    for a, b, t in [(2, 3, 3), (3, 1, 2), (4, 4, 5)]:
        o = rho_snab_reduced(a + b, a, b, t)
        assert o.rho == pytest.approx(comb(a + b - 1, t - 1), rel=1e-10)
        assert o.x_a == pytest.approx(o.x_b, rel=1e-8)


def test_orbit_scaling_self_consistent():
    r4 = rho_snab_reduced(10**4, 2, 1, 2).rho / 10**2
    r5 = rho_snab_reduced(10**5, 2, 1, 2).rho / 10**2.5
    assert abs(r4 / r5 - 1) < 0.05


def test_orbit_domain_errors():
    with pytest.raises(DomainError):
        rho_snab_reduced(10, 1, 2, 3)
    with pytest.raises(DomainError):
        rho_snab_reduced(3, 2, 2, 2)


@pytest.mark.parametrize("n,a,b,t", [(9, 2, 2, 2), (12, 3, 3, 3), (15, 4, 2, 4), (11, 2, 4, 3)])
def test_orbit_invariants(n, a, b, t):
    o = rho_snab_reduced(n, a, b, t)
    assert o.x_a > o.x_b > o.x_c > 0
    m = n - a - b
    assert a * o.x_a ** t + b * o.x_b ** t + m * o.x_c ** t == pytest.approx(1.0, abs=1e-12)
    assert o.residual <= EIGEN_TOL * max(1.0, o.rho)


def test_orbit_b1_entries_coincide():
    # with b = 1 the K_b vertex is just another independent vertex
    for n, a, t in [(10, 2, 2), (12, 3, 3), (16, 4, 5)]:
        o = rho_snab_reduced(n, a, 1, t)
        assert o.x_b == pytest.approx(o.x_c, rel=1e-12)


def test_rho_snab_below_orbit_range():
    # a < t-1: only K_{a+b} carries t-cliques
    assert rho_snab(30, 1, 4, 3) == rho_complete(5, 3)
    assert rho_snab(30, 1, 4, 3) == pytest.approx(rho_t(construct_snla(30, 1, 4), 3).rho, abs=1e-9)


def test_orbit_grid_against_full_solver():
    # b >= 2 orders the three orbits strictly; b = 1 makes x_b and x_c coincide
    for n in range(2, 17):
        for a in range(1, 5):
            for b in range(1, 5):
                if a + b > n:
                    continue
                g = construct_snla(n, a, b)
                for t in range(2, a + 2):
                    o = rho_snab_reduced(n, a, b, t)
                    assert o.rho == pytest.approx(rho_t(g, t).rho, abs=1e-8)
                    if n - a - b < 1:
                        continue
                    if b >= 2:
                        assert o.x_a > o.x_b > o.x_c
                    else:
                        assert o.x_a > o.x_b == o.x_c
