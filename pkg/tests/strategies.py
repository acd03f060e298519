import random

from hypothesis import strategies as st

from cliquerho.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


def brute_graph(n, p, rng: random.Random):
    """Random graph built edge by edge, without the library's generator."""
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])
