"""Listing and counting fixed-size cliques."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import DomainError
from .graph import Graph, iter_bits, popcount


@dataclass(frozen=True)
class CliqueSet:
    """All t-cliques of a graph as increasing vertex tuples, sorted.

    ``incidence[v]`` holds the indices (into ``cliques``) of the cliques
    that contain ``v``.
    """

    n: int
    t: int
    cliques: tuple[tuple[int, ...], ...]
    incidence: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.cliques)

    def array(self) -> np.ndarray:
        """Cliques as an ``(N_t, t)`` integer array."""
        if not self.cliques:
            return np.zeros((0, self.t), dtype=np.intp)
        return np.asarray(self.cliques, dtype=np.intp)


def _check_t(t: int) -> None:
    if t < 1:
        raise DomainError(f"clique size t must be >= 1, got {t}")


def enumerate_t_cliques(g: Graph, t: int) -> CliqueSet:
    """List every t-clique in lexicographic order.

    Ordered extension: a partial clique only grows by vertices larger than
    its last vertex, and branches with ``|R| + |P| < t`` are cut.
    """
    _check_t(t)
    out: list[tuple[int, ...]] = []
    adj = g.adj

    def grow(r: list[int], cand: int) -> None:
        if len(r) == t:
            out.append(tuple(r))
            return
        need = t - len(r)
        while cand:
            if popcount(cand) < need:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            r.append(v)
            grow(r, cand & adj[v])
            r.pop()

    for v in range(g.n):
        higher = adj[v] >> (v + 1) << (v + 1)
        grow([v], higher)

    incidence: list[list[int]] = [[] for _ in range(g.n)]
    for idx, k in enumerate(out):
        for v in k:
            incidence[v].append(idx)
    return CliqueSet(g.n, t, tuple(out), tuple(tuple(x) for x in incidence))


def count_t_cliques(g: Graph, t: int) -> int:
    """Number of t-cliques, without listing them.

    Pivoting clique-tree count: every root-to-leaf path carries ``h`` held
    vertices (always in the clique) and ``p`` pivot vertices (each optional),
    and contributes ``C(p, t - h)`` cliques.  Pivots maximise
    ``|P & N(u)|`` and branches that cannot reach size t are dropped.
    """
    _check_t(t)
    adj = g.adj
    total = 0

    def walk(cand: int, held: int, piv: int) -> None:
        nonlocal total
        if held > t or held + piv + popcount(cand) < t:
            return
        if not cand:
            total += comb(piv, t - held)
            return
        pivot = max(iter_bits(cand), key=lambda u: popcount(cand & adj[u]))
        rest = cand & ~adj[pivot]
        walk(cand & adj[pivot], held, piv + 1)
        cand &= ~(1 << pivot)
        rest &= ~(1 << pivot)
        for v in iter_bits(rest):
            walk(cand & adj[v], held + 1, piv)
            cand &= ~(1 << v)

    walk((1 << g.n) - 1, 0, 0)
    return total


def count_snla(n: int, l: int, a: int, t: int) -> int:
    """Closed-form t-clique count of K_l joined with (K_a plus n-l-a isolated vertices).

    Cliques inside K_{l+a}, plus each isolated vertex together with a
    (t-1)-subset of the universal part.
    """
    _check_t(t)
    return comb(l + a, t) + (n - l - a) * comb(l, t - 1)
