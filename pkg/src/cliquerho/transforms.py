"""Kelmans-type neighbour shifts and the structure of shift-stable graphs."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DomainError, StabilizationError
from .graph import Graph, connected_components, iter_bits


def _private_mask(g: Graph, u: int, v: int) -> int:
    return g.adj[u] & ~(1 << v) & ~g.adj[v]


def shift_set(g: Graph, u: int, v: int) -> list[int]:
    """Neighbours of u, other than v, that are not neighbours of v."""
    if u == v:
        raise DomainError("shift needs two distinct vertices")
    return list(iter_bits(_private_mask(g, u, v)))


def kelmans_shift(g: Graph, u: int, v: int) -> Graph:
    """Move u's private neighbours (w.r.t. v) over to v.

    Works for any pair; only pairs joined by an edge are guaranteed not to
    lengthen cycles or paths.
    """
    if u == v:
        raise DomainError("shift needs two distinct vertices")
    moved = _private_mask(g, u, v)
    if not moved:
        return g
    rows = list(g.adj)
    rows[u] &= ~moved
    rows[v] |= moved
    bu, bv = 1 << u, 1 << v
    for i in iter_bits(moved):
        rows[i] = (rows[i] & ~bu) | bv
    return Graph(g.n, tuple(rows))


@dataclass
class ShiftTrace:
    initial: Graph
    final: Graph
    steps: list[tuple[int, int, list[int]]] = field(default_factory=list)

    def replay(self) -> Graph:
        g = self.initial
        for u, v, _ in self.steps:
            g = kelmans_shift(g, u, v)
        return g

    def to_jsonl(self) -> str:
        return "".join(json.dumps({"u": u, "v": v, "moved": moved}) + "\n"
                       for u, v, moved in self.steps)


def is_shift_stable(g: Graph) -> bool:
    """Every edge has nested neighbourhoods: one side has no private neighbour."""
    return all(not _private_mask(g, u, v) or not _private_mask(g, v, u) for u, v in g.edges())


def stabilize(g: Graph, budget: int | None = None) -> ShiftTrace:
    """Shift across edges until every edge has nested neighbourhoods.

    Edges are scanned in lexicographic order; the first violating edge is
    shifted towards the endpoint with the larger (degree, index), then the
    scan restarts.  Shifting toward the endpoint of larger degree raises the
    sum of squared degrees, which bounds the number of steps.
    """
    if budget is None:
        budget = max(1, g.n ** 3)
    trace = ShiftTrace(g, g)
    cur = g
    while True:
        for u, v in cur.edges():
            if _private_mask(cur, u, v) and _private_mask(cur, v, u):
                break
        else:
            trace.final = cur
            return trace
        if len(trace.steps) >= budget:
            trace.final = cur
            raise StabilizationError(f"stabilization exceeded {budget} shifts", trace=trace)
        if (cur.degree(v), v) < (cur.degree(u), u):
            u, v = v, u
        trace.steps.append((u, v, shift_set(cur, u, v)))
        cur = kelmans_shift(cur, u, v)


def universal_vertices(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [v for v in range(g.n) if g.adj[v] | (1 << v) == full]


def _level(g: Graph) -> int | None:
    un = universal_vertices(g)
    if len(un) == g.n:
        return 1
    if not un:
        return None
    rest = g.induced(v for v in range(g.n) if v not in set(un))
    worst = 0
    for comp in connected_components(rest):
        sub = _level(rest.induced(comp))
        if sub is None:
            return None
        worst = max(worst, sub)
    return worst + 1


def level_classify(g: Graph) -> list[tuple[list[int], int | None]]:
    """Level of each connected component, as ``(vertices, level)`` pairs.

    Level 1 is a clique; otherwise strip the universal vertices and take one
    more than the deepest subordinate component.  ``None`` marks a component
    where some stage has no universal vertex.
    """
    return [(comp, _level(g.induced(comp))) for comp in connected_components(g)]
