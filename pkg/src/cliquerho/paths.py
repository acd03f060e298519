"""Exact circumference and longest-path order by bitmask dynamic programming.

``reach[mask]`` is a bitset of the vertices at which some path covering
exactly ``mask`` can end.  For cycles the path is anchored at the lowest
vertex of ``mask`` and only grows through larger vertices, so each cycle
is found from a single anchor.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import DomainError, GraphSizeError
from .graph import Graph, iter_bits, popcount

DP_CAP = 20


@dataclass(frozen=True)
class PathCycleStats:
    circumference: int
    longest_path_order: int

    def to_dict(self) -> dict:
        return asdict(self)


def _check_size(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise GraphSizeError(
            f"exact DP limited to n <= {cap} (got n={g.n}); use the closed forms "
            "for recognised constructions or raise the cap explicitly")


def _longest_cycle(g: Graph, stop_at: int | None = None) -> int:
    """Longest cycle length, or the first length >= ``stop_at`` found."""
    adj = g.adj
    best = 0
    for anchor in range(g.n):
        above = adj[anchor] >> (anchor + 1) << (anchor + 1)
        if popcount(above) < 2:
            continue
        back = adj[anchor]
        reach = {1 << anchor: 1 << anchor}
        frontier = [1 << anchor]
        size = 1
        while frontier:
            size += 1
            nxt: dict[int, int] = {}
            for mask in frontier:
                for v in iter_bits(reach[mask]):
                    for w in iter_bits(adj[v] & ~mask & ~((1 << (anchor + 1)) - 1)):
                        key = mask | (1 << w)
                        nxt[key] = nxt.get(key, 0) | (1 << w)
            if size >= 3 and size > best:
                for ends in nxt.values():
                    if ends & back:
                        best = size
                        if stop_at is not None and best >= stop_at:
                            return best
                        break
            reach = nxt
            frontier = list(nxt)
    return best


def _longest_path(g: Graph, stop_at: int | None = None) -> int:
    """Vertex count of a longest path, or the first count >= ``stop_at``."""
    if g.n == 0:
        return 0
    adj = g.adj
    reach = {1 << v: 1 << v for v in range(g.n)}
    best = 1
    if stop_at is not None and best >= stop_at:
        return best
    while reach:
        nxt: dict[int, int] = {}
        for mask, ends in reach.items():
            for v in iter_bits(ends):
                for w in iter_bits(adj[v] & ~mask):
                    key = mask | (1 << w)
                    nxt[key] = nxt.get(key, 0) | (1 << w)
        if not nxt:
            break
        best += 1
        if stop_at is not None and best >= stop_at:
            return best
        reach = nxt
    return best


def circumference(g: Graph, cap: int = DP_CAP) -> int:
    """Length of a longest cycle; 0 for forests."""
    _check_size(g, cap)
    return _longest_cycle(g)


def longest_path_order(g: Graph, cap: int = DP_CAP) -> int:
    """Number of vertices on a longest path."""
    _check_size(g, cap)
    return _longest_path(g)


def path_cycle_stats(g: Graph, cap: int = DP_CAP) -> PathCycleStats:
    return PathCycleStats(circumference(g, cap), longest_path_order(g, cap))


def is_c_geq_k_free(g: Graph, k: int, cap: int = DP_CAP) -> bool:
    """True when g has no cycle of length >= k."""
    if k < 3:
        raise DomainError(f"k must be >= 3 for cycles, got {k}")
    _check_size(g, cap)
    if g.n < k:
        return True
    return _longest_cycle(g, stop_at=k) < k


def is_p_k_free(g: Graph, k: int, cap: int = DP_CAP) -> bool:
    """True when g has no path on k vertices."""
    if k < 1:
        raise DomainError(f"k must be >= 1 for paths, got {k}")
    _check_size(g, cap)
    if g.n < k:
        return True
    return _longest_path(g, stop_at=k) < k


# ---------------------------------------------------------------------------
# closed forms for S_{n,l,a} = K_l v (K_a u I_m), m = n - l - a

def circumference_snla(n: int, l: int, a: int) -> int:
    # Non-universal vertices sit in segments between consecutive universal
    # vertices on a cycle; K_a fills one segment, each isolated vertex one.
    m = n - l - a
    with_clique = l + a + min(m, l - 1) if l >= 2 or a >= 2 else 0
    without = l + min(m, l) if l >= 2 else 0
    best = max(with_clique, without, l if l >= 3 else 0)
    return best if best >= 3 else 0


def longest_path_order_snla(n: int, l: int, a: int) -> int:
    # A path has l + 1 segments around its l universal vertices.
    m = n - l - a
    return l + a + min(m, l)


# ---------------------------------------------------------------------------
# depth-first reference implementations, independent of the DP above

def reference_longest_path(g: Graph) -> int:
    """Longest path order by exhaustive depth-first extension."""
    best = min(g.n, 1)

    def extend(v: int, used: int, length: int) -> None:
        nonlocal best
        best = max(best, length)
        for w in iter_bits(g.adj[v] & ~used):
            extend(w, used | (1 << w), length + 1)

    for v in range(g.n):
        extend(v, 1 << v, 1)
    return best


def reference_longest_cycle(g: Graph) -> int:
    """Longest cycle by depth-first search from each lowest cycle vertex."""
    best = 0

    def extend(start: int, v: int, used: int, length: int) -> None:
        nonlocal best
        if length >= 3 and g.adj[v] >> start & 1:
            best = max(best, length)
        for w in iter_bits(g.adj[v] & ~used):
            if w > start:
                extend(start, w, used | (1 << w), length + 1)

    for s in range(g.n):
        extend(s, s, 1 << s, 1)
    return best
