"""Canonical graph6 strings and isomorphism-class enumeration for small n."""
from __future__ import annotations

import functools
import os
from pathlib import Path

from .errors import GraphSizeError
from .graph import Graph, iter_bits, parse_graph6, to_graph6

BUILTIN_MAX_N = 8


def _twin_classes(g: Graph) -> list[int]:
    """Bitmask of each vertex's twin class (same neighbours apart from each other).

    Mixing true and false twins in one triple is impossible, so the relation
    is transitive and the classes are well defined.
    """
    classes = [1 << v for v in range(g.n)]
    for a in range(g.n):
        for b in range(a + 1, g.n):
            mask = ~((1 << a) | (1 << b))
            if g.adj[a] & mask == g.adj[b] & mask:
                classes[a] |= 1 << b
                classes[b] |= 1 << a
    return classes


def canonical_order(g: Graph) -> tuple[int, ...]:
    """Vertex order whose relabelling gives the lexicographically least graph6.

    graph6 writes the upper triangle column by column, so the string is
    fixed one column at a time: position j contributes the bits
    ``x(order[0], w) .. x(order[j-1], w)`` of the vertex w placed there.
    A breadth-first beam keeps every partial order whose prefix is minimal.
    Twin vertices are interchangeable (swapping them is an automorphism
    fixing everything else), so only the lowest unplaced member of a twin
    class is branched on.
    """
    n = g.n
    if n <= 1:
        return tuple(range(n))
    adj = g.adj
    twins = _twin_classes(g)
    # state: (order, placed mask, column value of every vertex so far)
    beam = [((), 0, (0,) * n)]
    full = (1 << n) - 1
    for _ in range(n):
        best_col = None
        nxt = []
        for order, placed, cols in beam:
            free = full & ~placed
            for w in iter_bits(free):
                col = cols[w]
                if best_col is not None and col > best_col:
                    continue
                peers = twins[w] & free
                if peers & -peers != 1 << w:
                    continue
                if best_col is None or col < best_col:
                    best_col = col
                    nxt = []
                row = adj[w]
                nxt.append((order + (w,), placed | (1 << w),
                            tuple((c << 1) | (row >> x & 1) for x, c in enumerate(cols))))
        beam = nxt
    return beam[0][0]


def canonical_graph6(g: Graph) -> str:
    return to_graph6(g.relabel(canonical_order(g)))


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_order(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_graph6(g) == canonical_graph6(h)


# OEIS A000088, used to validate cached class lists
CLASS_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)


def _cache_path(n: int) -> Path | None:
    root = os.environ.get("CLIQUERHO_CACHE")
    if root == "":
        return None
    base = Path(root) if root else Path.home() / ".cache" / "cliquerho"
    return base / f"classes_n{n}.g6"


def _generate(n: int) -> tuple[str, ...]:
    seen: set[str] = set()
    for code in isomorphism_classes(n - 1):
        base = parse_graph6(code)
        for nbrs in range(1 << (n - 1)):
            rows = tuple(r | ((nbrs >> i & 1) << (n - 1)) for i, r in enumerate(base.adj))
            seen.add(canonical_graph6(Graph(n, rows + (nbrs,))))
    return tuple(sorted(seen))


@functools.lru_cache(maxsize=None)
def isomorphism_classes(n: int) -> tuple[str, ...]:
    """Canonical graph6 of every graph on n vertices, sorted.

    Classes on n vertices are grown from those on n - 1 by adding a vertex
    with every possible neighbourhood; duplicates collapse on the canonical
    string.  Lists for n >= 7 are cached on disk (``$CLIQUERHO_CACHE``,
    default ``~/.cache/cliquerho``; set it empty to disable) and a cache
    file is only trusted when its length matches the known class count.
    """
    if n > BUILTIN_MAX_N:
        raise GraphSizeError(f"builtin enumeration supports n <= {BUILTIN_MAX_N}, got {n}")
    if n < 0:
        raise GraphSizeError(f"n must be >= 0, got {n}")
    if n <= 1:
        return (to_graph6(Graph(n, (0,) * n)),)
    path = _cache_path(n) if n >= 7 else None
    if path is not None and path.exists():
        codes = tuple(path.read_text().split())
        if len(codes) == CLASS_COUNTS[n]:
            return codes
    codes = _generate(n)
    if path is not None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(f".tmp{os.getpid()}")
            tmp.write_text("\n".join(codes) + "\n")
            tmp.replace(path)
        except OSError:
            pass
    return codes
