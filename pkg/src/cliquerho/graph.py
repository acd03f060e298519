"""Undirected simple graphs stored as per-vertex neighbour bitsets.

Vertices are the integers ``0..n-1``.  Row ``adj[v]`` is a Python ``int``
whose bit ``j`` is set exactly when ``v ~ j``.  Python integers are
arbitrary precision, so the same representation serves both the small
graphs fed to the exact dynamic programs and the large constructions used
by the spectral code.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import DomainError, Graph6Error, GraphSizeError

GRAPH6_MAX_N = 62


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise DomainError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise DomainError(f"loop at vertex {i}")
            if row & ~full:
                raise DomainError(f"row {i} references a vertex >= n")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise DomainError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def with_edges(self, add=(), remove=()) -> Graph:
        rows = list(self.adj)
        for u, v in remove:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        for u, v in add:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, order: Sequence[int]) -> Graph:
        """Return the graph whose vertex ``i`` is vertex ``order[i]`` of self."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            for j in iter_bits(self.adj[v]):
                r |= 1 << pos[j]
            rows.append(r)
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices``, relabelled in increasing order."""
        vs = sorted(set(vertices))
        mask = 0
        for v in vs:
            mask |= 1 << v
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            r = 0
            for j in iter_bits(self.adj[v] & mask):
                r |= 1 << pos[j]
            rows.append(r)
        return Graph(len(vs), tuple(rows))

    def __repr__(self) -> str:
        if self.n <= GRAPH6_MAX_N:
            return f"Graph({to_graph6(self)!r})"
        return f"Graph(n={self.n}, e={self.num_edges})"


# ---------------------------------------------------------------------------
# graph6

def _edge_bits(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (``n <= 62``)."""
    data = text.strip("\r\n")
    if data.startswith(">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string", offset=0)
    codes = [ord(ch) for ch in data]
    for pos, c in enumerate(codes):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside [63,126]", offset=pos)
    n = codes[0] - 63
    if n > GRAPH6_MAX_N:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(codes) != 1 + nbytes:
        bad = min(len(codes), 1 + nbytes)
        raise Graph6Error(
            f"expected {1 + nbytes} bytes for n={n}, got {len(codes)}", offset=bad
        )
    rows = [0] * n
    k = 0
    for i, j in _edge_bits(n):
        byte = codes[1 + k // 6] - 63
        if byte >> (5 - k % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        k += 1
    pad = nbytes * 6 - nbits
    if pad and (codes[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", offset=len(codes) - 1)
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphSizeError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    k = 0
    for i, j in _edge_bits(g.n):
        acc = (acc << 1) | (g.adj[i] >> j & 1)
        k += 1
        if k == 6:
            out.append(chr(acc + 63))
            acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one graph per non-blank line, tagging errors with the line number."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(str(exc), offset=exc.offset, line=lineno) from None


# ---------------------------------------------------------------------------
# named graphs and constructions

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def union_disjoint(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.adj + tuple(r << g.n for r in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = tuple(r | hmask for r in g.adj) + tuple((r << g.n) | gmask for r in h.adj)
    return Graph(g.n + h.n, rows)


def construct_snla(n: int, l: int, a: int) -> Graph:
    """K_l joined with (K_a plus n-l-a isolated vertices).

    Vertices ``0..l-1`` are universal, ``l..l+a-1`` the attached clique,
    the rest have neighbourhood exactly ``{0..l-1}``.  ``a = n - l`` is
    allowed and yields K_n.
    """
    if l < 1 or a < 1 or l + a > n:
        raise DomainError(f"S_(n,l,a) needs l >= 1, a >= 1, l + a <= n; got n={n}, l={l}, a={a}")
    return join(complete_graph(l), union_disjoint(complete_graph(a), empty_graph(n - l - a)))


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi G(n, p) drawn from a ``random.Random``-like ``rng``."""
    return Graph.from_edges(n, [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p])


# ---------------------------------------------------------------------------
# connectivity

def _reach(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, ordered by smallest vertex."""
    left = (1 << g.n) - 1
    comps = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = _reach(g, v, left)
        comps.append(list(iter_bits(comp)))
        left &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    full = (1 << g.n) - 1
    return _reach(g, 0, full) == full


def is_biconnected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    full = (1 << g.n) - 1
    for v in range(g.n):
        rest = full & ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        if _reach(g, start, rest) != rest:
            return False
    return True


def eccentricity(g: Graph, v: int) -> float:
    full = (1 << g.n) - 1
    seen = frontier = 1 << v
    dist = 0
    while True:
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= g.adj[w]
        nxt &= ~seen
        if not nxt:
            break
        dist += 1
        seen |= nxt
        frontier = nxt
    return dist if seen == full else math.inf


def diameter(g: Graph) -> float:
    """Maximum distance; ``math.inf`` when the graph is disconnected."""
    if g.n <= 1:
        return 0
    return max(eccentricity(g, v) for v in range(g.n))
