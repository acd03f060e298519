"""Spectral radius of the t-clique tensor.

The order-t tensor is never formed.  Its action on a vector only needs the
clique list: for vertex i, ``(A x^{t-1})_i`` is the sum over t-cliques K
containing i of the product of ``x_j`` over ``j in K - {i}`` (the
``1/(t-1)!`` entry weight cancels the ``(t-1)!`` orderings of K - {i}).
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb

import numpy as np

from .cliques import CliqueSet, enumerate_t_cliques
from .errors import ConvergenceError, DomainError
from .graph import Graph

EIGEN_TOL = 1e-10
CMP_TOL = 1e-8
MAX_ITER = 200_000

_EPS = np.finfo(float).eps


@dataclass
class SpectralResult:
    t: int
    rho: float
    vector: list[float]
    bracket_lo: float
    bracket_hi: float
    iterations: int
    residual: float
    component_id: int | None
    component: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class OrbitSolution:
    n: int
    a: int
    b: int
    t: int
    x_a: float
    x_b: float
    x_c: float
    rho: float
    bracket_lo: float
    bracket_hi: float
    iterations: int
    residual: float

    def to_dict(self) -> dict:
        return asdict(self)


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            # smaller root wins so representatives are deterministic
            if rj < ri:
                ri, rj = rj, ri
            self.parent[rj] = ri


# ---------------------------------------------------------------------------
# tensor action

def _apply(cl: np.ndarray, x: np.ndarray, m: int) -> np.ndarray:
    """``A x^{t-1}`` for clique array ``cl`` of shape (N, t) on ``m`` vertices."""
    if cl.shape[0] == 0:
        return np.zeros(m)
    vals = x[cl]
    t = cl.shape[1]
    excl = np.empty_like(vals)
    acc = np.ones(cl.shape[0])
    for j in range(t):
        excl[:, j] = acc
        acc = acc * vals[:, j]
    acc = np.ones(cl.shape[0])
    for j in range(t - 1, -1, -1):
        excl[:, j] *= acc
        acc = acc * vals[:, j]
    return np.bincount(cl.ravel(), weights=excl.ravel(), minlength=m)


def tensor_apply(cs: CliqueSet, x) -> np.ndarray:
    """Return ``A_t(G) x^{t-1}`` as a length-n array."""
    x = np.asarray(x, dtype=float)
    if x.shape != (cs.n,):
        raise DomainError(f"vector of shape {x.shape} for a graph on {cs.n} vertices")
    if not np.all(np.isfinite(x)):
        raise DomainError("vector has non-finite entries")
    return _apply(cs.array(), x, cs.n)


def tensor_form(cs: CliqueSet, x) -> float:
    """``A_t(G) x^t = t * sum over cliques of the product of entries``."""
    x = np.asarray(x, dtype=float)
    cl = cs.array()
    if cl.shape[0] == 0:
        return 0.0
    return float(cs.t * np.prod(x[cl], axis=1).sum())


def clique_components(g: Graph | CliqueSet, t: int | None = None) -> list[list[int]]:
    """Vertex sets of the t-clique connected components.

    Two cliques are linked when they share a vertex; a component is the
    vertex union of one linked class.  Vertices lying in no t-clique are in
    no component.  Components are ordered by their smallest vertex.
    """
    if isinstance(g, CliqueSet):
        cs = g
    else:
        if t is None or t < 2:
            raise DomainError(f"t must be >= 2, got {t}")
        cs = enumerate_t_cliques(g, t)
    uf = UnionFind(cs.n)
    covered = set()
    for k in cs.cliques:
        covered.update(k)
        for v in k[1:]:
            uf.union(k[0], v)
    groups: dict[int, list[int]] = {}
    for v in sorted(covered):
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


# ---------------------------------------------------------------------------
# shifted power iteration

def _gap_ok(lo: float, hi: float, tol: float) -> bool:
    # the floor keeps the test meaningful once rho * eps approaches tol
    return hi - lo <= max(tol, 16 * _EPS * abs(hi))


def _power_iterate(cl: np.ndarray, m: int, t: int, tol: float, max_iter: int):
    """Shifted NQZ iteration on one weakly irreducible block.

    Returns ``(x, lo, hi, iterations)`` with ``lo <= rho <= hi``.
    """
    x = np.full(m, float(m) ** (-1.0 / t))
    lo = hi = 0.0
    for it in range(1, max_iter + 1):
        ax = _apply(cl, x, m)
        xp = x ** (t - 1)
        ratio = ax / xp
        lo, hi = float(ratio.min()), float(ratio.max())
        if _gap_ok(lo, hi, tol):
            return x, lo, hi, it
        # +x^{[t-1]} is the identity shift that makes the map primitive
        y = ax + xp
        x = y ** (1.0 / (t - 1))
        x /= np.sum(x ** t) ** (1.0 / t)
    raise ConvergenceError(
        f"shifted power iteration did not reach gap {tol:g} in {max_iter} steps",
        bracket=(lo, hi),
        iterations=max_iter,
    )


def rho_t(g: Graph | CliqueSet, t: int | None = None, tol: float = EIGEN_TOL,
          max_iter: int = MAX_ITER) -> SpectralResult:
    """t-clique spectral radius with its Perron vector.

    Each t-clique component is solved separately and the largest wins; the
    winning vector is embedded with zeros elsewhere.  A graph with no
    t-clique has radius 0.
    """
    cs = g if isinstance(g, CliqueSet) else enumerate_t_cliques(g, t)
    t = cs.t
    if t < 2:
        raise DomainError(f"t must be >= 2, got {t}")
    n = cs.n
    if not cs.cliques:
        return SpectralResult(t, 0.0, [0.0] * n, 0.0, 0.0, 0, 0.0, None, [])

    full = cs.array()
    comps = clique_components(cs)
    owner = np.full(n, -1, dtype=np.intp)
    for cid, comp in enumerate(comps):
        owner[comp] = cid
    clique_owner = owner[full[:, 0]]

    best = None
    total_iter = 0
    for cid, comp in enumerate(comps):
        local = np.full(n, -1, dtype=np.intp)
        local[comp] = np.arange(len(comp))
        cl = local[full[clique_owner == cid]]
        xloc, lo, hi, its = _power_iterate(cl, len(comp), t, tol, max_iter)
        total_iter += its
        rho = 0.5 * (lo + hi)
        if best is None or rho > best[0]:
            best = (rho, cid, xloc, lo, hi)

    rho, cid, xloc, lo, hi = best
    x = np.zeros(n)
    x[comps[cid]] = xloc
    residual = float(np.max(np.abs(_apply(full, x, n) - rho * x ** (t - 1))))
    return SpectralResult(t, float(rho), x.tolist(), lo, hi, total_iter, residual,
                          cid, list(comps[cid]))


def adjacency_rho(g: Graph) -> float:
    """Adjacency spectral radius via the same iteration at t = 2."""
    return rho_t(g, 2).rho


def rho_complete(n: int, t: int) -> float:
    """Closed form for K_n: ``(t/n) C(n, t) = C(n-1, t-1)``."""
    if not 2 <= t <= n:
        raise DomainError(f"need 2 <= t <= n, got n={n}, t={t}")
    return float(comb(n - 1, t - 1))


# ---------------------------------------------------------------------------
# three-orbit reduction for S_{n,a,b} = K_a v (K_b u I_{n-a-b})

def _c(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def _orbit_coefficients(n: int, a: int, b: int, t: int):
    m = n - a - b
    ca = [(j, _c(b, j) * _c(a - 1, t - 1 - j)) for j in range(min(t - 1, b) + 1)]
    cb = [(j, _c(b - 1, j) * _c(a, t - 1 - j)) for j in range(min(t - 1, b - 1) + 1)]
    ca = [(j, w) for j, w in ca if w]
    cb = [(j, w) for j, w in cb if w]
    cc_a = m * _c(a - 1, t - 2)
    cc = _c(a, t - 1)
    return m, ca, cb, cc_a, cc


def _orbit_rows(xa, xb, xc, t, coef):
    """Per-orbit ``A x^{t-1}`` entries for a vertex of A, B, C."""
    m, ca, cb, cc_a, cc = coef
    fa = sum(w * xb ** j * xa ** (t - 1 - j) for j, w in ca)
    if m:
        fa += cc_a * xc * xa ** (t - 2)
    fb = sum(w * xb ** j * xa ** (t - 1 - j) for j, w in cb)
    fc = cc * xa ** (t - 1)
    return fa, fb, fc


def rho_snab_reduced(n: int, a: int, b: int, t: int, tol: float = EIGEN_TOL,
                     max_iter: int = MAX_ITER) -> OrbitSolution:
    """Perron pair of S_{n,a,b} from its three vertex orbits.

    Vertices of K_a, K_b and the independent part share one Perron entry
    each, so the eigen-equations collapse to three scalar equations whose
    cost per iteration is O(t) whatever n is.  ``n == a + b`` (the complete
    graph) is accepted; ``x_c`` is then reported as 0.
    """
    if t < 2 or b < 1 or a < t - 1 or a < 1 or n < a + b:
        raise DomainError(
            f"need t >= 2, b >= 1, a >= max(1, t-1), n >= a+b; got n={n}, a={a}, b={b}, t={t}")
    coef = _orbit_coefficients(n, a, b, t)
    m = coef[0]
    sizes = np.array([a, b, m], dtype=float)
    active = sizes > 0
    x = np.where(active, 1.0, 0.0)
    x /= np.sum(sizes * x ** t) ** (1.0 / t)

    trace: list[tuple[float, ...]] = []
    lo = hi = 0.0
    shift = 1.0
    for it in range(1, max_iter + 1):
        f = np.array(_orbit_rows(x[0], x[1], x[2], t, coef))
        xp = x ** (t - 1)
        ratio = f[active] / xp[active]
        lo, hi = float(ratio.min()), float(ratio.max())
        if len(trace) >= 8:
            trace.pop(0)
        trace.append((float(x[0]), float(x[1]), float(x[2]), lo, hi))
        if hi - lo <= max(tol * max(1.0, hi), 16 * _EPS * hi):
            rho = 0.5 * (lo + hi)
            resid = float(np.max(np.abs(f[active] - rho * xp[active])))
            return OrbitSolution(n, a, b, t, float(x[0]), float(x[1]), float(x[2]) if m else 0.0,
                                 rho, lo, hi, it, resid)
        # Shift tracks the lower bracket: any positive shift keeps the same
        # fixed point, and a large one damps the near -rho mode of the
        # star-like quotient.
        shift = max(1.0, lo)
        y = np.where(active, f + shift * xp, 0.0)
        x = y ** (1.0 / (t - 1))
        x /= np.sum(sizes * x ** t) ** (1.0 / t)
    raise ConvergenceError(
        f"orbit iteration for S_({n},{a},{b}), t={t} did not converge",
        bracket=(lo, hi), iterations=max_iter, trace=trace)


def rho_snab(n: int, a: int, b: int, t: int, tol: float = EIGEN_TOL) -> float:
    """rho_t of S_{n,a,b} for any a, b >= 1, including a < t - 1.

    With a < t - 1 no clique reaches the independent part, so the only
    component is K_{a+b}.
    """
    if a >= t - 1:
        return rho_snab_reduced(n, a, b, t, tol).rho
    return rho_complete(a + b, t) if a + b >= t else 0.0
