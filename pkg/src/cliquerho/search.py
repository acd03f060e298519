"""Exhaustive extremal searches and theorem checks over small graphs."""
from __future__ import annotations

import json
import math
import zlib
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb

import numpy as np

from .canon import canonical_graph6, isomorphism_classes
from .cliques import count_snla, enumerate_t_cliques
from .errors import CliqueRhoError, DomainError, SearchError
from .graph import (Graph, complete_graph, construct_snla, empty_graph, is_biconnected,
                    is_connected, parse_graph6, read_graph6_lines, to_graph6, union_disjoint)
from .paths import (circumference_snla, is_c_geq_k_free, is_p_k_free,
                    longest_path_order_snla, reference_longest_cycle, reference_longest_path)
from .spectral import CMP_TOL, EIGEN_TOL, rho_complete, rho_snab, rho_t

SCHEMA_VERSION = "1"

FAMILIES = ("C", "P")


def _family(family: str) -> str:
    key = family.upper()
    if key in ("C", "C_GEQ_K", "CYCLE", "CYCLES"):
        return "C"
    if key in ("P", "P_K", "PATH", "PATHS"):
        return "P"
    raise DomainError(f"unknown family {family!r}; use 'C' (no cycle >= k) or 'P' (no P_k)")


def family_free(g: Graph, k: int, family: str) -> bool:
    if _family(family) == "C":
        return is_c_geq_k_free(g, k)
    return is_p_k_free(g, k)


def enumerate_graphs(n: int, source: str = "builtin", catalog=None) -> Iterator[Graph]:
    """Stream candidate graphs.

    ``builtin`` yields one canonical representative per isomorphism class
    (n <= 8).  ``catalog`` reads graph6 lines from a path or an iterable of
    lines, without deduplication; ``n`` then filters by order when given.
    """
    if source == "builtin":
        for code in isomorphism_classes(n):
            yield parse_graph6(code)
        return
    if source not in ("catalog", "catalog-stream"):
        raise DomainError(f"unknown source {source!r}")
    if catalog is None:
        raise DomainError("catalog source needs a path or line iterable")
    if isinstance(catalog, (str, bytes)) or hasattr(catalog, "__fspath__"):
        with open(catalog) as fh:
            for g in read_graph6_lines(fh):
                if n is None or g.n == n:
                    yield g
    else:
        for g in read_graph6_lines(catalog):
            if n is None or g.n == n:
                yield g


# ---------------------------------------------------------------------------
# extremal graphs and side bounds

def prescribed_extremal(n: int, k: int, t: int, family: str) -> tuple[str, Graph] | None:
    """The graph the main theorems name as extremal for (n, k, t), if it exists."""
    fam = _family(family)
    if t > (k + 1) // 2:
        if n < k - 1:
            return None
        return f"K_{k - 1} u I_{n - k + 1}", union_disjoint(complete_graph(k - 1),
                                                           empty_graph(n - k + 1))
    if fam == "C":
        l, a = ((k - 1) // 2, 1) if k % 2 else ((k - 2) // 2, 2)
    else:
        l, a = ((k - 3) // 2, 2) if k % 2 else ((k - 2) // 2, 1)
    if l < 1 or l + a > n:
        return None
    return f"S_({n},{l},{a})", construct_snla(n, l, a)


def side_condition_failures(g: Graph, n_t: int, k: int, t: int, family: str) -> list[str]:
    """Edge-count and clique-count bounds violated by a family-free survivor.

    Integer arithmetic throughout: the bounds are cross-multiplied.
    """
    fam = _family(family)
    e = g.num_edges
    n = g.n
    out = []
    if fam == "C":
        if k >= 3 and 2 * e > (k - 1) * (n - 1):
            out.append(f"edge bound: e={e} > (k-1)(n-1)/2")
        if n >= k >= 4 and (k - 2) * n_t > (n - 1) * comb(k - 1, t):
            out.append(f"clique bound: N_{t}={n_t} > (n-1)/(k-2) C(k-1,{t})")
    else:
        if k >= 2 and 2 * e > (k - 2) * n:
            out.append(f"edge bound: e={e} > (k-2)n/2")
        if k >= 2 and (k - 1) * n_t > n * comb(k - 1, t):
            out.append(f"clique bound: N_{t}={n_t} > n/(k-1) C(k-1,{t})")
    return out


# ---------------------------------------------------------------------------
# max-rho search

@dataclass
class SearchReport:
    family: str
    params: dict
    candidates_seen: int
    survivors: int
    argmax_graphs: list[str]
    argmax_rho: float | None
    ties: list[dict]
    tie_classes: int
    conjectured_extremal: str | None
    conjectured_label: str | None
    conjectured_rho: float | None
    match: bool
    assertion_failures: list[dict]
    schema: str = SCHEMA_VERSION
    rows: list[dict] = field(default_factory=list, repr=False)

    def to_dict(self, with_rows: bool = False) -> dict:
        d = asdict(self)
        if not with_rows:
            d.pop("rows")
        return d

    def to_json(self, with_rows: bool = False) -> str:
        return json.dumps(self.to_dict(with_rows), sort_keys=True)


def _scan_chunk(args) -> tuple[int, list[dict], list[dict]]:
    codes, k, t, family, tol = args
    seen = 0
    rows: list[dict] = []
    failures: list[dict] = []
    for code in codes:
        seen += 1
        g = parse_graph6(code)
        try:
            if not family_free(g, k, family):
                continue
            cs = enumerate_t_cliques(g, t)
            res = rho_t(cs, tol=tol)
        except CliqueRhoError as exc:
            raise SearchError(str(exc), graph6=code) from exc
        n_t = len(cs)
        rows.append({"graph6": code, "rho": res.rho, "edges": g.num_edges, "cliques": n_t})
        for msg in side_condition_failures(g, n_t, k, t, family):
            failures.append({"graph6": code, "failure": msg})
    return seen, rows, failures


def _shard(code: str, jobs: int) -> int:
    return zlib.crc32(code.encode()) % jobs


def _run_rows(graphs: Iterable[Graph], k: int, t: int, family: str, tol: float, jobs: int):
    codes = [to_graph6(g) for g in graphs]
    if jobs <= 1:
        return _scan_chunk((codes, k, t, family, tol))
    shards: list[list[str]] = [[] for _ in range(jobs)]
    for code in codes:
        shards[_shard(code, jobs)].append(code)
    seen, rows, failures = 0, [], []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for s, r, f in pool.map(_scan_chunk, [(sh, k, t, family, tol) for sh in shards]):
            seen += s
            rows += r
            failures += f
    return seen, rows, failures


def search_max_rho(n: int, k: int, t: int, family: str = "C", source: str = "builtin",
                   catalog=None, jobs: int = 1, tol: float = EIGEN_TOL,
                   cmp_tol: float = CMP_TOL) -> SearchReport:
    """Maximise rho_t over the family-free graphs of the stream.

    Every survivor is checked against the edge and clique-count bounds;
    graphs within ``cmp_tol`` of the maximum are all reported as ties.
    The result does not depend on ``jobs``: rows are merged then sorted.
    """
    fam = _family(family)
    if t < 2:
        raise DomainError(f"t must be >= 2, got {t}")
    if fam == "C" and k < 3:
        raise DomainError(f"cycle family needs k >= 3, got {k}")
    if fam == "P" and k < 2:
        raise DomainError(f"path family needs k >= 2, got {k}")
    graphs = enumerate_graphs(n, source, catalog)
    seen, rows, failures = _run_rows(graphs, k, t, fam, tol, jobs)
    rows.sort(key=lambda r: r["graph6"])
    failures.sort(key=lambda f: (f["graph6"], f["failure"]))

    best = max((r["rho"] for r in rows), default=None)
    ties = [] if best is None else [
        {"graph6": r["graph6"], "rho": r["rho"]} for r in rows if r["rho"] >= best - cmp_tol]
    argmax = [r["graph6"] for r in ties]
    canon_ties = sorted({canonical_graph6(parse_graph6(c)) for c in argmax})

    # independent re-check of the winners with the backtracking oracle
    for code in argmax:
        g = parse_graph6(code)
        val = reference_longest_cycle(g) if fam == "C" else reference_longest_path(g)
        if val >= k:
            failures.append({"graph6": code, "failure": "argmax violates family predicate"})

    conj = prescribed_extremal(n, k, t, fam) if n is not None else None
    conj_code = conj_label = conj_rho = None
    match = False
    if conj is not None and conj[1].n <= 62:
        conj_label, cg = conj
        conj_code = canonical_graph6(cg)
        conj_rho = rho_t(cg, t, tol=tol).rho
        match = conj_code in canon_ties
    return SearchReport(
        family=fam, params={"n": n, "k": k, "t": t}, candidates_seen=seen,
        survivors=len(rows), argmax_graphs=argmax, argmax_rho=best, ties=ties,
        tie_classes=len(canon_ties), conjectured_extremal=conj_code,
        conjectured_label=conj_label, conjectured_rho=conj_rho, match=match,
        assertion_failures=failures, rows=rows)


# ---------------------------------------------------------------------------
# S-family scans (reduced solver, so n can be large)

def _admissible(n: int, a: int, b: int, k: int, fam: str) -> bool:
    if a < 1 or b < 1 or a + b > n:
        return False
    if fam == "C":
        return circumference_snla(n, a, b) <= k - 1
    return longest_path_order_snla(n, a, b) <= k - 1


def _theorem_graph(k: int, fam: str) -> tuple[int, int]:
    if fam == "C":
        return ((k - 1) // 2, 1) if k % 2 else ((k - 2) // 2, 2)
    return ((k - 3) // 2, 2) if k % 2 else ((k - 2) // 2, 1)


def _label(n: int, a: int, b: int) -> str:
    return f"K_{n}" if a + b == n else f"S_({n},{a},{b})"


@dataclass
class ScanRow:
    n: int
    theorem_graph: str
    rho_theorem: float
    family_argmax: str
    rho_argmax: float
    best_alternative: str | None
    rho_alternative: float | None
    rho_K: float
    dominates: bool


@dataclass
class ScanResult:
    k: int
    t: int
    family: str
    rows: list[ScanRow]
    first_dominating_n: int | None
    crossover_n: int | None
    schema: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return asdict(self)


def scan_grid(lo: int, hi: int, dense: int = 2000, points: int = 400) -> list[int]:
    """Every n in [lo, hi] when the span is small, else a log-spaced grid."""
    if hi - lo <= dense:
        return list(range(lo, hi + 1))
    return sorted({int(v) for v in np.geomspace(lo, hi, points)} | {lo, hi})


def scan_point(n: int, k: int, t: int, family: str, tol: float = EIGEN_TOL,
               cmp_tol: float = CMP_TOL) -> ScanRow:
    """Compare the theorem's S-graph with every admissible S_{n,a,b} and K_{k-1}."""
    fam = _family(family)
    la = _theorem_graph(k, fam)
    cands: dict[str, float] = {}
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            if _admissible(n, a, b, k, fam):
                cands.setdefault(_label(n, a, b), rho_snab(n, a, b, t, tol))
    rho_k = rho_complete(k - 1, t) if 2 <= t <= k - 1 and n >= k - 1 else 0.0
    label_k = f"K_{k - 1} u I_{n - k + 1}" if n > k - 1 else f"K_{k - 1}"
    if n >= k - 1:
        cands.setdefault(label_k, rho_k)
    theorem = _label(n, *la) if la[0] >= 1 and sum(la) <= n else None
    rho_theorem = cands.get(theorem, math.nan) if theorem else math.nan
    arg = max(sorted(cands), key=lambda lab: cands[lab])
    others = {lab: r for lab, r in cands.items() if lab != theorem}
    alt = max(sorted(others), key=lambda lab: others[lab]) if others else None
    dominates = theorem is not None and (alt is None or rho_theorem > others[alt] + cmp_tol)
    return ScanRow(n, theorem or "none", rho_theorem, arg, cands[arg], alt,
                   others[alt] if alt else None, rho_k, dominates)


def crossover_scan(k: int, t: int, family: str, n_range: Iterable[int],
                   tol: float = EIGEN_TOL, cmp_tol: float = CMP_TOL) -> ScanResult:
    """Tabulate the S-family contest over ``n_range``.

    ``crossover_n`` is the smallest scanned n from which the theorem's graph
    strictly beats every alternative at all larger scanned n.
    """
    fam = _family(family)
    if t > (k + 1) // 2:
        raise DomainError(f"crossover scan needs t <= floor((k+1)/2); got k={k}, t={t}")
    rows = [scan_point(n, k, t, fam, tol, cmp_tol) for n in sorted(set(n_range))]
    first = next((r.n for r in rows if r.dominates), None)
    cross = None
    for r in reversed(rows):
        if not r.dominates:
            break
        cross = r.n
    return ScanResult(k, t, fam, rows, first, cross)


def scaling_exponent(s: int, t: int, ns: Iterable[int], tol: float = EIGEN_TOL) -> float:
    """Least-squares slope of log rho_t(S_{n,s}) against log n."""
    ns = list(ns)
    rhos = [rho_snab(n, s, 1, t, tol) for n in ns]
    slope, _ = np.polyfit(np.log(ns), np.log(rhos), 1)
    return float(slope)


def chain_comparisons(n: int, max_order: int, tol: float = EIGEN_TOL) -> list[dict]:
    """rho_t of S_{n,a+1,b-2} against S_{n,a,b} for b >= 3, 2a+b-1 <= max_order, t <= a+1."""
    out = []
    for a in range(1, max_order + 1):
        for b in range(3, max_order + 1):
            if 2 * a + b - 1 > max_order:
                continue
            for t in range(2, a + 2):
                before = rho_snab(n, a, b, t, tol)
                after = rho_snab(n, a + 1, b - 2, t, tol)
                out.append({"n": n, "a": a, "b": b, "t": t, "rho_ab": before,
                            "rho_shifted": after, "increase": after - before})
    return out


# ---------------------------------------------------------------------------
# theorem verification

THEOREMS = ("T1.1", "T1.2", "T1.3", "T1.5", "C1.4", "C1.6", "T1.7", "T1.8", "T1.9", "T1.10")


@dataclass
class Verdict:
    theorem: str
    params: dict
    verdict: str
    checked: int
    violations: list[str]
    details: dict
    schema: str = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return self.verdict in ("pass", "holds")

    def to_dict(self) -> dict:
        return asdict(self)


def _require(cond: bool, text: str) -> None:
    if not cond:
        raise DomainError(f"hypothesis violated: {text}")


def _clique_count_bound(n: int, k: int, t: int, fam: str) -> int:
    if fam == "C":
        first = count_snla(n, 2, k - 4, t)
        second = count_snla(n, (k - 1) // 2, 1, t) if k % 2 else count_snla(n, (k - 2) // 2, 2, t)
    else:
        first = count_snla(n, 1, k - 3, t)
        second = count_snla(n, (k - 3) // 2, 2, t) if k % 2 else count_snla(n, (k - 2) // 2, 1, t)
    return max(first, second)


def verify_theorem(theorem: str, n: int, k: int, t: int | None = None,
                   source: str = "builtin", catalog=None, jobs: int = 1,
                   tol: float = EIGEN_TOL, cmp_tol: float = CMP_TOL,
                   bound_tol: float = 1e-9, scan_max: int = 10_000) -> Verdict:
    """Check one theorem exhaustively over the graphs on n vertices."""
    thm = theorem.upper()
    if thm not in THEOREMS:
        raise DomainError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    params = {"n": n, "k": k, "t": t}
    fam = "C" if thm in ("T1.1", "T1.3", "C1.4", "T1.7", "T1.8") else "P"

    if thm in ("T1.7", "T1.9", "T1.8", "T1.10", "T1.3", "T1.5", "C1.4", "C1.6"):
        _require(t is not None and t >= 2, "t >= 2")
    if thm in ("T1.7", "T1.9"):
        _require(2 <= (k + 1) // 2 < t < k, "2 <= floor((k+1)/2) < t < k")
        _require(n >= k - 1, "n >= k-1")
    if thm in ("T1.8", "T1.10"):
        _require(2 <= t <= (k + 1) // 2, "2 <= t <= floor((k+1)/2)")
        la = _theorem_graph(k, fam)
        _require(la[0] >= 1, "the extremal S-graph needs a nonempty universal part")
        _require(sum(la) <= n, "n large enough to host the extremal graph")
    if thm == "T1.1":
        _require(k >= 3, "k >= 3")
    if thm in ("T1.2", "C1.6"):
        _require(k >= 2, "k >= 2")
    if thm == "C1.4":
        _require(n >= k >= 4, "n >= k >= 4")
    if thm == "T1.3":
        _require(n >= k >= 5, "n >= k >= 5")
    if thm == "T1.5":
        _require(n >= k >= 4, "n >= k >= 4")

    checked = 0
    violations: list[str] = []
    details: dict = {}

    if thm in ("T1.7", "T1.9"):
        report = search_max_rho(n, k, t, fam, source, catalog, jobs, tol, cmp_tol)
        bound = rho_complete(k - 1, t)
        checked = report.survivors
        violations = [r["graph6"] for r in report.rows if r["rho"] > bound + bound_tol]
        violations += [f["graph6"] for f in report.assertion_failures]
        details = {"bound": bound, "argmax_rho": report.argmax_rho,
                   "argmax_graphs": report.argmax_graphs, "side_failures": report.assertion_failures}
        return Verdict(thm, params, "fail" if violations else "pass", checked,
                       sorted(set(violations)), details)

    if thm in ("T1.8", "T1.10"):
        report = search_max_rho(n, k, t, fam, source, catalog, jobs, tol, cmp_tol)
        checked = report.survivors
        unique = report.tie_classes == 1
        details = {"argmax_rho": report.argmax_rho, "argmax_graphs": report.argmax_graphs,
                   "tie_classes": report.tie_classes, "extremal": report.conjectured_label,
                   "extremal_graph6": report.conjectured_extremal,
                   "extremal_rho": report.conjectured_rho,
                   "side_failures": report.assertion_failures}
        if report.match and unique and not report.assertion_failures:
            return Verdict(thm, params, "holds", checked, [], details)
        scan = crossover_scan(k, t, fam, scan_grid(max(n, k), scan_max), tol, cmp_tol)
        details["scan_crossover_n"] = scan.crossover_n
        below = scan.crossover_n is None or n < scan.crossover_n
        violations = [c for c in report.argmax_graphs if c != report.conjectured_extremal]
        verdict = "fails-below-threshold" if below and not report.assertion_failures else "fails"
        return Verdict(thm, params, verdict, checked, violations, details)

    # counting theorems: edge and clique bounds
    for g in enumerate_graphs(n, source, catalog):
        if not family_free(g, k, fam):
            continue
        if thm == "T1.3" and not is_biconnected(g):
            continue
        if thm == "T1.5" and not is_connected(g):
            continue
        checked += 1
        code = to_graph6(g)
        e = g.num_edges
        if thm == "T1.1":
            ok = 2 * e <= (k - 1) * (n - 1)
        elif thm == "T1.2":
            ok = 2 * e <= (k - 2) * n
        else:
            n_t = len(enumerate_t_cliques(g, t))
            if thm == "C1.4":
                ok = (k - 2) * n_t <= (n - 1) * comb(k - 1, t)
            elif thm == "C1.6":
                ok = (k - 1) * n_t <= n * comb(k - 1, t)
            else:
                bound = _clique_count_bound(n, k, t, fam)
                details["bound"] = bound
                ok = n_t <= bound
        if not ok:
            violations.append(code)
    return Verdict(thm, params, "fail" if violations else "pass", checked, violations, details)
