"""Command-line interface: ``cliquerho <subcommand> [options]``.

Graph input comes from ``--g6`` or standard input, one graph per line.
Lines may be raw graph6 or JSON objects carrying a ``graph6`` field, so the
output of ``construct`` pipes straight into the other subcommands.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from . import __version__
from .cliques import count_t_cliques, enumerate_t_cliques
from .errors import CliqueRhoError
from .graph import (complete_graph, construct_snla, cycle_graph, empty_graph, parse_graph6,
                    path_graph, random_graph, star_graph, to_graph6)
from .paths import circumference, is_c_geq_k_free, is_p_k_free, longest_path_order
from .search import (SCHEMA_VERSION, crossover_scan, scan_grid, search_max_rho,
                     verify_theorem, THEOREMS)
from .spectral import CMP_TOL, EIGEN_TOL, clique_components, rho_t
from .transforms import kelmans_shift, level_classify, shift_set, stabilize, universal_vertices

DEFAULT_SEED = 20240601


def _graph_lines(args):
    if args.g6:
        for code in args.g6:
            yield code, parse_graph6(code)
        return
    for lineno, line in enumerate(sys.stdin, 1):
        line = line.strip()
        if not line or line == "graph6":
            continue
        if line.startswith("{"):
            line = json.loads(line)["graph6"]
        try:
            yield line, parse_graph6(line)
        except CliqueRhoError as exc:
            raise CliqueRhoError(f"stdin line {lineno}: {exc}") from None


class Writer:
    """Emit records as JSON lines or as CSV with a header on first use."""

    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self._csv = None

    def emit(self, record: dict, csv_fields=None) -> None:
        if self.fmt == "json":
            record = {"schema": SCHEMA_VERSION, **record}
            self.out.write(json.dumps(record, sort_keys=True) + "\n")
            return
        fields = csv_fields or [k for k, v in record.items() if not isinstance(v, (list, dict))]
        if self._csv is None:
            self._csv = csv.DictWriter(self.out, fieldnames=fields, extrasaction="ignore",
                                       lineterminator="\n")
            self._csv.writeheader()
        self._csv.writerow({k: record.get(k) for k in fields})


# ---------------------------------------------------------------------------
# subcommands

def cmd_rho(args, w: Writer) -> int:
    for code, g in _graph_lines(args):
        res = rho_t(g, args.t, tol=args.tol)
        w.emit({"graph6": code, **res.to_dict()}, ["graph6", "t", "rho", "bracket_lo",
                                                   "bracket_hi", "iterations", "residual"])
    return 0


def cmd_cliques(args, w: Writer) -> int:
    for code, g in _graph_lines(args):
        if args.count_only:
            w.emit({"graph6": code, "t": args.t, "count": count_t_cliques(g, args.t)})
        else:
            cs = enumerate_t_cliques(g, args.t)
            w.emit({"graph6": code, "t": args.t, "count": len(cs),
                    "cliques": [list(k) for k in cs.cliques]}, ["graph6", "t", "count"])
    return 0


def cmd_components(args, w: Writer) -> int:
    for code, g in _graph_lines(args):
        comps = clique_components(g, args.t)
        w.emit({"graph6": code, "t": args.t, "count": len(comps), "components": comps},
               ["graph6", "t", "count"])
    return 0


def cmd_shift(args, w: Writer) -> int:
    for code, g in _graph_lines(args):
        moved = shift_set(g, args.u, args.v)
        h = kelmans_shift(g, args.u, args.v)
        w.emit({"graph6": code, "u": args.u, "v": args.v, "moved": moved,
                "result": to_graph6(h)}, ["graph6", "u", "v", "result"])
    return 0


def cmd_stabilize(args, w: Writer) -> int:
    for code, g in _graph_lines(args):
        trace = stabilize(g)
        if args.jsonl:
            sys.stdout.write(trace.to_jsonl())
            continue
        w.emit({"graph6": code, "final": to_graph6(trace.final), "num_steps": len(trace.steps),
                "steps": [{"u": u, "v": v, "moved": m} for u, v, m in trace.steps]},
               ["graph6", "final", "num_steps"])
    return 0


def cmd_classify(args, w: Writer) -> int:
    for code, g in _graph_lines(args):
        levels = level_classify(g)
        w.emit({"graph6": code, "universal": universal_vertices(g),
                "components": [{"vertices": vs, "level": lv} for vs, lv in levels]},
               ["graph6"])
    return 0


def cmd_cycles(args, w: Writer) -> int:
    for code, g in _graph_lines(args):
        rec = {"graph6": code, "circumference": circumference(g)}
        if args.k is not None:
            rec["k"] = args.k
            rec["c_geq_k_free"] = is_c_geq_k_free(g, args.k)
        w.emit(rec)
    return 0


def cmd_paths(args, w: Writer) -> int:
    for code, g in _graph_lines(args):
        rec = {"graph6": code, "longest_path_order": longest_path_order(g)}
        if args.k is not None:
            rec["k"] = args.k
            rec["p_k_free"] = is_p_k_free(g, args.k)
        w.emit(rec)
    return 0


def cmd_search(args, w: Writer) -> int:
    source = "catalog" if args.catalog else "builtin"
    rep = search_max_rho(args.n, args.k, args.t, args.family, source, args.catalog,
                         args.jobs, args.tol, args.cmp_tol)
    if args.format == "json":
        sys.stdout.write(rep.to_json() + "\n")
    else:
        for row in rep.rows:
            w.emit({"n": args.n, "rho": row["rho"], "graph6": row["graph6"]}, ["n", "rho", "graph6"])
    return 1 if rep.assertion_failures else 0


def cmd_verify(args, w: Writer) -> int:
    source = "catalog" if args.catalog else "builtin"
    v = verify_theorem(args.theorem, args.n, args.k, args.t, source, args.catalog, args.jobs,
                       args.tol, args.cmp_tol)
    w.emit(v.to_dict(), ["theorem", "verdict", "checked"])
    return 0 if v.passed else 1


def _parse_range(text: str) -> list[int]:
    if "," in text:
        return [int(x) for x in text.split(",")]
    parts = [int(x) for x in text.split(":")]
    if len(parts) == 2:
        return scan_grid(parts[0], parts[1])
    if len(parts) == 3:
        return list(range(parts[0], parts[1] + 1, parts[2]))
    raise argparse.ArgumentTypeError("n-range is LO:HI, LO:HI:STEP or a comma list")


def cmd_scan(args, w: Writer) -> int:
    res = crossover_scan(args.k, args.t, args.family, args.n_range, args.tol, args.cmp_tol)
    if args.format == "json":
        sys.stdout.write(json.dumps(res.to_dict(), sort_keys=True) + "\n")
    elif args.format == "plotdata":
        sys.stdout.write("# n rho_theorem\n")
        for r in res.rows:
            sys.stdout.write(f"{r.n} {r.rho_theorem!r}\n")
    else:
        for r in res.rows:
            w.emit(dict(vars(r)))
    return 0


def cmd_construct(args, w: Writer) -> int:
    if args.snla:
        n, l, a = (int(x) for x in args.snla.split(","))
        g = construct_snla(n, l, a)
    elif args.complete is not None:
        g = complete_graph(args.complete)
    elif args.empty is not None:
        g = empty_graph(args.empty)
    elif args.cycle is not None:
        g = cycle_graph(args.cycle)
    elif args.path is not None:
        g = path_graph(args.path)
    elif args.star is not None:
        g = star_graph(args.star)
    elif args.random:
        n, p = args.random.split(",")
        g = random_graph(int(n), float(p), random.Random(args.seed))
    else:
        raise CliqueRhoError("construct needs one of --snla/--complete/--empty/--cycle/--path/--star/--random")
    w.emit({"graph6": to_graph6(g), "n": g.n, "edges": g.num_edges})
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plotdata"), default="json")
    common.add_argument("--tol", type=float, default=EIGEN_TOL,
                        help="Collatz-Wielandt gap tolerance (default %(default)g)")
    common.add_argument("--cmp-tol", type=float, default=CMP_TOL,
                        help="tolerance for comparing rho values (default %(default)g)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--g6", action="append", help="graph6 input (repeatable); default stdin")

    p = argparse.ArgumentParser(prog="cliquerho", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, parents, help_):
        sp = sub.add_parser(name, parents=parents, help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("rho", cmd_rho, [common, graph_in], "t-clique spectral radius")
    sp.add_argument("--t", type=int, required=True)
    sp = add("cliques", cmd_cliques, [common, graph_in], "list or count t-cliques")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--count-only", action="store_true")
    sp = add("components", cmd_components, [common, graph_in], "t-clique connected components")
    sp.add_argument("--t", type=int, required=True)
    sp = add("shift", cmd_shift, [common, graph_in], "apply the shift G_{u->v}")
    sp.add_argument("--u", type=int, required=True)
    sp.add_argument("--v", type=int, required=True)
    sp = add("stabilize", cmd_stabilize, [common, graph_in], "shift until neighbourhoods nest")
    sp.add_argument("--jsonl", action="store_true", help="print the shift trace as JSON lines")
    add("classify", cmd_classify, [common, graph_in], "level of each connected component")
    sp = add("cycles", cmd_cycles, [common, graph_in], "circumference")
    sp.add_argument("--k", type=int)
    sp = add("paths", cmd_paths, [common, graph_in], "longest path order")
    sp.add_argument("--k", type=int)

    sp = add("search", cmd_search, [common], "maximise rho_t over family-free graphs")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--family", choices=("C", "P"), default="C")
    sp.add_argument("--catalog", help="graph6 catalog file instead of builtin enumeration")

    sp = add("verify", cmd_verify, [common], "exhaustively check a theorem")
    sp.add_argument("--theorem", choices=THEOREMS, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int)
    sp.add_argument("--catalog")

    sp = add("scan", cmd_scan, [common], "S-family crossover scan")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--family", choices=("C", "P"), default="C")
    sp.add_argument("--n-range", type=_parse_range, required=True,
                    help="LO:HI (dense, or log-spaced past 2000 values), LO:HI:STEP, or a,b,c")

    sp = add("construct", cmd_construct, [common], "build a named graph")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--snla", help="n,l,a for K_l v (K_a u I_{n-l-a})")
    group.add_argument("--complete", type=int)
    group.add_argument("--empty", type=int)
    group.add_argument("--cycle", type=int)
    group.add_argument("--path", type=int)
    group.add_argument("--star", type=int, help="number of leaves")
    group.add_argument("--random", help="n,p for G(n,p) drawn with --seed")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    writer = Writer("csv" if args.format in ("csv", "plotdata") else "json")
    try:
        return args.func(args, writer)
    except CliqueRhoError as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
