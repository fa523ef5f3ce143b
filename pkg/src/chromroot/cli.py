"""Command-line interface: ``chromroot <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 search budget exhausted.
"""

import argparse
import json
import os
import sys
import time

from chromroot.analysis import (ScanFilters, conjecture7_report, reproduce_table, roots_report,
                                scan_catalog, table_to_csv, verify_root_existence_argument,
                                verify_sign_theorem)
from chromroot.chromatic import chromatic_polynomial, chromatic_polynomial_by_interpolation
from chromroot.errors import BudgetExhausted, GraphError, VerificationError
from chromroot.families import (FamilySpec, build_family, derivative_at_two,
                                family_chromatic_polynomial, hub_types)
from chromroot.graph import (find_dong_koh_ordering, hamiltonian_cycle_exists,
                             independent_toughness_witness, is_bipartite, is_k_connected,
                             vertex_connectivity)
from chromroot.graph_io import parse_edge_list, parse_graph6
from chromroot.poly import as_rat

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_graph(spec, fmt=None):
    """Read a graph from a file path, ``-`` for stdin, or an inline graph6 string."""
    if spec == "-":
        text = sys.stdin.read()
    elif os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        if fmt is None:
            fmt = "graph6" if spec.endswith((".g6", ".graph6")) else "edgelist"
    else:
        if fmt == "edgelist":
            raise UsageError(f"no such file: {spec}")
        text, fmt = spec, "graph6"
    if fmt is None:
        fmt = "edgelist" if " " in text.strip().splitlines()[0] else "graph6"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise UsageError(f"expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _fmt_flag(args):
    if getattr(args, "graph6", False):
        return "graph6"
    if getattr(args, "edgelist", False):
        return "edgelist"
    return None


def _family(text):
    try:
        return FamilySpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(obj):
    print(json.dumps(obj, indent=None, sort_keys=False))


def cmd_poly(args):
    G = load_graph(args.graph, _fmt_flag(args))
    if args.engine == "dc":
        P = chromatic_polynomial(G)
    else:
        P = chromatic_polynomial_by_interpolation(G)
    _emit({"n": G.n, "m": G.m, "engine": args.engine,
           "polynomial": [str(c) for c in P.coeffs]})
    return EXIT_OK


def cmd_roots(args):
    if (args.graph is None) == (args.family is None):
        raise UsageError("give exactly one of a graph input or --family")
    source = _family(args.family) if args.family else load_graph(args.graph, _fmt_flag(args))
    report = roots_report(source, as_rat(args.lo), as_rat(args.hi), args.places)
    _emit(report.to_dict())
    return EXIT_OK


def cmd_table(args):
    values = tuple(range(args.min, args.max + 1, 2))
    table = reproduce_table(args.kind, values, values, args.places, jobs=args.jobs)
    if args.out == "csv":
        sys.stdout.write(table_to_csv(table, values, values))
    else:
        _emit({f"{s},{t}": v for (s, t), v in table.items()})
    return EXIT_FAIL if any(v is None for v in table.values()) else EXIT_OK


def cmd_verify(args):
    if args.what == "signs":
        if not args.graph and not args.family:
            raise UsageError("verify signs needs a graph input or --family")
        if args.family:
            spec = _family(args.family)
            G, P = build_family(spec), family_chromatic_polynomial(spec)
        else:
            G, P = load_graph(args.graph, _fmt_flag(args)), None
        report = verify_sign_theorem(G, P)
        _emit(report.to_dict())
        return EXIT_OK if report.passed else EXIT_FAIL
    if not args.family:
        raise UsageError(f"verify {args.what} needs --family")
    spec = _family(args.family)
    try:
        if args.what == "existence":
            ok, trace = verify_root_existence_argument(spec)
            _emit({"passed": ok, "trace": trace})
        else:
            symbolic, formula = derivative_at_two(spec)
            _emit({"passed": True, "family": str(spec), "value": symbolic, "formula": formula})
    except VerificationError as exc:
        _emit({"passed": False, "error": str(exc)})
        return EXIT_FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_check(args):
    G = load_graph(args.graph, _fmt_flag(args))
    out = {"n": G.n, "m": G.m}
    if args.connectivity is not None:
        out["k_connected"] = {"k": args.connectivity,
                              "value": is_k_connected(G, args.connectivity)}
        out["vertex_connectivity"] = vertex_connectivity(G)
    if args.bipartite:
        ok, witness = is_bipartite(G)
        out["bipartite"] = {"value": ok, ("colouring" if ok else "odd_cycle"): witness}
    if args.toughness:
        size = min(args.max_size, G.n)
        w = independent_toughness_witness(G, size)
        out["independent_toughness_witness"] = None if w is None else list(w)
    if args.dong_koh:
        order = find_dong_koh_ordering(G)
        out["dong_koh_ordering"] = order
    if args.hamiltonian:
        out["hamiltonian"] = hamiltonian_cycle_exists(G)
    if args.conjecture7:
        r = conjecture7_report(G, min(args.max_size, G.n), strict=False)
        out["conjecture7"] = {"has_root_in_12": r.has_root_in_12,
                              "witness": None if r.witness is None else list(r.witness),
                              "consistent": r.consistent}
        if not r.consistent:
            _emit(out)
            return EXIT_FAIL
    _emit(out)
    return EXIT_OK


def cmd_hub_types(args):
    for h in hub_types(args.kind):
        _emit({"blocks": [list(b) for b in h.blocks], "k": h.k, "dS": h.dS, "dT": h.dT})
    return EXIT_OK


def cmd_scan(args):
    try:
        lo, hi = (as_rat(v) for v in args.interval.split(","))
    except ValueError:
        raise UsageError(f"bad --interval {args.interval!r}; expected lo,hi") from None
    filters = ScanFilters(args.min_conn, args.non_bipartite, lo, hi, args.places)
    with open(args.catalog) as fh:
        for rec in scan_catalog(fh, filters, jobs=args.jobs):
            _emit(rec)
            sys.stdout.flush()
    return EXIT_OK


def _add_graph_format(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--graph6", action="store_true", help="input is graph6")
    g.add_argument("--edgelist", action="store_true", help="input is an edge list")


def build_parser():
    parser = argparse.ArgumentParser(prog="chromroot", description=__doc__.splitlines()[0])
    parser.add_argument("--timing", action="store_true", help="report wall time on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="chromatic polynomial of a graph")
    p.add_argument("graph")
    _add_graph_format(p)
    p.add_argument("--engine", choices=("dc", "interp"), default="dc")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("roots", help="real chromatic roots in an interval")
    p.add_argument("graph", nargs="?")
    _add_graph_format(p)
    p.add_argument("--family")
    p.add_argument("--lo", default="1")
    p.add_argument("--hi", default="2")
    p.add_argument("--places", type=int, default=4)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("table", help="reproduce the X/Y root tables")
    p.add_argument("--kind", choices=("X", "Y"), required=True)
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=19)
    p.add_argument("--places", type=int, default=4)
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="mechanical verification")
    p.add_argument("what", choices=("signs", "existence", "lemma3"))
    p.add_argument("graph", nargs="?")
    _add_graph_format(p)
    p.add_argument("--family")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="structural report")
    p.add_argument("--graph", required=True)
    _add_graph_format(p)
    p.add_argument("--connectivity", type=int)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--toughness", action="store_true")
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--dong-koh", action="store_true")
    p.add_argument("--hamiltonian", action="store_true")
    p.add_argument("--conjecture7", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("hub-types", help="list hub colouring types")
    p.add_argument("--kind", choices=("X", "Y"), required=True)
    p.set_defaults(func=cmd_hub_types)

    p = sub.add_parser("scan", help="scan a graph6 catalog for roots in an interval")
    p.add_argument("--catalog", required=True)
    p.add_argument("--min-conn", type=int, default=0)
    p.add_argument("--non-bipartite", action="store_true")
    p.add_argument("--interval", default="1,2")
    p.add_argument("--places", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        code = args.func(args)
    except UsageError as exc:
        print(f"chromroot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, OSError) as exc:
        print(f"chromroot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"chromroot: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.timing:
        print(f"elapsed: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
