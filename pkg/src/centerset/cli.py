"""Command-line entry point.

Exit codes: 0 success, 1 a verification found a mathematical disagreement,
2 bad usage or input. JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import codec
from .constructions import validate_witness, witness
from .errors import GraphError, OrderTooLarge
from .graph import Graph
from .metrics import metric_profile
from .omega import omega_contains, omega_set, ratio_witness
from .search import (
    corpus_scan,
    cycle_excess,
    enumerate_labeled,
    is_bridge,
    reduce_to_bridges,
    scan_lemma2,
    scan_lemma3,
    unique_in_corpus,
    unique_up_to_iso,
)
from .search.enumeration import MAX_ENUMERATION_ORDER, default_jobs

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(value: object) -> None:
    codec.write_report(value, sys.stdout)


def _read_graph(source: str, fmt: str) -> Graph:
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source) as fh:
            text = fh.read()
    return codec.read_graph_text(text, fmt)


def _jobs(args: argparse.Namespace) -> int:
    return args.jobs if args.jobs is not None else default_jobs()


def cmd_omega(args: argparse.Namespace) -> int:
    _emit(omega_set(args.n, args.r))
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    g, recipe = witness(args.n, args.r, args.s)
    report = validate_witness(g, args.n, args.r, args.s)
    if args.format == "graph6":
        print(codec.graph6_encode(g))
    elif args.format == "dot":
        sys.stdout.write(codec.dot_export(g, metric_profile(g).center))
    elif args.format == "edges":
        sys.stdout.write(codec.edge_list_export(g))
    else:
        _emit({"recipe": recipe, "graph": g, "validation": report})
    if not report.ok:
        print(f"witness failed validation: {codec.report_json(report)}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    prof = metric_profile(g)
    _emit({"order": g.order, "edge_count": g.edge_count, "center_size": len(prof.center), "profile": prof})
    return EXIT_OK


def _check_enumeration_order(n: int, hint: str) -> None:
    if n > MAX_ENUMERATION_ORDER:
        raise OrderTooLarge(f"n={n} exceeds the exhaustive cap {MAX_ENUMERATION_ORDER}; {hint}")


def cmd_verify(args: argparse.Namespace) -> int:
    last = args.max_n if args.max_n is not None else args.n
    if args.n < 3 or last < args.n:
        raise UsageError("need 3 <= n <= max-n")
    _check_enumeration_order(last, "use `corpus --file FILE` with an external graph6 catalog")
    results = []
    agree = True
    for n in range(args.n, last + 1):
        summary = enumerate_labeled(n, _jobs(args))
        observed = summary.observed()
        mismatches = []
        for r in range(1, n // 2 + 1):
            expected = omega_set(n, r)
            seen = observed.get(r, [])
            if seen != expected:
                mismatches.append({"r": r, "expected": expected, "observed": seen})
        agree = agree and not mismatches
        results.append({"n": n, "summary": summary, "observed": observed, "mismatches": mismatches})
        print(f"n={n}: {'agrees' if not mismatches else 'DISAGREES'} with the closed form", file=sys.stderr)
    _emit(results)
    return EXIT_OK if agree else EXIT_VIOLATION


def _uniqueness_claimed(n: int, r: int, s: int) -> bool:
    return 8 * r >= 3 * n + 2 and 2 * r < n and s == 6 * r - 2 * n + 1


def cmd_unique(args: argparse.Namespace) -> int:
    n, r, s = args.n, args.r, args.s
    if not omega_contains(n, r, s):
        raise UsageError(f"s={s} is not an achievable center size for n={n}, r={r}")
    reference, recipe = witness(n, r, s)
    if args.corpus:
        with open(args.corpus) as fh:
            report = unique_in_corpus(fh, r, s, reference)
        if report.n != n:
            raise UsageError(f"corpus has order {report.n}, expected {n}")
    else:
        _check_enumeration_order(n, "pass --corpus FILE with a graph6 catalog of that order")
        report = unique_up_to_iso(n, r, s, reference, _jobs(args))
    claimed = _uniqueness_claimed(n, r, s)
    _emit({"report": report, "reference_recipe": recipe, "uniqueness_claimed": claimed})
    if claimed and not report.is_unique:
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_lemmas(args: argparse.Namespace) -> int:
    _check_enumeration_order(args.n, "exhaustive lemma checks stop there")
    scan = scan_lemma2 if args.check == "induced-path" else scan_lemma3
    report = scan(args.n, _jobs(args))
    _emit(report)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_ratio(args: argparse.Namespace) -> int:
    g = ratio_witness(args.a, args.b)
    prof = metric_profile(g)
    ok = prof.central_ratio == Fraction(args.a, args.b)
    _emit({"order": g.order, "center_size": len(prof.center), "central_ratio": prof.central_ratio,
           "target": Fraction(args.a, args.b), "matches": ok, "graph": g})
    return EXIT_OK if ok else EXIT_VIOLATION


def _parse_cycle(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"--cycle must be comma-separated integers, got {text!r}") from None


def cmd_reduce(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    cyc = _parse_cycle(args.cycle)
    reduced, report = reduce_to_bridges(g, cyc)
    rad_before = metric_profile(g).radius
    rad_after = metric_profile(reduced).radius
    bridges = all(is_bridge(reduced, u, v) for u, v in report.cut_edges)
    out = {
        "graph": reduced,
        "report": report,
        "radius_before": rad_before,
        "radius_after": rad_after,
        "all_leaving_edges_are_bridges": bridges,
    }
    if len(cyc) == 2 * rad_before:
        out["cycle_vertices_above_radius"] = cycle_excess(reduced, cyc, rad_before)
    _emit(out)
    return EXIT_OK if bridges and rad_after >= rad_before else EXIT_VIOLATION


def cmd_corpus(args: argparse.Namespace) -> int:
    with open(args.file) as fh:
        summary, _ = corpus_scan(fh)
    n = summary.n
    if n < 3:
        raise UsageError("corpus must contain graphs of order at least 3")
    observed = summary.observed()
    problems = []
    for r in range(1, n // 2 + 1):
        expected = omega_set(n, r)
        seen = observed.get(r, [])
        extra = sorted(set(seen) - set(expected))
        missing = sorted(set(expected) - set(seen)) if args.complete else []
        if extra or missing:
            problems.append({"r": r, "outside_formula": extra, "missing": missing})
    _emit({"summary": summary, "observed": observed, "problems": problems})
    return EXIT_OK if not problems else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="centerset", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def jobs_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--jobs", type=int, default=None,
                       help="worker processes (default: $CENTERSET_JOBS or CPU count)")

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-", help="graph file (default: stdin)")
        p.add_argument("--format", choices=["auto", "graph6", "edges"], default="auto")

    p = sub.add_parser("omega", help="achievable center sizes for order n and radius r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("witness", help="construct a graph with given order, radius and center size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--format", choices=["graph6", "dot", "edges", "json"], default="json")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("analyze", help="metric profile of a graph")
    graph_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="compare exhaustive enumeration with the closed form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, default=None)
    jobs_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("unique", help="is every graph with (n, r, s) isomorphic to the witness?")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--corpus", default=None, help="graph6 catalog of order n")
    jobs_flag(p)
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("lemmas", help="exhaustively check the induced-path or geodesic-cycle lemma")
    p.add_argument("--check", choices=["induced-path", "geodesic-cycle"], required=True)
    p.add_argument("--n", type=int, required=True)
    jobs_flag(p)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("ratio", help="graph with central ratio a/b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("reduce", help="make every edge leaving an induced cycle a bridge")
    graph_input(p)
    p.add_argument("--cycle", required=True, help="cycle vertices in order, e.g. 0,1,2,3")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("corpus", help="tabulate a graph6 catalog against the closed form")
    p.add_argument("--file", required=True)
    p.add_argument("--complete", action="store_true",
                   help="the catalog contains every connected graph of its order")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, UsageError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
