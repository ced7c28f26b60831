"""Command-line entry point: ``lapdiam {spectrum,count,verify,family}``.

Exit codes: 0 clean, 1 usage error, 2 theorem violation, 3 corpus error,
4 conjecture counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import families
from .enumeration import BuiltinSource, CorpusError, CorpusItem, Graph6FileSource, RandomSource
from .graph import INFINITE, Graph, diameter
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .spectra import IntervalQuery, char_poly, count_interval_exact, parse_rational, spectrum_float
from .theorems import parse_ids, scan

EXIT_USAGE = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", metavar="SPEC", help="family specifier, e.g. g_ndt:7,3,2 or r1")
    p.add_argument("--graph6", metavar="STRING", help="a single graph in graph6")


def _resolve_single(args) -> Graph:
    given = [x for x in (args.family, args.graph6) if x is not None]
    if len(given) != 1:
        raise UsageError("exactly one of --family or --graph6 is required")
    try:
        if args.family is not None:
            return families.parse_family_spec(args.family).graph
        return parse_graph6(args.graph6)
    except (families.FamilyError, Graph6Error) as exc:
        raise UsageError(str(exc)) from None


def _fmt12(x: float, tol: float) -> float:
    if abs(x) <= tol:
        return 0.0
    return float(f"{x:.12g}")


def cmd_spectrum(args, out: TextIO) -> int:
    g = _resolve_single(args)
    spec = spectrum_float(g)
    d = diameter(g)
    doc = {
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
        "diameter": "infinite" if d is INFINITE else d,
        "spectrum": [_fmt12(x, spec.tolerance) for x in spec.values],
        "char_poly": [str(c) for c in char_poly(g).coeffs],
    }
    out.write(json.dumps(doc) + "\n")
    return 0


def cmd_count(args, out: TextIO) -> int:
    g = _resolve_single(args)
    try:
        q = IntervalQuery(parse_rational(args.lo), parse_rational(args.hi), not args.lo_open, not args.hi_open)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(json.dumps({"interval": q.to_json(), "count": count_interval_exact(g, q)}) + "\n")
    return 0


def cmd_family(args, out: TextIO) -> int:
    try:
        inst = families.build(args.name, families.parse_params(args.params or ""))
    except families.FamilyError as exc:
        raise UsageError(str(exc)) from None
    if args.emit == "graph6":
        out.write(write_graph6(inst.graph) + "\n")
    else:
        doc = {
            "family": inst.family,
            "params": list(inst.params),
            "n": inst.graph.n,
            "edges": [list(e) for e in inst.graph.edges()],
            "labels": inst.labels,
        }
        out.write(json.dumps(doc) + "\n")
    return 0


def _corpus(args):
    chosen = [name for name in ("builtin", "graph6_file", "random", "family", "graph6") if getattr(args, name) is not None]
    if len(chosen) != 1:
        raise UsageError("exactly one graph source is required: --builtin, --graph6-file, --random, --family or --graph6")
    try:
        if args.builtin is not None:
            return BuiltinSource(args.builtin, connected_only=not args.all_graphs).items()
        if args.graph6_file is not None:
            if not Path(args.graph6_file).is_file():
                raise UsageError(f"no such corpus file: {args.graph6_file}")
            return Graph6FileSource(Path(args.graph6_file)).items()
        if args.random is not None:
            parts = args.random.split(",")
            if len(parts) != 3:
                raise UsageError(f"--random expects n,p,count, got {args.random!r}")
            return RandomSource(int(parts[0]), float(parts[1]), int(parts[2]), args.seed).items()
    except (CorpusError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    g = _resolve_single(args)
    return iter([CorpusItem(0, g, write_graph6(g))])


def cmd_verify(args, out: TextIO) -> int:
    try:
        ids = parse_ids(args.checks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    corpus = _corpus(args)

    report = open(args.out, "w", encoding="ascii", newline="\n") if args.out else out
    try:
        def sink(r):
            report.write(json.dumps(r.to_json(), ensure_ascii=True) + "\n")

        summary = scan(corpus, ids, sink, jobs=args.jobs, path_cap=args.path_cap)
    finally:
        if args.out:
            report.close()
    summary_text = json.dumps(summary.to_json(), ensure_ascii=True) + "\n"
    if args.summary:
        Path(args.summary).write_text(summary_text, encoding="ascii")
    else:
        (out if args.out else sys.stderr).write(summary_text)
    return summary.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lapdiam", description="Laplacian eigenvalue distribution vs diameter: spectra, exact counts, bound verification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="float spectrum and exact characteristic polynomial")
    _add_graph_source(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("count", help="exact number of eigenvalues in an interval")
    _add_graph_source(p)
    p.add_argument("--lo", required=True, help="lower endpoint, integer or p/q")
    p.add_argument("--hi", required=True, help="upper endpoint, integer or p/q")
    p.add_argument("--lo-open", action="store_true")
    p.add_argument("--hi-open", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check theorems and the conjecture on a corpus")
    _add_graph_source(p)
    p.add_argument("--builtin", type=int, metavar="N", help="all connected graphs of order N (N ≤ 7)")
    p.add_argument("--all-graphs", action="store_true", help="with --builtin, include disconnected graphs")
    p.add_argument("--graph6-file", metavar="PATH")
    p.add_argument("--random", metavar="N,P,COUNT", help="COUNT random connected G(N,P) graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", default="all", help="comma list of check ids, or 'all'")
    p.add_argument("--out", metavar="PATH", help="JSONL report file (default: stdout)")
    p.add_argument("--summary", metavar="PATH", help="summary JSON file (default: stdout with --out, else stderr)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--path-cap", type=int, default=10_000, help="maximum diametral paths enumerated per graph")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="construct a named graph")
    p.add_argument("--name", required=True, choices=sorted(families.FAMILIES))
    p.add_argument("--params", default="", help="comma-separated integer parameters")
    p.add_argument("--emit", choices=("edges", "graph6"), default="edges")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out or sys.stdout)
    except UsageError as exc:
        print(f"lapdiam {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
