"""Checkable eigenvalue-distribution bounds in terms of order ``n`` and diameter ``d``.

Every verdict is derived from exact eigenvalue counts; floats never decide
whether a bound holds. A check that does not apply to a graph is a normal
outcome (``applicable=False`` plus a reason), not an error.
"""

from __future__ import annotations

import enum
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from . import families
from .enumeration import CorpusItem
from .graph import Graph, canonical_form, diameter, find_diametral_paths, is_connected
from .graph6 import write_graph6
from .spectra import IntervalQuery, spectral_counter

DEFAULT_PATH_CAP = 10_000


class TheoremId(str, enum.Enum):
    T1_1 = "T1_1"
    T1_2 = "T1_2"
    T1_3 = "T1_3"
    T1_4 = "T1_4"
    T1_5 = "T1_5"
    T3_3 = "T3_3"
    L2_6 = "L2_6"
    TRIV_A = "TRIV_A"
    TRIV_B = "TRIV_B"
    CONJ = "CONJ"


THEOREMS = tuple(t for t in TheoremId if t is not TheoremId.CONJ)


def parse_ids(text: str) -> list[TheoremId]:
    """Comma-separated ids, or ``all`` for every theorem plus the conjecture."""
    if text.strip() == "all":
        return list(TheoremId)
    out = []
    for token in text.split(","):
        token = token.strip()
        try:
            out.append(TheoremId(token))
        except ValueError:
            valid = ", ".join(t.value for t in TheoremId)
            raise ValueError(f"unknown check {token!r}; valid names: {valid}, all") from None
    return out


@dataclass(frozen=True)
class CheckReport:
    graph_id: str
    n: int
    d: Optional[int]
    theorem: TheoremId
    applicable: bool
    reason: str = ""
    interval: Optional[IntervalQuery] = None
    count: Optional[int] = None
    bound: Optional[int] = None
    holds: Optional[bool] = None
    tight: Optional[bool] = None
    clause: Optional[str] = None
    c: Optional[int] = None
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        out = {
            "graph6": self.graph_id,
            "n": self.n,
            "d": self.d,
            "theorem": self.theorem.value,
            "applicable": self.applicable,
            "reason": self.reason,
            "interval": self.interval.to_json() if self.interval else None,
            "count": self.count,
            "bound": self.bound,
            "holds": self.holds,
            "tight": self.tight,
            "witness": self.witness,
        }
        if self.clause is not None:
            out["clause"] = self.clause
        if self.c is not None:
            out["c"] = self.c
        return out


class _Facts:
    """Per-graph quantities shared by all checks on that graph."""

    def __init__(self, g: Graph, graph_id: Optional[str] = None, path_cap: int = DEFAULT_PATH_CAP):
        self.g = g
        self.n = g.n
        self.graph_id = graph_id if graph_id is not None else write_graph6(g)
        self.connected = is_connected(g)
        self.d = diameter(g) if self.connected else None
        self.path_cap = path_cap

    @property
    def counter(self):
        return spectral_counter(self.g)

    def skip(self, tid: TheoremId, reason: str) -> CheckReport:
        return CheckReport(self.graph_id, self.n, self.d, tid, False, reason)

    def verdict(self, tid: TheoremId, interval: IntervalQuery, bound: int, **extra) -> CheckReport:
        count = self.counter.count(interval)
        holds = count <= bound
        return CheckReport(
            self.graph_id, self.n, self.d, tid, True, "",
            interval, count, bound, holds, holds and count == bound, **extra,
        )


def _upper(lo: int, n: int, lo_closed: bool = True) -> IntervalQuery:
    return IntervalQuery(Fraction(lo), Fraction(n), lo_closed, True)


def _range_gate(f: _Facts, tid: TheoremId, lo: int, hi: int, label: str) -> Optional[CheckReport]:
    if not f.connected:
        return f.skip(tid, "graph is disconnected")
    if not lo <= f.d <= hi:
        return f.skip(tid, f"requires {label} (n={f.n}, d={f.d})")
    return None


def _check_t1_1(f: _Facts) -> CheckReport:
    tid = TheoremId.T1_1
    if not f.connected:
        return f.skip(tid, "graph is disconnected")
    if f.d < 4:
        return f.skip(tid, f"requires d ≥ 4 (d={f.d})")
    n, d = f.n, f.d
    return f.verdict(tid, _upper(n - d + 3, n, lo_closed=False), n - d - 1)


def _check_t1_2(f: _Facts) -> CheckReport:
    tid = TheoremId.T1_2
    skip = _range_gate(f, tid, 2, f.n - 2, "2 ≤ d ≤ n−2")
    if skip:
        return skip
    n, d = f.n, f.d
    return f.verdict(tid, _upper(n - d + 2, n), n - d)


def _check_t1_3(f: _Facts) -> CheckReport:
    tid = TheoremId.T1_3
    skip = _range_gate(f, tid, 1, f.n - 3, "1 ≤ d ≤ n−3")
    if skip:
        return skip
    n, d = f.n, f.d
    return f.verdict(tid, _upper(n - d + 1, n), n - d + 1)


def _check_t1_4(f: _Facts) -> CheckReport:
    tid = TheoremId.T1_4
    skip = _range_gate(f, tid, 2, f.n - 4, "2 ≤ d ≤ n−4")
    if skip:
        return skip
    n, d = f.n, f.d
    if d <= 4:
        return f.verdict(tid, _upper(n - d, n), n - d + 1, clause="d in {2,3,4}")
    return f.verdict(tid, _upper(n - d, n), n - d + 2, clause="d ≥ 5")


def _check_t1_5(f: _Facts) -> CheckReport:
    tid = TheoremId.T1_5
    skip = _range_gate(f, tid, 2, (f.n + 3) // 2, "2 ≤ d ≤ ⌊(n+3)/2⌋")
    if skip:
        return skip
    n, d = f.n, f.d
    if 3 <= d <= (n + 1) // 2:
        return f.verdict(tid, _upper(n - 2 * d + 4, n), n - 3, clause="3 ≤ d ≤ ⌊(n+1)/2⌋: bound n−3")
    return f.verdict(tid, _upper(n - 2 * d + 4, n), n - 2, clause="2 ≤ d ≤ ⌊(n+3)/2⌋: bound n−2")


def _check_triv_a(f: _Facts) -> CheckReport:
    tid = TheoremId.TRIV_A
    skip = _range_gate(f, tid, 2, (f.n - 1) // 2, "2 ≤ d ≤ ⌊(n−1)/2⌋")
    if skip:
        return skip
    n, d = f.n, f.d
    return f.verdict(tid, _upper(n - 2 * d + 3, n), n - 1)


def _check_triv_b(f: _Facts) -> CheckReport:
    tid = TheoremId.TRIV_B
    skip = _range_gate(f, tid, 2, (f.n - 2) // 2, "2 ≤ d ≤ ⌊(n−2)/2⌋")
    if skip:
        return skip
    n, d = f.n, f.d
    return f.verdict(tid, _upper(n - 2 * d + 2, n), n)


def find_disjoint_triple(g: Graph, path_cap: int = DEFAULT_PATH_CAP) -> tuple[Optional[dict], bool]:
    """Search diametral paths for three outside vertices with pairwise-disjoint path neighbours.

    Returns ``(witness, truncated)``; ``witness`` is ``None`` when no path
    examined admits such a triple.
    """
    paths, truncated = find_diametral_paths(g, path_cap)
    for p in paths:
        on = p.vertex_mask()
        outside = [z for z in range(g.n) if not on >> z & 1]
        masks = {z: g.adj[z] & on for z in outside}
        for a, b, c in combinations(outside, 3):
            if masks[a] & masks[b] or masks[a] & masks[c] or masks[b] & masks[c]:
                continue
            gammas = [sorted(v for v in p.vertices if masks[z] >> v & 1) for z in (a, b, c)]
            return {"path": list(p.vertices), "vertices": [a, b, c], "gammas": gammas}, truncated
    return None, truncated


def _check_t3_3(f: _Facts) -> CheckReport:
    tid = TheoremId.T3_3
    if not f.connected:
        return f.skip(tid, "graph is disconnected")
    if f.d > f.n - 5:
        return f.skip(tid, f"requires d ≤ n−5 (n={f.n}, d={f.d})")
    witness, truncated = find_disjoint_triple(f.g, f.path_cap)
    if witness is None:
        if truncated:
            return f.skip(tid, f"hypothesis not established: no witness within the first {f.path_cap} diametral paths")
        return f.skip(tid, "hypothesis false: no diametral path has three outside vertices with disjoint path neighbours")
    n, d = f.n, f.d
    return f.verdict(tid, _upper(n - d, n), n - d + 1, witness=witness)


@lru_cache(maxsize=None)
def extremal_family_forms(n: int, d: int) -> dict[bytes, str]:
    """Canonical forms of every ``g_ndt(n,d,t)`` and ``g_ndra(n,d,r,a)`` instance."""
    out: dict[bytes, str] = {}
    if not 2 <= d <= n - 2:
        return out
    for t in range(2, d + 1):
        inst = families.g_ndt(n, d, t)
        out.setdefault(canonical_form(inst.graph), inst.spec)
    if d >= 3:
        for r in range(2, d):
            for a in range(1, n - d - 1):
                inst = families.g_ndra(n, d, r, a)
                out.setdefault(canonical_form(inst.graph), inst.spec)
    return out


def extremal_family_match(g: Graph, d: int) -> Optional[str]:
    """Family specifier of the extremal graph isomorphic to ``g``, if any."""
    n = g.n
    if not 2 <= d <= n - 2:
        return None
    k = n - d - 1
    if g.num_edges != d + k * (k - 1) // 2 + 3 * k:
        return None
    return extremal_family_forms(n, d).get(canonical_form(g))


def _check_l2_6(f: _Facts) -> CheckReport:
    tid = TheoremId.L2_6
    skip = _range_gate(f, tid, 2, f.n - 2, "2 ≤ d ≤ n−2")
    if skip:
        return skip
    match = extremal_family_match(f.g, f.d)
    if match is not None:
        return f.skip(tid, f"isomorphic to excluded family {match}")
    n, d = f.n, f.d
    return f.verdict(tid, _upper(n - d + 2, n), n - d - 1)


_CHECKS: dict[TheoremId, Callable[[_Facts], CheckReport]] = {
    TheoremId.T1_1: _check_t1_1,
    TheoremId.T1_2: _check_t1_2,
    TheoremId.T1_3: _check_t1_3,
    TheoremId.T1_4: _check_t1_4,
    TheoremId.T1_5: _check_t1_5,
    TheoremId.T3_3: _check_t3_3,
    TheoremId.L2_6: _check_l2_6,
    TheoremId.TRIV_A: _check_triv_a,
    TheoremId.TRIV_B: _check_triv_b,
}


def check(g: Graph, tid: TheoremId, graph_id: Optional[str] = None, path_cap: int = DEFAULT_PATH_CAP) -> CheckReport:
    tid = TheoremId(tid)
    if tid is TheoremId.CONJ:
        raise ValueError("the conjecture yields one row per c; use check_conjecture")
    return _CHECKS[tid](_Facts(g, graph_id, path_cap))


def conjecture_parameters(n: int, d: int) -> list[int]:
    """Values of ``c`` with ``0 <= c <= d-2`` and ``max(2, c) <= d <= n-2-c``."""
    return [c for c in range(0, d - 1) if max(2, c) <= d <= n - 2 - c]


def _conjecture_rows(f: _Facts) -> list[CheckReport]:
    tid = TheoremId.CONJ
    if not f.connected or f.d < 2:
        return []
    n, d = f.n, f.d
    return [f.verdict(tid, _upper(n - d + 2 - c, n), n - d + c, c=c) for c in conjecture_parameters(n, d)]


def check_conjecture(g: Graph, graph_id: Optional[str] = None) -> list[CheckReport]:
    """One row per qualifying ``c``: ``m[n-d+2-c, n] <= n-d+c``; empty if none qualify."""
    return _conjecture_rows(_Facts(g, graph_id))


def check_graph(g: Graph, ids: Sequence[TheoremId], graph_id: Optional[str] = None,
                path_cap: int = DEFAULT_PATH_CAP) -> list[CheckReport]:
    """All requested checks on one graph; the conjecture contributes one report per ``c``."""
    f = _Facts(g, graph_id, path_cap)
    out = []
    for tid in ids:
        if tid is TheoremId.CONJ:
            rows = _conjecture_rows(f)
            out.extend(rows or [f.skip(tid, "no qualifying c (needs connected, d ≥ 2, max{2,c} ≤ d ≤ n−2−c)")])
        else:
            out.append(_CHECKS[tid](f))
    return out


# Scanning


@dataclass
class TheoremTally:
    checked: int = 0
    applicable: int = 0
    holds: int = 0
    tight: int = 0
    violations: int = 0

    def add(self, r: CheckReport) -> None:
        self.checked += 1
        if r.applicable:
            self.applicable += 1
            self.holds += bool(r.holds)
            self.tight += bool(r.tight)
            self.violations += not r.holds


EXIT_OK = 0
EXIT_THEOREM_VIOLATION = 2
EXIT_CORPUS_ERROR = 3
EXIT_CONJECTURE_COUNTEREXAMPLE = 4


@dataclass
class ScanSummary:
    ids: list[TheoremId]
    graphs: int = 0
    tallies: dict[TheoremId, TheoremTally] = field(default_factory=dict)
    violations: list[tuple[bytes, str, str]] = field(default_factory=list)
    tight: list[tuple[bytes, str, str]] = field(default_factory=list)
    counterexamples: list[tuple[bytes, str, int]] = field(default_factory=list)
    corpus_errors: list[tuple[int, str, str]] = field(default_factory=list)
    aborted: bool = False

    def __post_init__(self) -> None:
        for tid in self.ids:
            self.tallies.setdefault(tid, TheoremTally())

    @property
    def exit_code(self) -> int:
        if self.violations:
            return EXIT_THEOREM_VIOLATION
        if self.counterexamples:
            return EXIT_CONJECTURE_COUNTEREXAMPLE
        if self.corpus_errors:
            return EXIT_CORPUS_ERROR
        return EXIT_OK

    def to_json(self) -> dict:
        def by_theorem(entries):
            out: dict[str, list[str]] = {}
            for _, tid, g6 in sorted(entries, key=lambda e: (e[1], e[0])):
                out.setdefault(tid, []).append(g6)
            return out

        return {
            "graphs": self.graphs,
            "checks": [t.value for t in self.ids],
            "per_theorem": {t.value: vars(self.tallies[t]) for t in self.ids},
            "violations": by_theorem(self.violations),
            "tight": by_theorem(self.tight),
            "conjecture_counterexamples": [
                {"graph6": g6, "c": c} for _, g6, c in sorted(self.counterexamples)
            ],
            "corpus_errors": [{"line": line, "text": text, "error": err} for line, text, err in self.corpus_errors],
            "aborted": self.aborted,
            "exit_code": self.exit_code,
        }


@dataclass(frozen=True)
class _Outcome:
    item: CorpusItem
    reports: list[CheckReport]
    key: Optional[bytes]


def _evaluate(args: tuple[CorpusItem, tuple[TheoremId, ...], int]) -> _Outcome:
    item, ids, cap = args
    if item.graph is None:
        return _Outcome(item, [], None)
    reports = check_graph(item.graph, ids, item.graph6, cap)
    notable = any(r.applicable and (r.tight or not r.holds) for r in reports)
    return _Outcome(item, reports, canonical_form(item.graph) if notable else None)


def scan(
    corpus: Iterable[CorpusItem],
    ids: Sequence[TheoremId],
    sink: Optional[Callable[[CheckReport], None]] = None,
    jobs: int = 1,
    path_cap: int = DEFAULT_PATH_CAP,
    abort_on_counterexample: bool = True,
) -> ScanSummary:
    """Run ``ids`` on every corpus graph; reports reach ``sink`` in corpus order.

    The summary does not depend on ``jobs``: outcomes are consumed in corpus
    order and witness lists are sorted by canonical form. A conjecture
    counterexample stops the scan after the graph that produced it.
    """
    ids = list(dict.fromkeys(TheoremId(t) for t in ids))
    summary = ScanSummary(ids)
    work = ((item, tuple(ids), path_cap) for item in corpus)
    if jobs > 1:
        pool = ProcessPoolExecutor(max_workers=jobs)
        outcomes = pool.map(_evaluate, work, chunksize=16)
    else:
        pool = None
        outcomes = map(_evaluate, work)
    try:
        for out in outcomes:
            item = out.item
            if item.graph is None:
                summary.corpus_errors.append((item.line or 0, item.graph6, item.error or ""))
                print(f"corpus error (line {item.line}): {item.error}", file=sys.stderr)
                continue
            summary.graphs += 1
            found = False
            for r in out.reports:
                summary.tallies[r.theorem].add(r)
                if sink is not None:
                    sink(r)
                if not r.applicable:
                    continue
                if r.theorem is TheoremId.CONJ:
                    if not r.holds:
                        summary.counterexamples.append((out.key, item.graph6, r.c))
                        found = True
                    continue
                if not r.holds:
                    summary.violations.append((out.key, r.theorem.value, item.graph6))
                elif r.tight:
                    summary.tight.append((out.key, r.theorem.value, item.graph6))
            if found:
                print(f"CONJECTURE COUNTEREXAMPLE: {item.graph6}", file=sys.stderr)
                if abort_on_counterexample:
                    summary.aborted = True
                    break
    finally:
        if pool is not None:
            pool.shutdown(wait=True, cancel_futures=True)
    return summary
