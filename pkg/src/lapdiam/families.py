"""Named graph families with their distinguished-vertex labels.

Numbering convention: path vertices first (``u1 -> 0``, ``u2 -> 1``, ...),
then clique vertices (the first class before the second where the clique is
split), then any appended vertices, with ``v`` last.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Optional

from .graph import Graph, complement, new_graph


class FamilyError(ValueError):
    """Bad family name, malformed specifier, or parameters outside the legal range."""


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    family: str
    params: tuple[int, ...]
    labels: dict[str, int] = field(default_factory=dict, compare=False, hash=False)
    declared_diameter: Optional[int] = None

    @property
    def spec(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:{','.join(map(str, self.params))}"


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise FamilyError(message)


def _path_labels(length: int) -> dict[str, int]:
    return {f"u{i + 1}": i for i in range(length)}


def path(n: int) -> FamilyInstance:
    _require(n >= 1, "path requires n ≥ 1")
    g = new_graph(n, [(i, i + 1) for i in range(n - 1)])
    return FamilyInstance(g, "path", (n,), _path_labels(n), n - 1)


def complete(n: int) -> FamilyInstance:
    _require(n >= 1, "complete requires n ≥ 1")
    g = new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    return FamilyInstance(g, "complete", (n,), {}, 0 if n == 1 else 1)


def cycle(n: int) -> FamilyInstance:
    _require(n >= 3, "cycle requires n ≥ 3")
    g = new_graph(n, [(i, (i + 1) % n) for i in range(n)])
    return FamilyInstance(g, "cycle", (n,), {}, n // 2)


def complete_minus_edge(n: int) -> FamilyInstance:
    """``K_n`` without the edge ``(0, 1)``."""
    _require(n >= 2, "complete_minus_edge requires n ≥ 2")
    g = new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, 1)])
    return FamilyInstance(g, "complete_minus_edge", (n,), {"x": 0, "y": 1}, None if n == 2 else 2)


def _path_plus_clique(n: int, d: int, attach: list[tuple[int, ...]]) -> list[tuple[int, int]]:
    """Edges of ``P_{d+1}`` plus a clique of size ``n-d-1``.

    ``attach[k]`` lists the 1-based path positions joined to clique vertex ``k``.
    """
    edges = [(i, i + 1) for i in range(d)]
    clique = list(range(d + 1, n))
    edges += [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    for w, positions in zip(clique, attach):
        edges += [(i - 1, w) for i in positions]
    return edges


def g_ndt(n: int, d: int, t: int) -> FamilyInstance:
    """Path ``u1..u_{d+1}`` and ``K_{n-d-1}``, every clique vertex joined to ``u_{t-1}, u_t, u_{t+1}``."""
    _require(2 <= d <= n - 2, f"g_ndt requires 2 ≤ d ≤ n−2 (got n={n}, d={d})")
    _require(2 <= t <= d, f"g_ndt requires 2 ≤ t ≤ d (got t={t}, d={d})")
    size = n - d - 1
    g = new_graph(n, _path_plus_clique(n, d, [(t - 1, t, t + 1)] * size))
    labels = _path_labels(d + 1)
    labels.update({f"clique_{k}": d + 1 + k for k in range(size)})
    return FamilyInstance(g, "g_ndt", (n, d, t), labels, d)


def g_ndra(n: int, d: int, r: int, a: int) -> FamilyInstance:
    """Like :func:`g_ndt`, but ``a`` clique vertices attach at ``r-1..r+1`` and the rest at ``r..r+2``."""
    _require(3 <= d <= n - 2, f"g_ndra requires 3 ≤ d ≤ n−2 (got n={n}, d={d})")
    _require(2 <= r <= d - 1, f"g_ndra requires 2 ≤ r ≤ d−1 (got r={r}, d={d})")
    _require(1 <= a <= n - d - 2, f"g_ndra requires 1 ≤ a ≤ n−d−2 (got a={a}, n−d−2={n - d - 2})")
    size = n - d - 1
    attach = [(r - 1, r, r + 1)] * a + [(r, r + 1, r + 2)] * (size - a)
    g = new_graph(n, _path_plus_clique(n, d, attach))
    labels = _path_labels(d + 1)
    labels.update({f"V1_{k}": d + 1 + k for k in range(a)})
    labels.update({f"V2_{k}": d + 1 + a + k for k in range(size - a)})
    return FamilyInstance(g, "g_ndra", (n, d, r, a), labels, d)


def h_npq(n: int, p: int, q: int) -> FamilyInstance:
    """``g_ndt(n-1, n-3, p)`` (clique vertex ``u``) plus ``v`` joined to ``u_{q-1}, u_q, u_{q+1}``.

    ``v`` is also joined to ``u`` when ``q`` is ``p`` or ``p+1``.
    """
    _require(2 <= p <= q <= n - 3, f"h_npq requires 2 ≤ p ≤ q ≤ n−3 (got n={n}, p={p}, q={q})")
    base = g_ndt(n - 1, n - 3, p)
    labels = {k: v for k, v in base.labels.items() if k.startswith("u")}
    labels["u"] = base.labels["clique_0"]
    labels["v"] = v = n - 1
    edges = list(base.graph.edges())
    edges += [(labels[f"u{i}"], v) for i in (q - 1, q, q + 1)]
    if q in (p, p + 1):
        edges.append((labels["u"], v))
    return FamilyInstance(new_graph(n, edges), "h_npq", (n, p, q), labels, n - 3)


def r1() -> FamilyInstance:
    """Two 4-cycles joined by a bridge (n=8, diameter 5)."""
    edges = [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (5, 7), (6, 8), (7, 8)]
    g = new_graph(8, [(i - 1, j - 1) for i, j in edges])
    return FamilyInstance(g, "r1", (), {f"v{i}": i - 1 for i in range(1, 9)}, 5)


def r2() -> FamilyInstance:
    """A triangle with a pendant path of five vertices through one corner (n=7, diameter 5)."""
    edges = [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
    g = new_graph(7, [(i - 1, j - 1) for i, j in edges])
    return FamilyInstance(g, "r2", (), {f"v{i}": i - 1 for i in range(1, 8)}, 5)


def h0() -> FamilyInstance:
    g = complement(path(5).graph)
    return FamilyInstance(g, "h0", (), {f"v{i}": i - 1 for i in range(1, 6)}, 2)


FAMILIES: dict[str, tuple[int, Callable[..., FamilyInstance]]] = {
    "path": (1, path),
    "complete": (1, complete),
    "cycle": (1, cycle),
    "complete_minus_edge": (1, complete_minus_edge),
    "g_ndt": (3, g_ndt),
    "g_ndra": (4, g_ndra),
    "h_npq": (3, h_npq),
    "h0": (0, h0),
    "r1": (0, r1),
    "r2": (0, r2),
}

_INT_RE = re.compile(r"^[+-]?\d+$")


def build(name: str, params: tuple[int, ...] = ()) -> FamilyInstance:
    if name not in FAMILIES:
        raise FamilyError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    arity, ctor = FAMILIES[name]
    if len(params) != arity:
        raise FamilyError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


def parse_params(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    out = []
    for token in text.split(","):
        token = token.strip()
        if not _INT_RE.match(token):
            raise FamilyError(f"bad parameter token {token!r}: expected an integer")
        out.append(int(token))
    return tuple(out)


def parse_family_spec(spec: str) -> FamilyInstance:
    """Build an instance from ``name`` or ``name:p1,p2,...`` (e.g. ``g_ndt:7,3,2``)."""
    name, _, rest = spec.strip().partition(":")
    name = name.strip()
    if name not in FAMILIES:
        raise FamilyError(f"unknown family {name!r} in specifier {spec!r}")
    if _ and not rest.strip():
        raise FamilyError(f"empty parameter list in specifier {spec!r}")
    return build(name, parse_params(rest))
