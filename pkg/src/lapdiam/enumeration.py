"""Graph corpora: exhaustive small orders, seeded random graphs, graph6 files."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Optional, Union

import numpy as np

from .graph import Graph, canonical_form, canonical_relabeling, is_connected, new_graph
from .graph6 import HEADER, Graph6Error, parse_graph6, read_graph6_lines, write_graph6

MAX_BUILTIN_ORDER = 7
MAX_REJECTIONS = 10_000


class CorpusError(ValueError):
    pass


@lru_cache(maxsize=None)
def _classes(n: int, connected_only: bool) -> tuple[Graph, ...]:
    """Canonical representatives of all (connected) graphs of order ``n``.

    Every graph on n vertices arises from one on n-1 vertices by adding a
    vertex with some neighbourhood; every connected graph has a non-cut
    vertex, so connected classes grow from connected classes by adding a
    vertex with a non-empty neighbourhood.
    """
    if n == 1:
        return (new_graph(1),)
    seen: dict[bytes, Graph] = {}
    for base in _classes(n - 1, connected_only):
        start = 1 if connected_only else 0
        for nbhd in range(start, 1 << (n - 1)):
            g = Graph(n, tuple(row | ((nbhd >> v & 1) << (n - 1)) for v, row in enumerate(base.adj)) + (nbhd,))
            if connected_only and not is_connected(g):
                continue
            key = canonical_form(g)
            if key not in seen:
                seen[key] = g
    return tuple(canonical_relabeling(seen[k]) for k in sorted(seen))


def enumerate_graphs(n: int, connected_only: bool = True) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, in canonical-form order."""
    if not 1 <= n <= MAX_BUILTIN_ORDER:
        raise CorpusError(
            f"built-in enumeration supports 1 ≤ n ≤ {MAX_BUILTIN_ORDER}, got n={n}; "
            "for larger orders generate a graph6 census externally (e.g. nauty geng) and ingest it"
        )
    yield from _classes(n, connected_only)


def enumerate_connected(n: int) -> Iterator[Graph]:
    return enumerate_graphs(n, connected_only=True)


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 stream; fixed algorithm so draws depend only on the seed."""
    return np.random.Generator(np.random.PCG64(seed))


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """G(n, p): one uniform draw per pair, pairs in lexicographic order."""
    adj = [0] * n
    draws = rng.random(n * (n - 1) // 2)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if draws[k] < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def random_connected(n: int, p: float, seed: Union[int, np.random.Generator]) -> Graph:
    """Sample G(n, p) until connected (rejection), deterministic for a fixed seed."""
    if n < 1:
        raise CorpusError(f"n must be at least 1, got {n}")
    if not 0 < p < 1:
        raise CorpusError(f"edge probability must lie in (0, 1), got {p}")
    rng = seed if isinstance(seed, np.random.Generator) else make_rng(seed)
    for _ in range(MAX_REJECTIONS):
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g
    raise CorpusError(f"{MAX_REJECTIONS} consecutive disconnected samples for n={n}, p={p}; use a larger p")


@dataclass(frozen=True)
class CorpusItem:
    """A graph from a corpus, or the error that replaced it."""

    index: int
    graph: Optional[Graph]
    graph6: str
    line: Optional[int] = None
    error: Optional[str] = None


@dataclass(frozen=True)
class BuiltinSource:
    n: int
    connected_only: bool = True

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_BUILTIN_ORDER:
            raise CorpusError(f"built-in enumeration requires n ≤ {MAX_BUILTIN_ORDER}, got n={self.n}")

    def items(self) -> Iterator[CorpusItem]:
        for k, g in enumerate(enumerate_graphs(self.n, self.connected_only)):
            yield CorpusItem(k, g, write_graph6(g))


@dataclass(frozen=True)
class Graph6FileSource:
    path: Path

    def items(self) -> Iterator[CorpusItem]:
        with open(self.path, "r", encoding="ascii", errors="replace", newline="") as fh:
            k = 0
            for lineno, text in read_graph6_lines(fh):
                if text == HEADER:
                    continue
                try:
                    g = parse_graph6(text)
                except Graph6Error as exc:
                    yield CorpusItem(k, None, text, lineno, str(exc))
                else:
                    yield CorpusItem(k, g, write_graph6(g), lineno)
                k += 1


@dataclass(frozen=True)
class RandomSource:
    n: int
    p: float
    count: int
    seed: int

    def __post_init__(self) -> None:
        if not 0 < self.p < 1:
            raise CorpusError(f"edge probability must lie in (0, 1), got {self.p}")
        if self.n < 1 or self.count < 0:
            raise CorpusError("random corpus needs n ≥ 1 and count ≥ 0")

    def items(self) -> Iterator[CorpusItem]:
        rng = make_rng(self.seed)
        for k in range(self.count):
            g = random_connected(self.n, self.p, rng)
            yield CorpusItem(k, g, write_graph6(g))


CorpusSource = Union[BuiltinSource, Graph6FileSource, RandomSource]
