"""Immutable simple graphs on vertices ``0..n-1`` with bit-set adjacency.

Everything here is a pure function of its arguments; a :class:`Graph` is
never mutated after construction, so graphs can be shared freely between
worker processes and used as cache keys.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, missing edges)."""


class _Infinite:
    """Diameter of a disconnected graph."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[i]`` is the neighbourhood of ``i`` as a bit mask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} references a vertex outside [0, {self.n})")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")
                r ^= low

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        for i in range(self.n):
            for j in _bits(self.adj[i] >> (i + 1) << (i + 1)):
                yield (i, j)

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


@dataclass(frozen=True)
class PathInGraph:
    """A path given by its vertex sequence; length is the number of edges."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def vertex_mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def new_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a graph from an edge list; repeated edges collapse to one."""
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    adj = [0] * n
    for e in edges:
        i, j = int(e[0]), int(e[1])
        for v in (i, j):
            if not 0 <= v < n:
                raise GraphError(f"endpoint {v} out of range [0, {n})")
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union with ``h``'s vertices shifted by ``g.n``."""
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    u = disjoint_union(g1, g2)
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    adj = tuple(row | (right if i < g1.n else left) for i, row in enumerate(u.adj))
    return Graph(u.n, adj)


def add_edge(g: Graph, i: int, j: int) -> Graph:
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise GraphError(f"edge ({i}, {j}) has an endpoint outside [0, {g.n})")
    if i == j:
        raise GraphError(f"loop at vertex {i}")
    adj = list(g.adj)
    adj[i] |= 1 << j
    adj[j] |= 1 << i
    return Graph(g.n, tuple(adj))


def delete_edge(g: Graph, i: int, j: int) -> Graph:
    if not (0 <= i < g.n and 0 <= j < g.n) or not g.has_edge(i, j):
        raise GraphError(f"edge ({i}, {j}) is not in the graph")
    adj = list(g.adj)
    adj[i] &= ~(1 << j)
    adj[j] &= ~(1 << i)
    return Graph(g.n, tuple(adj))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the remaining vertices, relabelled in increasing order."""
    drop = set(vertices)
    for v in drop:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} is not in the graph")
    keep = [v for v in range(g.n) if v not in drop]
    if not keep:
        raise GraphError("cannot delete every vertex")
    return induced_subgraph(g, keep)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by ``vertices``; vertex ``vertices[k]`` becomes ``k``."""
    index = {v: k for k, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        row = 0
        for w in _bits(g.adj[v]):
            k = index.get(w)
            if k is not None:
                row |= 1 << k
        adj.append(row)
    return Graph(len(vertices), tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for w in _bits(g.adj[v]):
            row |= 1 << perm[w]
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees in non-increasing order."""
    return tuple(sorted((g.degree(v) for v in range(g.n)), reverse=True))


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def component_count(g: Graph) -> int:
    return len(components(g))


def is_connected(g: Graph) -> bool:
    return component_count(g) == 1


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def bfs_distances(g: Graph, v: int) -> list[float]:
    """Shortest-path distances from ``v``; unreachable vertices get ``math.inf``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range [0, {g.n})")
    dist: list[float] = [math.inf] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in _bits(g.adj[x]):
            if dist[y] == math.inf:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    return [bfs_distances(g, v) for v in range(g.n)]


def diameter(g: Graph):
    """Maximum distance, or :data:`INFINITE` when ``g`` is disconnected."""
    best = 0
    for v in range(g.n):
        ecc = max(bfs_distances(g, v))
        if ecc == math.inf:
            return INFINITE
        best = max(best, int(ecc))
    return best


def find_diametral_paths(g: Graph, cap: int = 10_000) -> tuple[list[PathInGraph], bool]:
    """Shortest paths of length ``diameter(g)``, lexicographically ordered.

    Each path is listed once, oriented so that its first vertex is smaller
    than its last. Returns ``(paths, truncated)``; ``truncated`` is true when
    enumeration stopped at ``cap``.
    """
    if cap < 1:
        raise GraphError("cap must be at least 1")
    dist = distance_matrix(g)
    d = diameter(g)
    if d is INFINITE:
        raise GraphError("diametral paths need a connected graph (diameter is infinite)")
    paths: list[PathInGraph] = []
    if d == 0:
        return [PathInGraph((0,))], False

    for u in range(g.n):
        targets = [t for t in range(u + 1, g.n) if dist[u][t] == d]
        if not targets:
            continue
        stack = [u]

        def extend() -> bool:
            k = len(stack) - 1
            x = stack[-1]
            if k == d:
                paths.append(PathInGraph(tuple(stack)))
                return len(paths) >= cap
            for w in _bits(g.adj[x]):
                if dist[u][w] != k + 1:
                    continue
                if not any(dist[w][t] == d - k - 1 for t in targets):
                    continue
                stack.append(w)
                if extend():
                    return True
                stack.pop()
            return False

        if extend():
            return paths, True
    return paths, False


def gamma(g: Graph, path: PathInGraph, z: int) -> frozenset[int]:
    """Neighbours of the off-path vertex ``z`` that lie on ``path``."""
    mask = path.vertex_mask()
    if mask >> z & 1:
        raise GraphError(f"vertex {z} lies on the path")
    return frozenset(_bits(g.adj[z] & mask))


def _local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent).

    Unit-capacity max flow on the split graph: vertex ``v`` becomes
    ``2v`` (in) -> ``2v+1`` (out).
    """
    cap: dict[int, dict[int, int]] = {x: {} for x in range(2 * g.n)}

    def arc(a: int, b: int, c: int) -> None:
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    big = g.n
    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for w in _bits(g.adj[v]):
            arc(2 * v + 1, 2 * w, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            return flow
        y = sink
        while y != source:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Minimum size of a vertex cut; ``n - 1`` for complete graphs."""
    if is_complete(g):
        return g.n - 1
    if not is_connected(g):
        return 0
    best = g.n - 1
    for s, t in combinations(range(g.n), 2):
        if not g.has_edge(s, t):
            best = min(best, _local_vertex_connectivity(g, s, t))
    return best


# Canonical labelling: individualisation-refinement with twin pruning.


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Coarsest equitable refinement; colour order is labelling-invariant."""
    num = len(set(colors))
    while True:
        sigs = []
        for v in range(g.n):
            counts: dict[int, int] = {}
            for w in _bits(g.adj[v]):
                counts[colors[w]] = counts.get(colors[w], 0) + 1
            sigs.append((colors[v], tuple(sorted(counts.items()))))
        ranking = {s: k for k, s in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
        if len(ranking) == num:
            return colors
        num = len(ranking)


def _certificate(g: Graph, colors: list[int]) -> int:
    order = sorted(range(g.n), key=colors.__getitem__)
    pos = [0] * g.n
    for k, v in enumerate(order):
        pos[v] = k
    cert = 0
    for j in range(1, g.n):
        vj = order[j]
        for i in range(j):
            cert = cert << 1 | (g.adj[vj] >> order[i] & 1)
    return cert


def _canonical_certificate(g: Graph) -> int:
    best = -1
    degrees = [g.degree(v) for v in range(g.n)]

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(g, colors)
        if len(set(colors)) == g.n:
            best = max(best, _certificate(g, colors))
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(g.n) if colors[v] == target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(g, u, v) for u in tried):
                continue
            tried.append(v)
            search([2 * c + (1 if c == target and x != v else 0) for x, c in enumerate(colors)])

    search(degrees)
    return best


def _twins(g: Graph, u: int, v: int) -> bool:
    bu, bv = 1 << u, 1 << v
    return (g.adj[u] & ~bv) == (g.adj[v] & ~bu)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string; equal exactly for isomorphic graphs."""
    bits = g.n * (g.n - 1) // 2
    cert = _canonical_certificate(g)
    return g.n.to_bytes(4, "big") + cert.to_bytes((bits + 7) // 8, "big")


def canonical_relabeling(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class encoded by :func:`canonical_form`."""
    cert = _canonical_certificate(g)
    edges = []
    k = g.n * (g.n - 1) // 2
    for j in range(1, g.n):
        for i in range(j):
            k -= 1
            if cert >> k & 1:
                edges.append((i, j))
    return new_graph(g.n, edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if degree_sequence(g) != degree_sequence(h):
        return False
    return canonical_form(g) == canonical_form(h)
