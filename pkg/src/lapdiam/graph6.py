"""graph6 encoding (as used by nauty's ``geng``) for simple graphs.

Header ``N(n)``: one byte ``n+63`` when ``n <= 62``; ``~`` plus three bytes
for ``n <= 258047``; ``~~`` plus six bytes beyond that. The body packs the
upper triangle column by column, ``x(0,1), x(0,2), x(1,2), x(0,3), ...``,
six bits per byte (most significant first), each byte offset by 63.
"""

from __future__ import annotations

from typing import Iterator, TextIO

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; ``position`` is the 0-based offending byte."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _size_bytes(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [(n >> s & 63) + 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"graph too large for graph6: n={n}")


def write_graph6(g: Graph) -> str:
    out = _size_bytes(g.n)
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` prefix is skipped)."""
    text = line.rstrip("\r\n")
    offset = 0
    if text.startswith(HEADER):
        offset = len(HEADER)
    data = text[offset:]
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside the printable range 63..126", offset + k)
    if not data:
        raise Graph6Error("missing size field", offset)

    vals = [ord(ch) - 63 for ch in data]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte size field", offset + len(vals))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte size field", offset + len(vals))
        n = 0
        for v in vals[1:4]:
            n = n << 6 | v
        pos = 4
    if n < 1:
        raise Graph6Error("graph must have at least one vertex", offset)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated edge field: expected {need} bytes, found {len(body)}", offset + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing data after edge field", offset + pos + need)
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits", offset + len(vals) - 1)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(stream: TextIO) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for non-blank lines, 1-based."""
    for lineno, raw in enumerate(stream, start=1):
        text = raw.rstrip("\r\n")
        if text.strip():
            yield lineno, text
