"""graph6 and plain edge-list text formats.

graph6 follows the format published with nauty: a size prefix N(n) followed
by the upper triangle of the adjacency matrix, column by column, packed six
bits per printable byte (value + 63).  Lines may carry the optional
``>>graph6<<`` header.

The edge-list format is a first line holding ``n`` and then one ``u v`` line
per edge with 0-based indices.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = (1 << 36) - 1


def _encode_size(n: int) -> str:
    if n < 0 or n > MAX_ORDER:
        raise Graph6Error(f"order {n} outside graph6 range", 0)
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode(G: Graph) -> str:
    """graph6 string for G (no header, no newline)."""
    out = [_encode_size(G.n)]
    acc = nbits = 0
    chunks = []
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        chunks.append(chr((acc << (6 - nbits)) + 63))
    out.extend(chunks)
    return "".join(out)


def decode(text: str) -> Graph:
    """Parse one graph6 line.  Raises Graph6Error with the byte offset on malformed input."""
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range 63..126", base + k)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte size field", base + len(vals))
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte size field", base + len(vals))
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} adjacency bytes for order {n}, found {len(body)}",
            base + pos + min(len(body), need),
        )
    adj = [0] * n
    total = n * (n - 1) // 2
    j, i = 1, 0
    for b in range(total):
        byte, off = divmod(b, 6)
        if body[byte] >> (5 - off) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        i += 1
        if i == j:
            j += 1
            i = 0
    pad = need * 6 - total
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph(n, adj)


def iter_lines(lines: Iterable[str]) -> Iterator[str]:
    """Non-blank, non-comment lines."""
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def read_graph6(stream: TextIO | Iterable[str]) -> list[Graph]:
    return [decode(line) for line in iter_lines(stream)]


def write_graph6(graphs: Iterable[Graph]) -> str:
    return "".join(encode(G) + "\n" for G in graphs)


def read_edge_list(text: str) -> Graph:
    lines = list(iter_lines(text.splitlines()))
    if not lines:
        raise Graph6Error("empty edge list", 0)
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            u, v = line.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise Graph6Error(f"malformed edge list: {exc}", 0) from None
    return Graph.from_edges(n, edges)


def write_edge_list(G: Graph) -> str:
    return f"{G.n}\n" + "".join(f"{u} {v}\n" for u, v in G.edges())
