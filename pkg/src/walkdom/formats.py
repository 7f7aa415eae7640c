"""Text codecs: short-form graph6, plain edge lists and DOT output."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import IndexOutOfRangeError, MalformedGraph6Error, UnsupportedSizeError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
MAX_SHORT_N = 62


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a short-form graph6 string (n <= 62)."""
    n = g.n
    if n > MAX_SHORT_N:
        raise UnsupportedSizeError(f"graph6 short form supports n <= {MAX_SHORT_N}, got {n}")
    out = [chr(n + 63)]
    acc = nacc = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Decode one short-form graph6 line (an optional header is stripped)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise MalformedGraph6Error("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6Error(f"illegal character in graph6 string {s!r}")
    n = ord(s[0]) - 63
    if n == 63:
        raise UnsupportedSizeError("long-form graph6 (n > 62) is not supported")
    if n < 1:
        raise MalformedGraph6Error("graph6 string encodes an empty graph")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6Error(
            f"graph6 body for n={n} needs {(nbits + 5) // 6} characters, got {len(body)}"
        )
    adj = [0] * n
    k = 0
    values = [ord(c) - 63 for c in body]
    for j in range(1, n):
        for i in range(j):
            if values[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if line:
            yield decode_graph6(line)


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return list(read_graph6_lines(fh))


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"i j"``."""
    rows = [line.split() for line in text.splitlines()]
    rows = [r for r in rows if r and not r[0].startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise IndexOutOfRangeError("edge list must start with an 'n m' header")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise IndexOutOfRangeError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise IndexOutOfRangeError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{i} {j}" for i, j in edges]
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    safe = "".join(c if c.isalnum() or c == "_" else "_" for c in name) or "G"
    lines = [f"graph {safe} {{"]
    for i in range(g.n):
        lines.append(f'  {i} [label="{g.label(i)}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_graph6(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(encode_graph6(g) + "\n")
