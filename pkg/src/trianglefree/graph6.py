"""Bit-exact graph6 reading and writing for graphs with at most 62 vertices."""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text. ``offset`` is the 0-based byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def encode(g: Graph) -> str:
    """Encode ``g`` as a graph6 line without the trailing newline."""
    out = [chr(g.n + 63)]
    group = 0
    width = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            group = group << 1 | (col >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(group + 63))
                group = width = 0
    if width:
        out.append(chr((group << (6 - width)) + 63))
    return "".join(out)


def decode(line: str) -> Graph:
    """Parse one graph6 line; an optional ``>>graph6<<`` prefix is skipped."""
    text = line.rstrip("\r\n")
    start = len(HEADER) if text.startswith(HEADER) else 0
    if len(text) <= start:
        raise Graph6Error("empty graph6 string", start)
    for pos in range(start, len(text)):
        code = ord(text[pos])
        if not 63 <= code <= 126:
            raise Graph6Error(f"byte {code} outside the graph6 range 63..126", pos)
    n = ord(text[start]) - 63
    if n == 63:
        raise Graph6Error(f"multi-byte vertex counts (n > {MAX_VERTICES}) are not supported", start)
    if n < 1:
        raise Graph6Error("graphs with zero vertices are not supported", start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = text[start + 1:]
    if len(body) < need:
        raise Graph6Error(f"payload truncated: expected {need} bytes, found {len(body)}", start + 1 + len(body))
    if len(body) > need:
        raise Graph6Error(f"{len(body) - need} unexpected trailing bytes", start + 1 + need)
    if need:
        pad = need * 6 - nbits
        last = ord(body[-1]) - 63
        if last & ((1 << pad) - 1):
            raise Graph6Error("non-zero padding bits", start + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_lines(stream: TextIO) -> Iterator[str]:
    """Yield non-blank lines stripped of line terminators."""
    for raw in stream:
        line = raw.rstrip("\r\n")
        if line.strip():
            yield line


def write(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
