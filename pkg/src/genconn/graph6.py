"""graph6 encoding for graphs with at most 32 vertices.

Layout: one byte ``n + 63``, then the upper triangle read column by column
(``x(0,1), x(0,2), x(1,2), x(0,3), ...``) packed big-endian into 6-bit groups,
zero-padded, each group offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Base class for graph6 parse failures."""


class Graph6HeaderError(Graph6Error):
    """Missing or unreadable order byte."""


class Graph6OrderError(Graph6Error):
    """Order outside 1..32 (includes the long-form 126 prefix)."""


class Graph6PayloadError(Graph6Error):
    """Payload too short, non-printable, or with nonzero padding."""


class Graph6TrailingError(Graph6Error):
    """Bytes left over after the adjacency payload."""


def _payload_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def decode(text: str) -> Graph:
    line = text.strip("\r\n")
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6HeaderError("empty graph6 string")
    first = ord(line[0])
    if first == 126:
        raise Graph6OrderError("orders above 62 are not supported")
    if not 63 <= first <= 125:
        raise Graph6HeaderError(f"invalid order byte {line[0]!r}")
    n = first - 63
    if not 1 <= n <= MAX_ORDER:
        raise Graph6OrderError(f"order {n} outside 1..{MAX_ORDER}")
    need = _payload_len(n)
    body = line[1:]
    if len(body) < need:
        raise Graph6PayloadError(f"payload has {len(body)} bytes, need {need}")
    if len(body) > need:
        raise Graph6TrailingError(f"{len(body) - need} trailing bytes")
    value = 0
    for ch in body:
        c = ord(ch) - 63
        if not 0 <= c < 64:
            raise Graph6PayloadError(f"invalid payload byte {ch!r}")
        value = value << 6 | c
    nbits = n * (n - 1) // 2
    pad = 6 * need - nbits
    if value & ((1 << pad) - 1):
        raise Graph6PayloadError("nonzero padding bits")
    value >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def encode(g: Graph) -> str:
    n = g.n
    value = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            value = value << 1 | (col >> i & 1)
    need = _payload_len(n)
    value <<= 6 * need - n * (n - 1) // 2
    out = [chr(n + 63)]
    for k in range(need - 1, -1, -1):
        out.append(chr((value >> (6 * k) & 63) + 63))
    return "".join(out)


def read_all(stream: TextIO) -> Iterator[Graph]:
    for line in stream:
        if line.strip():
            yield decode(line.strip())


def write_all(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")


graph_from_graph6 = decode
graph_to_graph6 = encode
