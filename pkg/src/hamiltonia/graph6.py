"""graph6 encoding (short header form only, n <= 62).

The body lists the upper triangle of the adjacency matrix column by column,
``(0,1), (0,2), (1,2), (0,3), ...``, packed into 6-bit groups, each group
offset by 63 to land in printable ASCII.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .errors import MalformedHeader, NTooLarge, TrailingBits
from .graph import Graph

MAX_SHORT_N = 62
HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    if g.n > MAX_SHORT_N:
        raise NTooLarge(f"graph6 short form supports n <= {MAX_SHORT_N}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise MalformedHeader("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise MalformedHeader(f"byte {ord(ch)!r} outside the graph6 range 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise NTooLarge("long-form graph6 headers (n > 62) are not supported")
    if n < 1:
        raise MalformedHeader("graph6 header encodes n = 0")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise TrailingBits(f"expected {(nbits + 5) // 6} body bytes for n={n}, got {len(body)}")
    stream = 0
    for ch in body:
        stream = stream << 6 | (ord(ch) - 63)
    pad = 6 * len(body) - nbits
    if stream & ((1 << pad) - 1):
        raise TrailingBits("nonzero padding bits")
    stream >>= pad
    adj = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(adj))


def read_graph6(stream: IO[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line."""
    for line in stream:
        if line.strip():
            yield from_graph6(line)


def write_graph6(graphs: Iterable[Graph], stream: IO[str]) -> int:
    count = 0
    for g in graphs:
        stream.write(to_graph6(g) + "\n")
        count += 1
    return count
