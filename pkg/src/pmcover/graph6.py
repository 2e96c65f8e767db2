"""graph6 encoding and decoding (simple graphs, one per line).

Bit-exact with the published format: optional ``>>graph6<<`` header, 63-offset
printable bytes, upper-triangle column-major bit order.  Only simple graphs
are representable, so multigraphs refuse to encode.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .errors import MalformedGraph6, NotSimple
from .graphs import CubicGraph

_HEADER = ">>graph6<<"


def _decode_size(data: str) -> tuple[int, str]:
    if not data:
        raise MalformedGraph6("empty graph6 line")
    c = ord(data[0])
    if c != 126:
        return c - 63, data[1:]
    if len(data) >= 2 and ord(data[1]) != 126:
        if len(data) < 4:
            raise MalformedGraph6("truncated 3-byte size field")
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        return n, data[4:]
    if len(data) < 8:
        raise MalformedGraph6("truncated 6-byte size field")
    n = 0
    for ch in data[2:8]:
        n = (n << 6) | (ord(ch) - 63)
    return n, data[8:]


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise MalformedGraph6(f"vertex count {n} too large for this encoder")


def parse_graph6(text: str) -> CubicGraph:
    """Parse one graph6 line into a CubicGraph.

    Raises MalformedGraph6 for encoding problems and NotCubic when the
    encoded graph is not 3-regular.
    """
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    if not s:
        raise MalformedGraph6("empty graph6 line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"illegal character {ch!r}")
    n, rest = _decode_size(s)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(rest) != expected:
        raise MalformedGraph6(
            f"expected {expected} data bytes for n={n}, got {len(rest)}"
        )
    bits = 0
    for ch in rest:
        bits = (bits << 6) | (ord(ch) - 63)
    bits >>= len(rest) * 6 - nbits  # drop padding
    edges = []
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                edges.append((i, j))
    return CubicGraph(n, edges)


def to_graph6(g: CubicGraph) -> str:
    """Encode a simple cubic graph as one graph6 line (no header)."""
    if not g.is_simple():
        raise NotSimple("graph6 cannot encode parallel edges")
    n = g.n
    adj = g.adjacency_counts()
    bits = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (1 if adj[i][j] else 0)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    nbits += pad
    chars = []
    for k in range(nbits - 6, -1, -6):
        chars.append(chr(((bits >> k) & 63) + 63))
    return _encode_size(n) + "".join(chars)


def iter_graph6_file(path: str | Path) -> Iterator[str]:
    """Yield non-empty graph6 lines from a file."""
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield line
