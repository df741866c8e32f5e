"""graph6 codec.

Implements the standard printable-ASCII encoding of simple graphs: a vertex
count header N(n) followed by the upper triangle of the adjacency matrix,
column by column, packed six bits per byte with an offset of 63.  The parser
reports the byte offset of the first offending byte; the writer refuses
graphs beyond the format's 36-bit vertex-count capacity.
"""

from __future__ import annotations

from .graphs import Graph

_HEADER = b">>graph6<<"
_MAX_SHORT = 62
_MAX_MEDIUM = 258047
_MAX_LONG = 68719476735


class Graph6Error(ValueError):
    """Malformed graph6 input; offset is the position of the offending byte."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Graph6CapacityError(ValueError):
    """Graph too large for the graph6 format."""


def _check_byte(data: bytes, pos: int) -> int:
    if pos >= len(data):
        raise Graph6Error("truncated graph6 string", pos)
    b = data[pos]
    if not (63 <= b <= 126):
        raise Graph6Error(f"byte {b!r} outside graph6 range 63..126", pos)
    return b - 63


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 string (optional >>graph6<< header allowed)."""
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(_HEADER):
        pos = len(_HEADER)
    if pos >= len(data):
        raise Graph6Error("empty graph6 string", pos)

    first = _check_byte(data, pos)
    if first <= _MAX_SHORT:
        n = first
        pos += 1
    else:
        # first byte is 126: medium (3 byte) or long (6 byte) vertex count
        if pos + 1 >= len(data):
            raise Graph6Error("truncated vertex count", pos + 1)
        if data[pos + 1] == 126:
            chunks = [_check_byte(data, pos + 2 + i) for i in range(6)]
            n = 0
            for c in chunks:
                n = (n << 6) | c
            pos += 8
        else:
            chunks = [_check_byte(data, pos + 1 + i) for i in range(3)]
            n = 0
            for c in chunks:
                n = (n << 6) | c
            pos += 4

    if n < 1:
        raise Graph6Error(f"vertex count {n} must be at least 1", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(data) - pos}",
            pos,
        )

    edges = []
    bit = 0
    value = 0
    have = 0
    scan = pos
    for j in range(1, n):
        for i in range(j):
            if have == 0:
                value = _check_byte(data, scan)
                scan += 1
                have = 6
            have -= 1
            if (value >> have) & 1:
                edges.append((i, j))
            bit += 1
    # padding bits must be zero
    if have and value & ((1 << have) - 1):
        raise Graph6Error("nonzero padding bits", scan - 1)
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as a canonical graph6 string (no header, no newline)."""
    n = g.n
    out = bytearray()
    if n <= _MAX_SHORT:
        out.append(n + 63)
    elif n <= _MAX_MEDIUM:
        out.append(126)
        out.extend(((n >> s) & 63) + 63 for s in (12, 6, 0))
    elif n <= _MAX_LONG:
        out.extend((126, 126))
        out.extend(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    else:
        raise Graph6CapacityError(f"n={n} exceeds graph6 capacity {_MAX_LONG}")

    value = 0
    have = 0
    for j in range(1, n):
        for i in range(j):
            value = (value << 1) | (1 if g.has_edge(i, j) else 0)
            have += 1
            if have == 6:
                out.append(value + 63)
                value = 0
                have = 0
    if have:
        out.append((value << (6 - have)) + 63)
    return out.decode("ascii")


def parse_graph6_file(text: str) -> list[Graph]:
    """Decode one graph per nonempty line."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]
