"""graph6 and plain edge-list serialization.

graph6 packs the upper triangle of the adjacency matrix column by column
(pairs ``(0,1), (0,2), (1,2), (0,3), ...``) into 6-bit groups, each offset by
63 into the printable range. The vertex count comes first: one byte for
``n <= 62``, ``~`` plus three bytes up to 258047, ``~~`` plus six bytes beyond.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

HEADER = b">>graph6<<"


class FormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated 8-byte length prefix")
        digits, width = data[2:8], 8
    else:
        if len(data) < 4:
            raise FormatError("truncated 4-byte length prefix")
        digits, width = data[1:4], 4
    n = 0
    for d in digits:
        n = (n << 6) | (d - 63)
    return n, width


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record (optional ``>>graph6<<`` header, trailing newline ok)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise FormatError("empty graph6 input")
    for ch in data:
        if not 63 <= ch <= 126:
            raise FormatError(f"character {ch!r} outside graph6 range [63, 126]")
    n, width = _decode_n(data)
    body = data[width:]
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise FormatError(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ch - 63)
    pad = 6 * len(body) - nbits
    if bits & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")
    bits >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> k) & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> bytes:
    """Encode ``g`` as graph6 bytes, no header, no newline."""
    n = g.n
    out = bytearray(_encode_n(n))
    acc = nacc = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out)


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Parse a stream of graph6 records, one per line; blank lines are skipped."""
    for line in lines:
        if isinstance(line, str):
            line = line.encode("ascii")
        if line.strip():
            yield parse_graph6(line)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n\\nu v\\nu v..."``; blank lines and ``#`` comments are ignored."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise FormatError("empty edge list")
    try:
        n = int(rows[0])
    except ValueError:
        raise FormatError(f"first line must be the vertex count, got {rows[0]!r}") from None
    if n < 0:
        raise FormatError("negative vertex count")
    seen: set[tuple[int, int]] = set()
    for lineno, row in enumerate(rows[1:], start=2):
        parts = row.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {row!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {row!r}") from None
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range [0, {n})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
    return Graph.from_edges(n, seen)


def emit_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
