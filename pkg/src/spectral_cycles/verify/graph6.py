"""graph6 encoding for graphs of order 1..62 (single size byte only)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from ..graph import Graph, GraphDomainError

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    pass


def _payload_bytes(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(line: bytes | str) -> Graph:
    """Decode one graph6 line; a trailing newline is tolerated."""
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.rstrip(b"\r\n")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for i, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise Graph6Error(f"byte {ch!r} at offset {i} outside 63..126")
    if data[0] == 126:
        raise Graph6Error("multi-byte size forms (n > 62) are not supported")
    n = data[0] - 63
    if n == 0:
        raise Graph6Error("graphs need at least one vertex")
    need = _payload_bytes(n)
    payload = data[1:]
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: expected {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise Graph6Error(f"trailing garbage: {len(payload) - need} extra bytes")
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if (payload[bit // 6] - 63) >> (5 - bit % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    try:
        return Graph(n, tuple(rows))
    except GraphDomainError as exc:  # pragma: no cover - rows are symmetric by construction
        raise Graph6Error(str(exc)) from exc


def emit_graph6(g: Graph) -> bytes:
    n = g.n
    if n > 62:
        raise Graph6Error("only n <= 62 is encodable with a single size byte")
    out = bytearray([n + 63])
    acc = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(acc + 63)
                acc = filled = 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return bytes(out)


def to_g6_str(g: Graph) -> str:
    return emit_graph6(g).decode("ascii")


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield parse_graph6(line)
