"""Exhaustive enumeration of labelled simple graphs in edge-mask order.

Bit ``i`` of the mask is the ``i``-th vertex pair in graph6 order
(01, 02, 12, 03, 13, 23, ...), so mask ``m`` and the graph6 payload agree.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from ..graph import Graph, GraphDomainError, reach

DEFAULT_CAP = 7
HARD_CAP = 8


def pair_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


@lru_cache(maxsize=None)
def _chunk_tables(n: int) -> tuple[tuple[tuple[tuple[int, ...], ...], ...], int]:
    # For each 8-bit slice of the mask, the row contributions of every byte value.
    pairs = pair_order(n)
    tables = []
    for base in range(0, len(pairs), 8):
        span = pairs[base:base + 8]
        table = []
        for value in range(1 << len(span)):
            rows = [0] * n
            for off, (i, j) in enumerate(span):
                if value >> off & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            table.append(tuple(rows))
        tables.append(tuple(table))
    return tuple(tables), len(pairs)


def graph_from_mask(n: int, mask: int) -> Graph:
    tables, _ = _chunk_tables(n)
    rows = [0] * n
    for t, table in enumerate(tables):
        part = table[mask >> (8 * t) & 0xFF]
        rows = [a | b for a, b in zip(rows, part)]
    return Graph._trusted(n, tuple(rows))


def labeled_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled(
    n: int,
    *,
    connected: bool = False,
    min_edges: int = 0,
    start: int = 0,
    stop: int | None = None,
    allow_large: bool = False,
) -> Iterator[Graph]:
    """Every labelled graph on n vertices once, by ascending edge mask.

    ``start``/``stop`` restrict the mask range so work can be sharded.
    """
    if n < 1:
        raise GraphDomainError("n must be >= 1")
    if n > HARD_CAP or (n > DEFAULT_CAP and not allow_large):
        raise GraphDomainError(
            f"enumeration capped at n <= {DEFAULT_CAP} (n <= {HARD_CAP} with allow_large)"
        )
    tables, m = _chunk_tables(n)
    total = 1 << m
    stop = total if stop is None else min(stop, total)
    full = (1 << n) - 1
    t0 = tables[0] if tables else ((0,) * n,)
    rest = tables[1:]
    for high in range(start >> 8, (stop + 255) >> 8):
        # Rows from the upper slices are shared across the 256 low-byte values.
        base = [0] * n
        for t, table in enumerate(rest, start=1):
            part = table[high >> (8 * (t - 1)) & 0xFF]
            base = [a | b for a, b in zip(base, part)]
        lo_begin = max(start - (high << 8), 0)
        lo_end = min(stop - (high << 8), 256, len(t0))
        for low in range(lo_begin, lo_end):
            if min_edges and ((high << 8) | low).bit_count() < min_edges:
                continue
            rows = tuple(a | b for a, b in zip(base, t0[low]))
            if connected and reach(rows, 1, full) != full:
                continue
            yield Graph._trusted(n, rows)
