from collections import Counter
from math import comb

import networkx as nx
import pytest

from spectral_cycles.graph import GraphDomainError
from spectral_cycles.verify.enumeration import (
    enumerate_labeled,
    graph_from_mask,
    labeled_count,
    pair_order,
)
from spectral_cycles.verify.graph6 import emit_graph6

from conftest import to_nx


def connected_counts(n_max: int) -> dict[tuple[int, int], int]:
    """Connected labelled graphs by (order, edges) via the rooted-component recurrence."""
    conn: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        pairs = comb(n, 2)
        for m in range(pairs + 1):
            total = comb(pairs, m)
            # subtract graphs whose vertex 0 lies in a component of order k < n
            for k in range(1, n):
                for j in range(comb(k, 2) + 1):
                    rest = m - j
                    if 0 <= rest <= comb(n - k, 2):
                        total -= comb(n - 1, k - 1) * conn[k, j] * comb(comb(n - k, 2), rest)
            conn[n, m] = total
    return conn


def test_small_counts():
    assert sum(1 for _ in enumerate_labeled(3)) == 8
    assert sum(1 for _ in enumerate_labeled(4, connected=True)) == 38
    assert sum(1 for _ in enumerate_labeled(1)) == 1


def test_recurrence_oracle_known_values():
    c = connected_counts(5)
    assert sum(c[4, m] for m in range(7)) == 38
    assert sum(c[5, m] for m in range(11)) == 728


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_edge_count_distribution_is_binomial(n):
    seen = Counter(g.edge_count() for g in enumerate_labeled(n))
    assert sum(seen.values()) == labeled_count(n) == 2 ** comb(n, 2)
    assert all(seen[m] == comb(comb(n, 2), m) for m in range(comb(n, 2) + 1))


def test_n5_connected_by_edges_matches_recurrence():
    c = connected_counts(5)
    seen = Counter(g.edge_count() for g in enumerate_labeled(5, connected=True))
    assert all(seen[m] == c[5, m] for m in range(11))


def test_n4_matches_networkx_connectivity():
    ours = sum(1 for _ in enumerate_labeled(4, connected=True))
    theirs = sum(nx.is_connected(to_nx(g)) for g in enumerate_labeled(4))
    assert ours == theirs


def test_mask_order_follows_graph6_bits():
    n = 5
    pairs = pair_order(n)
    assert pairs[:4] == [(0, 1), (0, 2), (1, 2), (0, 3)]
    for mask in (1, 0b101, 0b1111111111, 0b1000000000):
        g = graph_from_mask(n, mask)
        assert {pairs[i] for i in range(len(pairs)) if mask >> i & 1} == set(g.edges())
    emitted = [emit_graph6(g) for g in enumerate_labeled(4)]
    assert len(set(emitted)) == 64


def test_sharded_ranges_cover_everything():
    whole = list(enumerate_labeled(5))
    parts = list(enumerate_labeled(5, stop=300)) + list(enumerate_labeled(5, start=300))
    assert parts == whole


def test_min_edges_filter():
    assert all(g.edge_count() >= 8 for g in enumerate_labeled(5, min_edges=8))
    assert sum(1 for _ in enumerate_labeled(5, min_edges=8)) == comb(10, 8) + comb(10, 9) + 1


def test_caps():
    with pytest.raises(GraphDomainError):
        next(enumerate_labeled(8))
    with pytest.raises(GraphDomainError):
        next(enumerate_labeled(9, allow_large=True))
    with pytest.raises(GraphDomainError):
        next(enumerate_labeled(0))


@pytest.mark.slow
def test_n7_connected_dense_count_golden():
    c = connected_counts(7)
    expected = sum(c[7, m] for m in range(11, 22))
    assert expected == 1034968
    assert sum(c[7, m] for m in range(22)) == 1866256
    got = sum(1 for _ in enumerate_labeled(7, connected=True, min_edges=11))
    assert got == expected
