"""Immutable simple graphs on at most 64 vertices with bitset adjacency rows.

Vertices are labelled ``0..n-1``. Row ``adj[u]`` is an integer whose bit ``v``
is set exactly when ``uv`` is an edge. Equality and hashing are label
sensitive; the only isomorphism tests offered are the recognizers
:func:`is_snk` and :func:`is_snk_plus`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator

import numpy as np

MAX_VERTICES = 64


class GraphDomainError(ValueError):
    """An argument lies outside the domain of a graph operation."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        n, adj = self.n, self.adj
        if not 1 <= n <= MAX_VERTICES:
            raise GraphDomainError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        if len(adj) != n:
            raise GraphDomainError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise GraphDomainError(f"row {u} references a vertex >= {n}")
            if row >> u & 1:
                raise GraphDomainError(f"loop at vertex {u}")
            for v in bits(row):
                if not adj[v] >> u & 1:
                    raise GraphDomainError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Skips validation; callers guarantee the invariants.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 1 <= n <= MAX_VERTICES:
            raise GraphDomainError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphDomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphDomainError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        n = a.shape[0]
        rows = tuple(mask_of(np.flatnonzero(a[u])) for u in range(n))
        return cls(n, rows)

    # -- basic vocabulary -------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> int:
        return self.adj[u]

    def closed_neighbors(self, u: int) -> int:
        return self.adj[u] | 1 << u

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in ascending lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, row in enumerate(self.adj):
            for v in bits(row):
                a[u, v] = 1
        return a

    def edge_count_within(self, s: int) -> int:
        """e(G[S]) for the vertex set encoded by mask ``s``."""
        return sum((self.adj[u] & s).bit_count() for u in bits(s)) // 2

    def cross_edges(self, x: int, y: int) -> int:
        """e(X, Y) for disjoint vertex masks ``x`` and ``y``."""
        if x & y:
            raise GraphDomainError("cross_edges needs disjoint vertex sets")
        return sum((self.adj[u] & y).bit_count() for u in bits(x))

    def induced(self, s: int) -> "Graph":
        """Subgraph induced by mask ``s``, relabelled in ascending vertex order."""
        keep = list(bits(s))
        if not keep:
            raise GraphDomainError("induced subgraph on the empty set")
        index = {v: i for i, v in enumerate(keep)}
        rows = tuple(mask_of(index[w] for w in bits(self.adj[v] & s)) for v in keep)
        return Graph._trusted(len(keep), rows)

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by least vertex."""
        remaining = self.full
        out = []
        while remaining:
            seen = reach(self.adj, remaining & -remaining, self.full)
            out.append(seen)
            remaining &= ~seen
        return out

    def is_connected(self) -> bool:
        return reach(self.adj, 1, self.full) == self.full

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphDomainError(f"loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def reach(adj: tuple[int, ...], start: int, allowed: int) -> int:
    """Mask of vertices reachable from mask ``start`` through ``allowed`` vertices."""
    seen = frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


# -- named graphs ---------------------------------------------------------

def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphDomainError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# -- extremal constructions ----------------------------------------------

def snk_edge_count(n: int, k: int) -> int:
    """kn - (k^2 + k)/2, the size of S_{n,k}."""
    return k * n - (k * k + k) // 2


def construct_snk(n: int, k: int) -> Graph:
    """K_k joined to an independent set of n-k vertices; the clique is 0..k-1."""
    if not 1 <= k < n:
        raise GraphDomainError(f"S_(n,k) needs 1 <= k < n, got n={n}, k={k}")
    if n > MAX_VERTICES:
        raise GraphDomainError(f"n={n} exceeds {MAX_VERTICES}")
    full = (1 << n) - 1
    clique = (1 << k) - 1
    rows = tuple(full & ~(1 << u) if u < k else clique for u in range(n))
    return Graph._trusted(n, rows)


def construct_snk_plus(n: int, k: int) -> Graph:
    """S_{n,k} plus the edge {k, k+1} inside the independent set.

    S+_{2,1} is K_2 by convention.
    """
    if (n, k) == (2, 1):
        return complete(2)
    if not 1 <= k <= n - 2:
        raise GraphDomainError(f"S+_(n,k) needs 1 <= k <= n-2, got n={n}, k={k}")
    return construct_snk(n, k).add_edge(k, k + 1)


def join(g: Graph | None, h: Graph | None) -> Graph:
    """G v H: disjoint copies plus all cross edges; H is shifted past G.

    ``None`` stands for the graph with no vertices.
    """
    return _combine(g, h, cross=True)


def disjoint_union(g: Graph | None, h: Graph | None) -> Graph:
    return _combine(g, h, cross=False)


def _combine(g, h, cross):
    if g is None or h is None:
        if g is None and h is None:
            raise GraphDomainError("both operands are empty")
        return g if h is None else h
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphDomainError(f"combined order {n} exceeds {MAX_VERTICES}")
    g_mask = g.full
    h_mask = h.full << g.n
    rows = [row | (h_mask if cross else 0) for row in g.adj]
    rows += [row << g.n | (g_mask if cross else 0) for row in h.adj]
    return Graph._trusted(n, tuple(rows))


def is_snk(g: Graph, k: int) -> bool:
    """Recognize S_{n,k} up to isomorphism."""
    n = g.n
    if not 1 <= k < n or g.edge_count() != snk_edge_count(n, k):
        return False
    rest = _rest_after_universal(g, k)
    return rest is not None and g.edge_count_within(rest) == 0


def is_snk_plus(g: Graph, k: int) -> bool:
    """Recognize S+_{n,k} up to isomorphism."""
    n = g.n
    if (n, k) == (2, 1):
        return g.edge_count() == 1
    if not 1 <= k <= n - 2 or g.edge_count() != snk_edge_count(n, k) + 1:
        return False
    rest = _rest_after_universal(g, k)
    return rest is not None and g.edge_count_within(rest) == 1


def _rest_after_universal(g: Graph, k: int) -> int | None:
    # Any k universal vertices can serve as the clique of S_{n,k} / S+_{n,k}.
    universal = [u for u in range(g.n) if g.degree(u) == g.n - 1]
    if len(universal) < k:
        return None
    return g.full & ~mask_of(universal[:k])


# -- set-level vocabulary -------------------------------------------------

def private_neighbors(g: Graph, u: int, v: int) -> int:
    """P_v(u): neighbours of u other than v that are not neighbours of v."""
    if not g.has_edge(u, v):
        raise GraphDomainError(f"{u}{v} is not an edge")
    return g.adj[u] & ~(1 << v) & ~g.adj[v]


@dataclass(frozen=True)
class VertexPartition:
    """The split of N(u) into S_u (has a neighbour outside N[u]) and T_u."""

    u: int
    S: int
    T: int
    Y: int

    @property
    def s(self) -> int:
        return self.S.bit_count()

    @property
    def t(self) -> int:
        return self.T.bit_count()


def partition_at(g: Graph, u: int) -> VertexPartition:
    if not 0 <= u < g.n:
        raise GraphDomainError(f"vertex {u} out of range")
    nbrs = g.adj[u]
    y = g.full & ~g.closed_neighbors(u)
    s = mask_of(w for w in bits(nbrs) if g.adj[w] & y)
    return VertexPartition(u, s, nbrs & ~s, y)


def degree_product(g: Graph) -> int:
    """f(G), the product of all degrees, as an exact integer."""
    return prod(g.degrees())


@dataclass(frozen=True)
class Metrics:
    edge_count: int
    degrees: tuple[int, ...]
    degree_product: int


def metrics(g: Graph) -> Metrics:
    degs = tuple(g.degrees())
    return Metrics(sum(degs) // 2, degs, prod(degs))


# -- random graphs for property suites -----------------------------------

def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_connected_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    """A random spanning tree overlaid with G(n, p) edges."""
    order = rng.permutation(n).tolist()
    edges = [(order[i], order[int(rng.integers(i))]) for i in range(1, n)]
    g = random_graph(rng, n, p)
    for u, v in edges:
        g = g.add_edge(u, v)
    return g
