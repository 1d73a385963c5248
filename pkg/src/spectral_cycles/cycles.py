"""Exact longest-path and longest-cycle search over bitset adjacency.

All searches are depth-first over simple paths with a visited mask. A branch
is cut when the current length plus the number of unvisited vertices still
reachable from its end cannot beat (or reach) the goal. Every search counts
node expansions and raises :class:`BudgetExceeded` rather than return an
answer it has not proven.

Among equally long witnesses the lexicographically smallest vertex sequence
is returned: starts and extensions are tried in ascending order and the best
witness is only replaced by a strictly longer one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .graph import (
    Graph,
    GraphDomainError,
    bits,
    is_snk,
    is_snk_plus,
    mask_of,
    reach,
    snk_edge_count,
)

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """Node budget exhausted; ``best`` holds the best witness found so far."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        return len(set(vs)) == len(vs) and all(g.has_edge(a, b) for a, b in zip(vs, vs[1:]))


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        return (
            len(vs) >= 3
            and len(set(vs)) == len(vs)
            and all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))
        )


class _Stop(Exception):
    pass


class _Counter:
    __slots__ = ("left", "budget")

    def __init__(self, budget):
        self.budget = budget
        self.left = budget

    def tick(self, best_factory):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(f"search exceeded {self.budget} node expansions", best_factory())


# -- paths ----------------------------------------------------------------

def longest_path(g: Graph, budget: int = DEFAULT_BUDGET) -> PathWitness:
    """A maximum-order path (order = number of vertices)."""
    adj = g.adj
    full = g.full
    largest = max(c.bit_count() for c in g.components())
    best: list = [()]
    counter = _Counter(budget)

    def dfs(path, end, visited):
        counter.tick(lambda: PathWitness(best[0]))
        if len(path) > len(best[0]):
            best[0] = tuple(path)
            if len(path) == largest:
                raise _Stop
        free = full & ~visited
        if len(path) + (reach(adj, 1 << end, free) & free).bit_count() <= len(best[0]):
            return
        cand = adj[end] & free
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            path.append(v)
            dfs(path, v, visited | low)
            path.pop()

    try:
        for s in range(g.n):
            dfs([s], s, 1 << s)
    except _Stop:
        pass
    return PathWitness(best[0])


def has_path_order(g: Graph, order: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether G contains a path on at least ``order`` vertices."""
    if order < 1:
        raise GraphDomainError(f"path order must be >= 1, got {order}")
    return find_path_order(g, order, budget) is not None


def find_path_order(g: Graph, order: int, budget: int = DEFAULT_BUDGET) -> PathWitness | None:
    if order <= 1:
        return PathWitness((0,))
    adj = g.adj
    full = g.full
    counter = _Counter(budget)
    found: list = []

    def dfs(path, end, visited):
        counter.tick(lambda: None)
        if len(path) >= order:
            found.append(tuple(path))
            raise _Stop
        free = full & ~visited
        if len(path) + (reach(adj, 1 << end, free) & free).bit_count() < order:
            return
        cand = adj[end] & free
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            path.append(v)
            dfs(path, v, visited | low)
            path.pop()

    try:
        for comp in g.components():
            if comp.bit_count() < order:
                continue
            for s in bits(comp):
                dfs([s], s, 1 << s)
    except _Stop:
        return PathWitness(found[0])
    return None


# -- cycles ---------------------------------------------------------------

def circumference(g: Graph, budget: int = DEFAULT_BUDGET) -> CycleWitness | None:
    """A longest cycle, or None for a forest.

    Each cycle is found from its least vertex ``s`` using only vertices above
    ``s``; the returned witness starts at ``s``.
    """
    adj = g.adj
    n = g.n
    best: list = [()]
    counter = _Counter(budget)

    def current():
        return CycleWitness(best[0]) if best[0] else None

    for s in range(n):
        if n - s <= len(best[0]):
            break
        allowed = g.full & ~((1 << (s + 1)) - 1)
        home = adj[s]
        if reach(adj, 1 << s, allowed | 1 << s).bit_count() <= max(len(best[0]), 2):
            continue

        def dfs(path, end, visited):
            counter.tick(current)
            if len(path) >= 3 and home >> end & 1 and len(path) > len(best[0]):
                best[0] = tuple(path)
            free = allowed & ~visited
            r = reach(adj, 1 << end, free) & free
            if len(path) + r.bit_count() <= len(best[0]):
                return
            if not (r & home):
                return
            cand = adj[end] & free
            while cand:
                low = cand & -cand
                cand ^= low
                v = low.bit_length() - 1
                path.append(v)
                dfs(path, v, visited | low)
                path.pop()

        dfs([s], s, 1 << s)
    return current()


def has_cycle_length_in(g: Graph, lo: int, hi: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether G has a cycle whose length lies in ``[lo, hi]``."""
    return find_cycle_length_in(g, lo, hi, budget) is not None


def find_cycle_length_in(g: Graph, lo: int, hi: int, budget: int = DEFAULT_BUDGET) -> CycleWitness | None:
    lo = max(lo, 3)
    hi = min(hi, g.n)
    if lo > hi:
        return None
    adj = g.adj
    counter = _Counter(budget)
    found: list = []

    def dfs(path, end, visited):
        counter.tick(lambda: None)
        size = len(path)
        if size >= lo and home >> end & 1:
            found.append(tuple(path))
            raise _Stop
        if size == hi:
            return
        free = allowed & ~visited
        r = reach(adj, 1 << end, free) & free
        if size + r.bit_count() < lo or not (r & home):
            return
        cand = adj[end] & free
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            path.append(v)
            dfs(path, v, visited | low)
            path.pop()

    try:
        for s in range(g.n - lo + 1):
            allowed = g.full & ~((1 << (s + 1)) - 1)
            home = adj[s]
            if reach(adj, 1 << s, allowed | 1 << s).bit_count() < lo:
                continue
            dfs([s], s, 1 << s)
    except _Stop:
        return CycleWitness(found[0])
    return None


def has_cycle_at_least(g: Graph, length: int, budget: int = DEFAULT_BUDGET) -> bool:
    if length < 3:
        raise GraphDomainError(f"cycle length must be >= 3, got {length}")
    return has_cycle_length_in(g, length, g.n, budget)


def cycle_lengths_dp(g: Graph) -> set[int]:
    """All cycle lengths of G by dynamic programming over vertex subsets.

    Shares nothing with the depth-first searches, so it serves as an
    independent second oracle. Exponential memory, so n <= 20.
    """
    if g.n > 20:
        raise GraphDomainError("subset DP oracle is limited to n <= 20")
    adj = g.adj
    lengths = set()
    for s in range(g.n):
        above = g.full & ~((1 << (s + 1)) - 1)
        # layer[mask]: endpoints of paths from s covering exactly mask
        layer = {1 << s: 1 << s}
        size = 1
        while layer:
            nxt: dict[int, int] = {}
            for mask, ends in layer.items():
                for v in bits(ends):
                    for w in bits(adj[v] & above & ~mask):
                        m2 = mask | 1 << w
                        nxt[m2] = nxt.get(m2, 0) | 1 << w
            size += 1
            if size >= 3 and any(e & adj[s] for e in nxt.values()):
                lengths.add(size)
            layer = nxt
    return lengths


def circumference_dp(g: Graph) -> int:
    """Circumference via :func:`cycle_lengths_dp`; 0 for forests."""
    return max(cycle_lengths_dp(g), default=0)


# -- paths with both ends in a set -----------------------------------------

def _route_to(adj, start: int, allowed: int, targets: int) -> list[int] | None:
    """Shortest path from ``start`` (excluded) to a target through ``allowed``."""
    parent = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for w in bits(adj[x] & allowed):
                if w in parent:
                    continue
                parent[w] = x
                if targets >> w & 1:
                    route = [w]
                    while parent[route[-1]] != start:
                        route.append(parent[route[-1]])
                    return route[::-1]
                nxt.append(w)
        frontier = nxt
    return None


def path_with_ends_in(
    g: Graph,
    a: int,
    b: int,
    min_order: int,
    min_b: int,
    budget: int = DEFAULT_BUDGET,
) -> PathWitness | None:
    """A path with both ends in mask ``a``, at least ``min_order`` vertices and
    at least ``min_b`` vertices from mask ``b``; None if no such path exists.
    """
    if a & b or (a | b) != g.full:
        raise GraphDomainError("A and B must partition V(G)")
    if not a:
        return None
    adj = g.adj
    full = g.full
    counter = _Counter(budget)
    found: list = []

    def dfs(path, end, visited, nb):
        counter.tick(lambda: None)
        size = len(path)
        free = full & ~visited
        if size >= min_order and nb >= min_b:
            if a >> end & 1:
                found.append(tuple(path))
                raise _Stop
            # Thresholds already met: any route to an unvisited A vertex finishes.
            route = _route_to(adj, end, free, a)
            if route is not None:
                found.append(tuple(path) + tuple(route))
                raise _Stop
            return
        r = reach(adj, 1 << end, free) & free
        if size + r.bit_count() < min_order or nb + (r & b).bit_count() < min_b:
            return
        if not (r & a):
            return
        cand = adj[end] & free
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            path.append(v)
            dfs(path, v, visited | low, nb + (b >> v & 1))
            path.pop()

    try:
        for s in bits(a):
            dfs([s], s, 1 << s, 0)
    except _Stop:
        return PathWitness(found[0])
    return None


# -- fact checkers ---------------------------------------------------------

class FactStatus(str, Enum):
    VACUOUS = "Vacuous"
    VERIFIED = "Verified"
    COUNTEREXAMPLE = "Counterexample"


@dataclass(frozen=True)
class FactResult:
    status: FactStatus
    witness: PathWitness | None = None
    note: str = ""


FACTS = ("EG", "F1", "F2", "F4")


def check_fact(
    g: Graph,
    which: str,
    *,
    k: int | None = None,
    ell: int | None = None,
    plus: bool = False,
    clique: Sequence[int] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> FactResult:
    """Evaluate one edge-extremal path fact on a concrete graph.

    ``EG``  e(G) > (ell-2)n/2 forces a path on ell vertices.
    ``F1``  connected, n > 3k, e(G) >= e(S_{n,k}) forces P_{2k+2} unless G = S_{n,k}.
    ``F2``  same with S+_{n,k} and P_{2k+3}.
    ``F4``  G containing S_{n,k} (S+_{n,k} with ``plus``) on the clique ``clique``
            (default 0..k-1) has a path on >= 2k-1 (2k) vertices with both ends
            in the clique.
    """
    which = which.upper()
    n = g.n
    e = g.edge_count()
    if which == "EG":
        if ell is None or ell < 1:
            raise GraphDomainError("EG needs ell >= 1")
        if 2 * e <= (ell - 2) * n:
            return FactResult(FactStatus.VACUOUS)
        w = find_path_order(g, ell, budget)
        if w is None:
            return FactResult(FactStatus.COUNTEREXAMPLE, note=f"no P_{ell} with e={e}")
        return FactResult(FactStatus.VERIFIED, w)

    if k is None or k < 1:
        raise GraphDomainError(f"{which} needs k >= 1")

    if which in ("F1", "F2"):
        bound = snk_edge_count(n, k) + (which == "F2")
        order = 2 * k + 2 + (which == "F2")
        if n <= 3 * k or not g.is_connected() or e < bound:
            return FactResult(FactStatus.VACUOUS)
        w = find_path_order(g, order, budget)
        if w is not None:
            return FactResult(FactStatus.VERIFIED, w)
        recognize = is_snk if which == "F1" else is_snk_plus
        if e == bound and recognize(g, k):
            return FactResult(FactStatus.VERIFIED, note="equality clause")
        return FactResult(FactStatus.COUNTEREXAMPLE, note=f"no P_{order} with e={e}")

    if which == "F4":
        if n < 2 * k:
            raise GraphDomainError("F4 needs n >= 2k")
        if plus and k < 2:
            # a path on >= 2 vertices cannot start and end in a single vertex
            raise GraphDomainError("F4 with plus needs k >= 2")
        kmask = mask_of(clique) if clique is not None else (1 << k) - 1
        if kmask.bit_count() != k or kmask & ~g.full:
            raise GraphDomainError("clique must name k distinct vertices")
        rest = g.full & ~kmask
        embedded = all((g.adj[u] | 1 << u) == g.full for u in bits(kmask))
        if plus:
            embedded = embedded and g.edge_count_within(rest) >= 1
        if not embedded:
            return FactResult(FactStatus.VACUOUS)
        order = 2 * k if plus else 2 * k - 1
        w = path_with_ends_in(g, kmask, rest, order, 0, budget)
        if w is None:
            return FactResult(FactStatus.COUNTEREXAMPLE, note=f"no P_>={order} with ends in the clique")
        return FactResult(FactStatus.VERIFIED, w)

    raise GraphDomainError(f"unknown fact {which!r}; expected one of {FACTS}")
