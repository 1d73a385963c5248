"""Kelmans move-neighbour operation and the fixpoint reduction built on it."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cycles import circumference, has_cycle_at_least
from .graph import Graph, GraphDomainError, bits, degree_product, partition_at, private_neighbors
from .spectral import spectral_radius

TIE_TOL = 1e-9
MU_TOL = 1e-9
PERRON_MARGIN = 1e-9
CIRCUMFERENCE_LIMIT = 18


def kelmans(g: Graph, u: int, v: int) -> Graph:
    """G_{u->v}: re-attach the private neighbours of u (w.r.t. v) to v."""
    moved = private_neighbors(g, u, v)
    if not moved:
        return g
    rows = list(g.adj)
    rows[u] &= ~moved
    rows[v] |= moved
    for x in bits(moved):
        rows[x] = rows[x] & ~(1 << u) | 1 << v
    return Graph._trusted(g.n, tuple(rows))


def is_eligible(g: Graph, u: int, v: int) -> bool:
    """Both private sets of the edge uv are non-empty."""
    return bool(private_neighbors(g, u, v)) and bool(private_neighbors(g, v, u))


@lru_cache(maxsize=8192)
def _circumference_length(g: Graph) -> int | None:
    w = circumference(g)
    return None if w is None else w.length


@dataclass(frozen=True)
class TransformStep:
    source: int
    target: int
    moved: int
    mu_before: float
    mu_after: float
    c_before: int | None
    c_after: int | None
    c_checked: bool
    f_before: int
    f_after: int

    @property
    def invariants_hold(self) -> bool:
        ok = self.mu_after >= self.mu_before - MU_TOL and self.f_after < self.f_before
        if self.c_checked:
            if self.c_after is not None and (self.c_before is None or self.c_after > self.c_before):
                ok = False
        return ok

    def to_dict(self) -> dict:
        return {
            "u": self.source, "v": self.target, "moved": list(bits(self.moved)),
            "mu_before": self.mu_before, "mu_after": self.mu_after,
            "c_before": self.c_before if self.c_checked else "unverified",
            "c_after": self.c_after if self.c_checked else "unverified",
            "f_before": str(self.f_before), "f_after": str(self.f_after),
        }


def lemma6_step(g: Graph, u: int, v: int, *, check_circumference: bool | None = None) -> tuple[Graph, TransformStep]:
    """Apply the move whose source is the endpoint with the smaller Perron entry.

    Ties within ``TIE_TOL`` make the smaller vertex id the source.
    """
    if not g.has_edge(u, v):
        raise GraphDomainError(f"{u}{v} is not an edge")
    if not is_eligible(g, u, v):
        raise GraphDomainError(f"edge {u}{v} has an empty private neighbour set")
    if not g.is_connected():
        raise GraphDomainError("lemma6_step needs a connected graph")
    before = spectral_radius(g)
    x = before.perron
    lo, hi = min(u, v), max(u, v)
    if abs(x[lo] - x[hi]) <= TIE_TOL:
        source, target = lo, hi
    elif x[u] < x[v]:
        source, target = u, v
    else:
        source, target = v, u
    moved = private_neighbors(g, source, target)
    h = kelmans(g, source, target)
    after = spectral_radius(h)
    if check_circumference is None:
        check_circumference = g.n <= CIRCUMFERENCE_LIMIT
    c_before = _circumference_length(g) if check_circumference else None
    c_after = _circumference_length(h) if check_circumference else None
    step = TransformStep(
        source, target, moved, before.mu, after.mu, c_before, c_after,
        check_circumference, degree_product(g), degree_product(h),
    )
    return h, step


@dataclass
class TransformTrace:
    initial: Graph
    final: Graph
    steps: list[TransformStep] = field(default_factory=list)


def first_eligible_edge(g: Graph) -> tuple[int, int] | None:
    for u, v in g.edges():
        if is_eligible(g, u, v):
            return u, v
    return None


def is_fixpoint(g: Graph) -> bool:
    return first_eligible_edge(g) is None


def reduce_to_fixpoint(g: Graph, *, check_circumference: bool | None = None) -> TransformTrace:
    """Apply ``lemma6_step`` to the first eligible edge until none is left.

    Terminates because the degree product strictly decreases at every step.
    """
    if not g.is_connected():
        raise GraphDomainError("reduce_to_fixpoint needs a connected graph")
    trace = TransformTrace(g, g)
    cur = g
    while (edge := first_eligible_edge(cur)) is not None:
        cur, step = lemma6_step(cur, *edge, check_circumference=check_circumference)
        trace.steps.append(step)
    trace.final = cur
    return trace


@dataclass(frozen=True)
class ClaimChecks:
    clique_Su: bool
    dominated_Tu: bool
    no_Tu_Yu_edges: bool
    su_le_2k: bool
    min_le_k: bool
    deg_bound: bool
    cycle_free: bool  # G has no cycle of length >= 2k+2

    @property
    def structural(self) -> bool:
        return self.clique_Su and self.dominated_Tu and self.no_Tu_Yu_edges

    @property
    def bounds(self) -> bool:
        return self.su_le_2k and self.min_le_k and self.deg_bound


def claim_checks(g: Graph, u: int, k: int) -> ClaimChecks:
    p = partition_at(g, u)
    s, t = p.s, p.t
    clique = all((g.adj[w] | 1 << w) & p.S == p.S for w in bits(p.S))
    dominated = all(g.adj[w] & p.T == p.T for w in bits(p.S))
    return ClaimChecks(
        clique_Su=clique,
        dominated_Tu=dominated,
        no_Tu_Yu_edges=g.cross_edges(p.T, p.Y) == 0,
        su_le_2k=s <= 2 * k,
        min_le_k=min(s, t) <= k,
        deg_bound=s < t or g.degree(u) <= 2 * k + 1,
        cycle_free=2 * k + 2 > g.n or not has_cycle_at_least(g, 2 * k + 2),
    )


@dataclass(frozen=True)
class PerronViolation:
    u: int
    v: int
    relation: str  # "x_v > x_u" or "x_v == x_u"
    difference: float


def perron_monotonicity_check(g: Graph) -> list[PerronViolation]:
    """Test the Perron-entry relations implied by empty private sets on each edge.

    P_v(u) empty and P_u(v) non-empty requires x_v > x_u; both empty requires
    x_v == x_u. Margins are ``PERRON_MARGIN``.
    """
    if not g.is_connected():
        raise GraphDomainError("perron_monotonicity_check needs a connected graph")
    x = spectral_radius(g).perron
    out = []
    for a, b in g.edges():
        for u, v in ((a, b), (b, a)):
            pu = private_neighbors(g, u, v)
            pv = private_neighbors(g, v, u)
            diff = float(x[v] - x[u])
            if not pu and pv and not diff > PERRON_MARGIN:
                out.append(PerronViolation(u, v, "x_v > x_u", diff))
            elif not pu and not pv and u < v and abs(diff) > PERRON_MARGIN:
                out.append(PerronViolation(u, v, "x_v == x_u", diff))
    return out
