"""Spectral radius, Perron vectors and quotient-polynomial certificates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graph import Graph, GraphDomainError, bits, construct_snk_plus, disjoint_union, join, complete

RAYLEIGH_TOL = 1e-13
RAYLEIGH_STREAK = 3
RESIDUAL_TARGET = 1e-12
RESIDUAL_MAX = 1e-10
MAX_ITERATIONS = 200_000
CERTIFICATE_TOL = 1e-9
MERGE_GAP = 1e-9


class ConvergenceError(RuntimeError):
    """Power iteration hit its iteration cap without meeting the residual bound."""


@dataclass(frozen=True)
class SpectralResult:
    mu: float
    perron: np.ndarray
    iterations: int
    residual: float


def _power_iteration(a: np.ndarray) -> tuple[float, np.ndarray, int, float]:
    """Dominant eigenpair of a connected graph's adjacency matrix.

    Iterates on A + I, whose spectral radius mu + 1 strictly dominates for a
    connected graph even when it is bipartite.
    """
    n = a.shape[0]
    if n == 1:
        return 0.0, np.ones(1), 0, 0.0
    m = a + np.eye(n)
    x = np.full(n, 1.0 / n)
    prev = math.inf
    streak = 0
    residual = math.inf
    for it in range(1, MAX_ITERATIONS + 1):
        y = m @ x
        rho = float(x @ y) / float(x @ x)
        x = y / y.sum()
        streak = streak + 1 if abs(rho - prev) <= RAYLEIGH_TOL else 0
        prev = rho
        if streak >= RAYLEIGH_STREAK:
            ax = a @ x
            mu = float(x @ ax) / float(x @ x)
            residual = float(np.max(np.abs(ax - mu * x)))
            if residual <= RESIDUAL_TARGET:
                return mu, x, it, residual
    ax = a @ x
    mu = float(x @ ax) / float(x @ x)
    residual = float(np.max(np.abs(ax - mu * x)))
    if residual <= RESIDUAL_MAX:
        return mu, x, MAX_ITERATIONS, residual
    raise ConvergenceError(
        f"power iteration did not converge in {MAX_ITERATIONS} iterations "
        f"(n={n}, rayleigh={prev - 1:.15g}, residual={residual:.3g})"
    )


def spectral_radius(g: Graph) -> SpectralResult:
    """Largest adjacency eigenvalue with an L1-normalized Perron vector.

    For a disconnected graph each component is solved separately; the vector
    is supported on the first component attaining the maximum.
    """
    a = g.adjacency_matrix(dtype=np.float64)
    comps = g.components()
    if len(comps) == 1:
        mu, x, it, res = _power_iteration(a)
        return SpectralResult(mu, x, it, res)
    best = None
    total_iterations = 0
    for comp in comps:
        idx = list(bits(comp))
        mu, x, it, res = _power_iteration(a[np.ix_(idx, idx)])
        total_iterations += it
        if best is None or mu > best[0] + 1e-12:
            best = (mu, idx, x, res)
    mu, idx, x, res = best
    perron = np.zeros(g.n)
    perron[idx] = x
    return SpectralResult(mu, perron, total_iterations, res)


def mu_snk_closed_form(n: int, k: int) -> float:
    """Larger root of x^2 - (k-1)x - k(n-k), the spectral radius of S_{n,k}."""
    if not 1 <= k < n:
        raise GraphDomainError(f"need 1 <= k < n, got n={n}, k={k}")
    return (k - 1) / 2 + math.sqrt(k * (n - k) + (k - 1) ** 2 / 4)


def larger_root(p: float, q: float) -> float:
    """Larger real root of x^2 - p x - q (nan when the roots are complex)."""
    disc = p * p / 4 + q
    if disc < 0:
        return math.nan
    return p / 2 + math.sqrt(disc)


def _neighbor_degree_sums(g: Graph) -> list[int]:
    # Column sums of A^2: sum of degrees over the neighbours of each vertex.
    degs = g.degrees()
    return [sum(degs[w] for w in bits(row)) for row in g.adj]


def column_sum_combinatorial(g: Graph, u: int, k: int) -> int:
    """B_u for B = A^2 - (k-1)A - k(n-k)I via neighbourhood edge counts."""
    nbrs = g.adj[u]
    y = g.full & ~g.closed_neighbors(u)
    d = nbrs.bit_count()
    return g.cross_edges(nbrs, y) + 2 * g.edge_count_within(nbrs) - (k - 2) * d - k * (g.n - k)


def column_sum_combinatorial_g(g: Graph, v: int, k: int) -> float:
    """B_v for B = A^2 - kA - (k - 1/2)(n-k)I; the value is half-integral."""
    nbrs = g.adj[v]
    y = g.full & ~g.closed_neighbors(v)
    d = nbrs.bit_count()
    twice = 2 * (2 * g.edge_count_within(nbrs) + g.cross_edges(nbrs, y) - (k - 1) * d) - (2 * k - 1) * (g.n - k)
    return twice / 2


class Verdict(str, Enum):
    BOUND_HOLDS = "BoundHolds"
    EQUALITY_CANDIDATE = "EqualityCandidate"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class Certificate:
    a: float
    b: float
    c: float
    mu_ref: float
    column_sums: tuple
    verdict: Verdict
    mu_prime: float
    exact: bool

    def to_dict(self) -> dict:
        return {
            "a": self.a, "b": self.b, "c": self.c, "mu_ref": self.mu_ref,
            "column_sums": list(self.column_sums), "verdict": self.verdict.value,
            "mu_prime": self.mu_prime, "exact": self.exact,
        }


def _is_integral(x) -> bool:
    return isinstance(x, int) or (isinstance(x, float) and x.is_integer())


def quotient_certificate(g: Graph, a: float, b: float, c: float = 0.0, mu_ref: float = 0.0) -> Certificate:
    """Column-sum test for B = A^2 - aA - bI - c(A - mu_ref I).

    If every column sum is <= 0 the spectral radius is at most the larger root
    mu' of x^2 - ax - b - c(x - mu_ref), with equality exactly when all sums
    vanish. Sums are exact integers when a and b are integral and c == 0.
    """
    if not g.is_connected():
        raise GraphDomainError("certificate requires a connected graph (irreducible adjacency matrix)")
    if c == 0 and not (a > 0 and b > 0):
        raise GraphDomainError(f"need a, b > 0 when c == 0, got a={a}, b={b}")
    nds = _neighbor_degree_sums(g)
    degs = g.degrees()
    mu_prime = larger_root(a + c, b - c * mu_ref)
    exact = c == 0 and _is_integral(a) and _is_integral(b)
    if exact:
        ai, bi = int(a), int(b)
        sums = tuple(nds[j] - ai * degs[j] - bi for j in range(g.n))
        if all(s == 0 for s in sums):
            verdict = Verdict.EQUALITY_CANDIDATE
        elif all(s <= 0 for s in sums):
            verdict = Verdict.BOUND_HOLDS
        else:
            verdict = Verdict.INAPPLICABLE
    else:
        sums = tuple(float(nds[j] - a * degs[j] - b - c * (degs[j] - mu_ref)) for j in range(g.n))
        if all(abs(s) <= CERTIFICATE_TOL for s in sums):
            verdict = Verdict.EQUALITY_CANDIDATE
        elif all(s <= CERTIFICATE_TOL for s in sums):
            verdict = Verdict.BOUND_HOLDS
        else:
            verdict = Verdict.INAPPLICABLE
    return Certificate(float(a), float(b), float(c), float(mu_ref), sums, verdict, mu_prime, exact)


@dataclass(frozen=True)
class Lemma8Result:
    mu_merged: float
    mu_split: float
    strict: bool | None  # None when the difference is within the gap

    @property
    def indeterminate(self) -> bool:
        return self.strict is None


def lemma8_graphs(h: Graph | None, t: int, t1: int, t2: int) -> tuple[Graph, Graph]:
    if t != t1 + t2:
        raise GraphDomainError(f"t must equal t1 + t2, got {t} != {t1} + {t2}")
    if min(t1, t2) < 3:
        raise GraphDomainError("S+_(t,1) parts need at least 3 vertices")
    hn = h.n if h is not None else 0
    if hn + t + 1 > 64:
        raise GraphDomainError(f"combined order {hn + t + 1} exceeds 64")
    apex = complete(1)
    merged = join(disjoint_union(h, construct_snk_plus(t, 1)), apex)
    split = join(disjoint_union(disjoint_union(h, construct_snk_plus(t1, 1)), construct_snk_plus(t2, 1)), apex)
    return merged, split


def lemma8_compare(h: Graph | None, t: int, t1: int, t2: int) -> Lemma8Result:
    """Compare (H + S+_{t,1}) v K_1 against (H + S+_{t1,1} + S+_{t2,1}) v K_1."""
    merged, split = lemma8_graphs(h, t, t1, t2)
    mu_m = spectral_radius(merged).mu
    mu_s = spectral_radius(split).mu
    diff = mu_m - mu_s
    strict = None if abs(diff) <= MERGE_GAP else diff > 0
    return Lemma8Result(mu_m, mu_s, strict)
