"""Seeded steepest-ascent search for high spectral radius under a cycle constraint."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..cycles import DEFAULT_BUDGET, BudgetExceeded
from ..graph import Graph, GraphDomainError
from ..spectral import spectral_radius
from .graph6 import to_g6_str
from .scan import CycleConstraint, ScanRecord, Target

log = logging.getLogger(__name__)

PLATEAU_TOL = 1e-12


@dataclass
class SearchResult:
    best: ScanRecord
    mu_target: float
    evaluations: int
    restarts: int
    skipped: int
    history: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "best": self.best.to_dict(),
            "mu_target": self.mu_target,
            "evaluations": self.evaluations,
            "restarts": self.restarts,
            "skipped": self.skipped,
            "history": self.history,
        }


def random_tree(rng: np.random.Generator, n: int) -> Graph:
    order = rng.permutation(n).tolist()
    return Graph.from_edges(n, [(order[i], order[int(rng.integers(i))]) for i in range(1, n)])


def hillclimb_search(
    n: int,
    k: int,
    constraint: CycleConstraint,
    seed: int,
    budget: int,
    *,
    target: Target | str = Target.SNK,
    oracle_budget: int = DEFAULT_BUDGET,
) -> SearchResult:
    """Maximize the spectral radius over constraint-free graphs on n vertices.

    Each restart begins at a seeded random tree (acyclic, hence free) and
    repeatedly adds the edge giving the largest spectral radius among those
    keeping the graph free, until no addition gains more than PLATEAU_TOL.
    ``budget`` caps the number of spectral-radius evaluations. Deleting an
    edge never raises the spectral radius, so only additions are scored.
    """
    if not 2 <= n <= 64:
        raise GraphDomainError(f"n must be in 2..64, got {n}")
    target = Target(target)
    rng = np.random.default_rng(seed)
    evaluations = 0
    skipped = 0
    restarts = 0
    history: list[dict] = []
    best: tuple[float, Graph] | None = None

    while evaluations < budget:
        g = random_tree(rng, n)
        mu = spectral_radius(g).mu
        evaluations += 1
        step = 0
        history.append({"restart": restarts, "step": step, "mu": mu, "edges": g.edge_count()})
        while evaluations < budget:
            scored = []
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v) or evaluations >= budget:
                        continue
                    h = g.add_edge(u, v)
                    scored.append((spectral_radius(h).mu, u, v, h))
                    evaluations += 1
            # Stable sort keeps lexicographic edge order among equal values.
            scored.sort(key=lambda item: -item[0])
            move = None
            for mu_h, u, v, h in scored:
                if mu_h <= mu + PLATEAU_TOL:
                    break
                try:
                    if constraint.is_free(h, oracle_budget):
                        move = (mu_h, u, v, h)
                        break
                except BudgetExceeded:
                    skipped += 1
                    log.warning("oracle budget exceeded on candidate %s; skipped", to_g6_str(h))
            if move is None:
                break
            mu, u, v, g = move
            step += 1
            history.append({"restart": restarts, "step": step, "mu": mu, "edges": g.edge_count(), "added": [u, v]})
        if best is None or mu > best[0] + PLATEAU_TOL:
            best = (mu, g)
        restarts += 1

    mu, g = best
    if not constraint.is_free(g, oracle_budget):  # pragma: no cover - guarded by construction
        raise AssertionError("search produced a graph violating its constraint")
    record = ScanRecord(to_g6_str(g), n, k, str(constraint), mu, True, target.recognize(g, k))
    mu_target = spectral_radius(target.build(n, k)).mu
    return SearchResult(record, mu_target, evaluations, restarts, skipped, history)
