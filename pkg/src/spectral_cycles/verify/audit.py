"""Per-graph audit against the long-cycle spectral statements."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from ..cycles import DEFAULT_BUDGET, has_cycle_at_least
from ..graph import Graph, GraphDomainError, construct_snk, construct_snk_plus, is_snk, is_snk_plus
from ..spectral import spectral_radius

MU_TOL = 1e-9


@dataclass(frozen=True)
class TheoremAudit:
    n: int
    k: int
    mu: float
    mu_snk: float
    mu_snk_plus: float | None
    has_long_cycle_a: bool  # cycle of length >= 2k+1
    has_long_cycle_b: bool  # cycle of length >= 2k+2
    is_snk: bool
    is_snk_plus: bool
    hypothesis_a: bool
    hypothesis_b: bool
    consistent_a: bool
    consistent_b: bool
    threshold_met: bool  # n >= 13k^2, where the statements are proven

    def to_dict(self) -> dict:
        return asdict(self)


def classify_against_theorem(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> TheoremAudit:
    """Evaluate both implications (mu >= mu(S) => long cycle unless G = S) on G."""
    n = g.n
    if not 1 <= k < n:
        raise GraphDomainError(f"need 1 <= k < n, got n={n}, k={k}")
    mu = spectral_radius(g).mu
    mu_snk = spectral_radius(construct_snk(n, k)).mu
    plus_ok = k <= n - 2 or (n, k) == (2, 1)
    mu_plus = spectral_radius(construct_snk_plus(n, k)).mu if plus_ok else None
    c_a = 2 * k + 1 <= n and has_cycle_at_least(g, 2 * k + 1, budget)
    c_b = 2 * k + 2 <= n and has_cycle_at_least(g, 2 * k + 2, budget)
    rec_a = is_snk(g, k)
    rec_b = is_snk_plus(g, k)
    hyp_a = mu >= mu_snk - MU_TOL
    hyp_b = mu_plus is not None and mu >= mu_plus - MU_TOL
    return TheoremAudit(
        n=n, k=k, mu=mu, mu_snk=mu_snk, mu_snk_plus=mu_plus,
        has_long_cycle_a=c_a, has_long_cycle_b=c_b,
        is_snk=rec_a, is_snk_plus=rec_b,
        hypothesis_a=hyp_a, hypothesis_b=hyp_b,
        consistent_a=not hyp_a or c_a or rec_a,
        consistent_b=not hyp_b or c_b or rec_b,
        threshold_met=n >= 13 * k * k,
    )
