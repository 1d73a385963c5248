"""Spectral extremal machinery for graphs without long cycles."""

from .graph import (
    Graph,
    GraphDomainError,
    VertexPartition,
    construct_snk,
    construct_snk_plus,
    degree_product,
    disjoint_union,
    is_snk,
    is_snk_plus,
    join,
    metrics,
    partition_at,
    private_neighbors,
)
from .spectral import (
    Certificate,
    ConvergenceError,
    SpectralResult,
    Verdict,
    column_sum_combinatorial,
    column_sum_combinatorial_g,
    lemma8_compare,
    mu_snk_closed_form,
    quotient_certificate,
    spectral_radius,
)
from .cycles import (
    BudgetExceeded,
    CycleWitness,
    FactStatus,
    PathWitness,
    check_fact,
    circumference,
    has_cycle_at_least,
    has_path_order,
    longest_path,
    path_with_ends_in,
)
from .transforms import (
    TransformStep,
    TransformTrace,
    claim_checks,
    kelmans,
    lemma6_step,
    perron_monotonicity_check,
    reduce_to_fixpoint,
)

__version__ = "0.1.0"
