import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spectral_cycles.graph import (
    Graph,
    GraphDomainError,
    complete,
    construct_snk,
    construct_snk_plus,
    cycle,
    disjoint_union,
    empty,
    path,
    random_connected_graph,
    random_graph,
    star,
)
from spectral_cycles.spectral import (
    Verdict,
    column_sum_combinatorial,
    column_sum_combinatorial_g,
    larger_root,
    lemma8_compare,
    lemma8_graphs,
    mu_snk_closed_form,
    quotient_certificate,
    spectral_radius,
)

from conftest import eig_mu, graphs


@pytest.mark.parametrize("n", [1, 2, 3, 7, 20])
def test_complete_graph(n):
    r = spectral_radius(complete(n))
    assert r.mu == pytest.approx(n - 1, abs=1e-12)
    assert np.allclose(r.perron, 1 / n)


def test_cycle_and_star():
    assert spectral_radius(cycle(5)).mu == pytest.approx(2.0, abs=1e-12)
    assert spectral_radius(star(4)).mu == pytest.approx(2.0, abs=1e-12)
    assert spectral_radius(path(2)).mu == pytest.approx(1.0, abs=1e-12)


def test_edgeless_graph_has_zero_radius():
    r = spectral_radius(empty(4))
    assert r.mu == 0.0


def test_s52_against_eigvalsh():
    g = construct_snk(5, 2)
    # x^2 - x - 6 has larger root 3
    assert spectral_radius(g).mu == pytest.approx(3.0, abs=1e-12)
    assert eig_mu(g) == pytest.approx(3.0, abs=1e-12)


def test_closed_form_examples():
    assert mu_snk_closed_form(10, 2) == pytest.approx(4.5311288741, abs=1e-10)
    assert mu_snk_closed_form(5, 2) == pytest.approx(3.0)
    assert mu_snk_closed_form(6, 1) == pytest.approx(math.sqrt(5))
    with pytest.raises(GraphDomainError):
        mu_snk_closed_form(4, 4)


def test_larger_root():
    assert larger_root(1, 6) == pytest.approx(3.0)
    assert math.isnan(larger_root(0, -1))


@pytest.mark.parametrize("n,k", [(n, k) for n in range(3, 25) for k in range(1, n)])
def test_closed_form_matches_power_iteration(n, k):
    assert abs(spectral_radius(construct_snk(n, k)).mu - mu_snk_closed_form(n, k)) <= 1e-9


def test_disconnected_takes_largest_component():
    g = disjoint_union(cycle(4), complete(5))
    r = spectral_radius(g)
    assert r.mu == pytest.approx(4.0, abs=1e-12)
    assert np.all(r.perron[:4] == 0) and np.all(r.perron[4:] > 0)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=16))
def test_power_iteration_matches_eigvalsh(g):
    r = spectral_radius(g)
    assert abs(r.mu - eig_mu(g)) <= 1e-9
    assert np.all(r.perron >= 0)
    if g.edge_count():
        assert r.perron.sum() == pytest.approx(1.0)
        a = g.adjacency_matrix(np.float64)
        assert np.abs(a @ r.perron - r.mu * r.perron).max() <= 1e-9


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=12), st.data())
def test_adding_an_edge_never_lowers_radius(g, data):
    missing = [(u, v) for v in range(g.n) for u in range(v) if not g.has_edge(u, v)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    assert spectral_radius(g.add_edge(u, v)).mu >= spectral_radius(g).mu - 1e-12


def _matrix_sums(g: Graph, a, b) -> np.ndarray:
    m = g.adjacency_matrix(np.int64)
    return (m @ m - a * m - b * np.eye(g.n, dtype=np.int64)).sum(axis=0)


def test_column_sum_examples():
    assert column_sum_combinatorial(cycle(5), 0, 2) == -4
    assert column_sum_combinatorial(complete(4), 0, 1) == 6
    assert column_sum_combinatorial_g(cycle(5), 0, 2) == -4.5
    assert column_sum_combinatorial_g(complete(2), 0, 1) == -0.5


@pytest.mark.parametrize("k", [1, 2, 3])
def test_column_sums_agree_with_matrix(rng, k):
    for _ in range(60):
        n = int(rng.integers(max(k + 1, 2), 15))
        g = random_graph(rng, n, float(rng.uniform(0.1, 0.9)))
        exact = _matrix_sums(g, k - 1, k * (n - k))
        assert [column_sum_combinatorial(g, u, k) for u in range(n)] == exact.tolist()
        m = g.adjacency_matrix(np.float64)
        half = (m @ m - k * m - (k - 0.5) * (n - k) * np.eye(n)).sum(axis=0)
        got = np.array([column_sum_combinatorial_g(g, u, k) for u in range(n)])
        assert np.abs(got - half).max() <= 1e-12


@pytest.mark.parametrize("n,k", [(5, 2), (9, 3), (12, 4), (30, 2)])
def test_certificate_equality_on_snk(n, k):
    cert = quotient_certificate(construct_snk(n, k), k - 1, k * (n - k))
    assert cert.exact and cert.verdict is Verdict.EQUALITY_CANDIDATE
    assert all(s == 0 for s in cert.column_sums)
    assert cert.mu_prime == pytest.approx(mu_snk_closed_form(n, k))


def test_certificate_bound_holds_on_c5():
    cert = quotient_certificate(cycle(5), 1, 6)
    assert cert.verdict is Verdict.BOUND_HOLDS
    assert cert.column_sums == (-4,) * 5
    assert spectral_radius(cycle(5)).mu <= cert.mu_prime


def test_certificate_inapplicable_on_k5():
    cert = quotient_certificate(complete(5), 1, 6)
    assert cert.verdict is Verdict.INAPPLICABLE
    assert cert.column_sums == (6,) * 5


def test_certificate_domain_errors():
    with pytest.raises(GraphDomainError):
        quotient_certificate(empty(3), 1, 1)
    with pytest.raises(GraphDomainError):
        quotient_certificate(cycle(5), 0, 3)


def test_certificate_with_shift_term():
    # a nonzero shift switches to float column sums
    g = construct_snk_plus(8, 2)
    cert = quotient_certificate(g, 1, 12, c=0.5, mu_ref=1.0)
    assert not cert.exact
    m = g.adjacency_matrix(np.float64)
    direct = (m @ m - 1.5 * m - (12 - 0.5) * np.eye(8)).sum(axis=0)
    assert np.abs(np.array(cert.column_sums) - direct).max() <= 1e-12
    assert cert.mu_prime == pytest.approx(larger_root(1.5, 11.5))


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2, max_n=10), st.integers(1, 20), st.integers(1, 20))
def test_bound_holds_is_sound(g, a, b):
    if not g.is_connected():
        return
    cert = quotient_certificate(g, a, b)
    mu = eig_mu(g)
    if cert.verdict is Verdict.BOUND_HOLDS:
        assert mu <= cert.mu_prime + 1e-9
    elif cert.verdict is Verdict.EQUALITY_CANDIDATE:
        assert mu == pytest.approx(cert.mu_prime, abs=1e-9)


def test_merged_and_split_graph_shapes():
    merged, split = lemma8_graphs(complete(3), 7, 3, 4)
    assert merged.n == split.n == 11
    # S+_{t,1} is a star on t vertices plus one leaf edge: t edges
    assert merged.edge_count() == 3 + 7 + 10
    assert split.edge_count() == 3 + 3 + 4 + 10
    with pytest.raises(GraphDomainError):
        lemma8_graphs(None, 7, 2, 5)
    with pytest.raises(GraphDomainError):
        lemma8_graphs(None, 8, 3, 4)


@pytest.mark.parametrize("h", [None, complete(3)])
@pytest.mark.parametrize("t1,t2", [(3, 3), (3, 5), (4, 4), (5, 7)])
def test_merged_beats_split_against_eigvalsh(h, t1, t2):
    res = lemma8_compare(h, t1 + t2, t1, t2)
    merged, split = lemma8_graphs(h, t1 + t2, t1, t2)
    assert res.mu_merged == pytest.approx(eig_mu(merged), abs=1e-10)
    assert res.mu_split == pytest.approx(eig_mu(split), abs=1e-10)
    assert res.strict is True and not res.indeterminate


def test_random_connected_graphs_are_connected(rng):
    for _ in range(100):
        n = int(rng.integers(1, 20))
        assert random_connected_graph(rng, n, float(rng.uniform(0, 0.5))).is_connected()
