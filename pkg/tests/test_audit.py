import pytest

from spectral_cycles.graph import GraphDomainError, construct_snk, construct_snk_plus, cycle
from spectral_cycles.spectral import mu_snk_closed_form
from spectral_cycles.verify.audit import classify_against_theorem


def test_snk_is_consistent_by_recognition():
    a = classify_against_theorem(construct_snk(10, 2), 2)
    assert a.mu == pytest.approx(mu_snk_closed_form(10, 2), abs=1e-9)
    assert a.hypothesis_a and not a.has_long_cycle_a and a.is_snk and a.consistent_a
    assert not a.hypothesis_b and a.consistent_b
    assert not a.threshold_met


def test_cycle_fails_hypothesis():
    a = classify_against_theorem(cycle(10), 2)
    assert a.mu == pytest.approx(2.0, abs=1e-12)
    assert not a.hypothesis_a and a.has_long_cycle_a and a.consistent_a


def test_snk_plus_uses_exception_clause():
    a = classify_against_theorem(construct_snk_plus(10, 2), 2)
    assert a.has_long_cycle_a and not a.has_long_cycle_b
    assert a.hypothesis_b and a.is_snk_plus and a.consistent_b
    assert a.consistent_a


def test_threshold_flag_and_domain():
    assert classify_against_theorem(construct_snk(13, 1), 1).threshold_met
    with pytest.raises(GraphDomainError):
        classify_against_theorem(cycle(4), 4)
    assert classify_against_theorem(cycle(4), 2).to_dict()["n"] == 4
