"""Tests for the seeded bulk-trial suite runners."""

import pytest

from oba_lab import ToleranceConfig, run_axiom_suite, run_rigidity_suite

AXIOM_PROPERTIES = {
    "additivity",
    "positive_scaling",
    "multiplicativity",
    "properness",
    "normality",
    "ice_cream_equivalence",
    "cstar_identity",
    "unit_membership",
}

RIGIDITY_PROPERTIES = {
    "trace_bound",
    "dichotomy",
    "identity_gap",
    "golden_ratio",
    "unitary_invariance",
}


def test_axiom_suite_passes_and_covers_all_properties():
    report = run_axiom_suite(trials=300, seed=42)
    assert {r.name for r in report.results} == AXIOM_PROPERTIES
    assert report.all_passed
    for r in report.results:
        assert r.failures == 0
        assert r.worst_slack >= 0


def test_axiom_suite_is_deterministic():
    assert run_axiom_suite(trials=100, seed=7) == run_axiom_suite(trials=100, seed=7)


def test_axiom_suite_trial_counts():
    report = run_axiom_suite(trials=50, seed=1)
    by_name = {r.name: r for r in report.results}
    assert by_name["additivity"].trials == 50
    assert by_name["unit_membership"].trials <= 50


def test_rigidity_suite_passes_and_covers_all_properties():
    report = run_rigidity_suite(trials=300, seed=42)
    assert {r.name for r in report.results} == RIGIDITY_PROPERTIES
    assert report.all_passed


def test_rigidity_suite_is_deterministic():
    assert run_rigidity_suite(trials=100, seed=7) == run_rigidity_suite(trials=100, seed=7)


def test_suites_respect_custom_tolerance():
    tol = ToleranceConfig(abs_tol=1e-6, rel_tol=1e-6)
    assert run_axiom_suite(trials=50, seed=3, tol=tol).all_passed
    assert run_rigidity_suite(trials=50, seed=3, tol=tol).all_passed


def test_nonpositive_trials_rejected():
    with pytest.raises(ValueError):
        run_axiom_suite(trials=0)
    with pytest.raises(ValueError):
        run_rigidity_suite(trials=-5)
