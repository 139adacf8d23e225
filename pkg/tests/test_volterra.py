"""Tests for the quadrature matrices, the resolvent, and the witness harness."""

import math

import numpy as np
import pytest

from oba_lab import (
    MatrixOperator,
    QuadratureRule,
    ToleranceConfig,
    build_witness,
    convergence_study,
    eigenvalues,
    gelfand_radius,
    growth_diagnostic,
    multiset_distance,
    resolvent_at_identity,
    resolvent_residual,
    spectral_norm,
    volterra_matrix,
)

TOL = ToleranceConfig()

# dense-SVD oracle values for ||T_n - I||, trapezoid rule (frozen before build)
ORACLE_DEVIATION = {256: 0.442119035758, 512: 0.44212020365614096, 1024: 0.442120495630306}


class TestVolterraMatrix:
    def test_left_endpoint_two_points(self):
        v = volterra_matrix(2, QuadratureRule.LEFT_ENDPOINT)
        assert np.array_equal(v.entries, np.array([[0.0, 0.0], [0.5, 0.0]]))

    def test_trapezoid_two_points(self):
        v = volterra_matrix(2, QuadratureRule.TRAPEZOID)
        assert np.array_equal(v.entries, np.array([[0.25, 0.0], [0.5, 0.25]]))

    def test_left_endpoint_is_quasinilpotent(self):
        for n in (2, 5, 16):
            v = volterra_matrix(n, QuadratureRule.LEFT_ENDPOINT)
            assert multiset_distance(eigenvalues(v), np.zeros(n)) == 0.0

    def test_trapezoid_diagonal_spectrum(self):
        n = 8
        v = volterra_matrix(n, QuadratureRule.TRAPEZOID)
        assert multiset_distance(eigenvalues(v), np.full(n, 1 / (2 * n))) == 0.0

    def test_trapezoid_accretive(self):
        for n in (4, 64, 256):
            v = volterra_matrix(n, QuadratureRule.TRAPEZOID).entries
            assert np.linalg.eigvalsh(v + v.T).min() >= -1e-12

    def test_grid_bounds_enforced(self):
        for bad in (0, -1, 4097):
            with pytest.raises(ValueError):
                volterra_matrix(bad, QuadratureRule.TRAPEZOID)

    def test_nilpotency_index_matches_grid(self):
        n = 8
        v = volterra_matrix(n, QuadratureRule.LEFT_ENDPOINT)
        values = gelfand_radius(v, n)
        assert values[n - 1] == 0.0
        assert values[n - 2] > 0.0


class TestResolvent:
    def test_scalar_grid(self):
        v = volterra_matrix(1, QuadratureRule.TRAPEZOID)
        t = resolvent_at_identity(v)
        assert t.entries[0, 0] == pytest.approx(2.0 / 3.0, abs=1e-15)

    def test_two_point_hand_inverse(self):
        v = volterra_matrix(2, QuadratureRule.LEFT_ENDPOINT)
        t = resolvent_at_identity(v)
        assert np.array_equal(t.entries, np.array([[1.0, 0.0], [-0.5, 1.0]]))

    def test_two_point_norm_closed_form(self):
        # largest root of the 2x2 singular-value quadratic of [[1,0],[-1/2,1]]
        closed_form = math.sqrt((2.25 + math.sqrt(1.0625)) / 2)
        t = resolvent_at_identity(volterra_matrix(2, QuadratureRule.LEFT_ENDPOINT))
        brute_force = np.linalg.svd(t.entries, compute_uv=False)[0]
        assert spectral_norm(t) == pytest.approx(closed_form, abs=1e-12)
        assert spectral_norm(t) == pytest.approx(brute_force, abs=1e-14)

    def test_residual_small_on_both_rules(self):
        for rule in QuadratureRule:
            for n in (2, 16, 128):
                v = volterra_matrix(n, rule)
                t = resolvent_at_identity(v)
                assert resolvent_residual(v, t) <= 1e-10

    def test_general_solve_fallback(self):
        m = np.array([[0.0, 1.0], [-0.5, 0.0]])  # not lower triangular
        t = resolvent_at_identity(MatrixOperator(m))
        assert np.allclose((np.eye(2) + m) @ t.entries, np.eye(2), atol=1e-12)

    def test_singular_input_raises(self):
        from oba_lab import ComputationError

        with pytest.raises(ComputationError, match="singular"):
            resolvent_at_identity(MatrixOperator(np.array([[0.0, 1.0], [1.0, 0.0]])))
        with pytest.raises(ComputationError, match="singular"):
            resolvent_at_identity(MatrixOperator(np.array([[-1.0, 0.0], [1.0, 2.0]])))

    def test_result_is_structurally_triangular(self):
        t = resolvent_at_identity(volterra_matrix(64, QuadratureRule.TRAPEZOID))
        assert not np.any(np.triu(t.entries, 1))


class TestWitness:
    def test_trapezoid_facts_at_moderate_grid(self):
        w = build_witness(128, QuadratureRule.TRAPEZOID, TOL)
        h = 1 / 128
        assert w.h == pytest.approx(h)
        assert w.xi_used == 1.0
        assert w.cone_member
        assert not w.geq_unit
        assert w.norm_excess <= 1e-10
        assert w.cluster_radius == pytest.approx((h / 2) / (1 + h / 2), abs=1e-12)
        assert w.deviation > 0.1

    def test_left_endpoint_norm_exceeds_one(self):
        w = build_witness(16, QuadratureRule.LEFT_ENDPOINT, TOL)
        assert w.norm_excess > 0
        assert w.xi_used == pytest.approx(w.norm_T)
        assert w.cone_member  # xi_used absorbs the discretization excess
        assert not w.geq_unit
        assert w.cluster_radius == 0.0  # unit-diagonal triangular: spectrum exactly {1}

    def test_witness_chain_across_rules_and_grids(self):
        for rule in QuadratureRule:
            for n in (8, 32, 64):
                w = build_witness(n, rule, TOL)
                assert w.cone_member
                assert not w.geq_unit
                assert w.deviation > 0.1

    def test_xi_used_is_max_of_one_and_norm(self):
        for rule in QuadratureRule:
            w = build_witness(32, rule, TOL)
            assert w.xi_used == max(1.0, w.norm_T)


class TestConvergence:
    def test_rows_sorted_and_complete(self):
        rows = convergence_study([64, 16, 32], QuadratureRule.TRAPEZOID, TOL)
        assert [r.n for r in rows] == [16, 32, 64]

    def test_trapezoid_sandwich_small_grids(self):
        rows = convergence_study([16, 32, 64, 128], QuadratureRule.TRAPEZOID, TOL)
        for r in rows:
            assert 1 / (1 + r.h / 2) <= r.norm_T <= 1 + 1e-10
            assert abs(1 - r.norm_T) <= r.h / 2

    def test_deviation_matches_frozen_oracle(self):
        rows = convergence_study([256, 512], QuadratureRule.TRAPEZOID, TOL)
        for r in rows:
            assert r.deviation == pytest.approx(ORACLE_DEVIATION[r.n], abs=1e-9)

    def test_left_endpoint_two_point_row(self):
        (row,) = convergence_study([2], QuadratureRule.LEFT_ENDPOINT, TOL)
        assert row.norm_T == pytest.approx(1.280776, abs=1e-6)
        assert row.norm_T > 1

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            convergence_study([], QuadratureRule.TRAPEZOID, TOL)


class TestGrowthDiagnostic:
    def test_first_term_is_deviation_norm(self):
        values = growth_diagnostic(2, 1)
        assert values[0] == pytest.approx(0.5, abs=1e-15)

    def test_rejects_k_max_at_grid_size(self):
        with pytest.raises(ValueError):
            growth_diagnostic(2, 2)
        with pytest.raises(ValueError):
            growth_diagnostic(8, 12)

    def test_rejects_nonpositive_k_max(self):
        with pytest.raises(ValueError):
            growth_diagnostic(8, 0)

    def test_matches_direct_power_norms_small(self):
        n, k_max = 16, 8
        values = growth_diagnostic(n, k_max)
        v = volterra_matrix(n, QuadratureRule.LEFT_ENDPOINT)
        base = resolvent_at_identity(v).entries - np.eye(n)
        power = np.eye(n)
        for k in range(1, k_max + 1):
            power = power @ base
            direct = k * np.linalg.svd(power, compute_uv=False)[0] ** (1 / k)
            assert values[k - 1] == pytest.approx(direct, rel=1e-10)
