"""Discretized Volterra integration operator, its resolvent at the identity, and
the witness/convergence harness built on them.

On the uniform grid x_i = i/n the running integral becomes a lower triangular
matrix V_n.  The two quadrature rules split the continuous operator's key
properties between them: the left-endpoint rule keeps quasinilpotency (the
spectrum is exactly {0}), while the trapezoid rule keeps accretivity
(V_n + V_n^T is positive semidefinite), which is what pins the resolvent norm
at 1.  No finite matrix can keep both at once, so each rule tells half of the
infinite-dimensional story.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from . import algebra
from .algebra import ProductElement
from .errors import ComputationError
from .operators import DEFAULT_TOLERANCE, MatrixOperator, ToleranceConfig
from .spectral import cluster_radius, eigenvalues, spectral_norm

MAX_GRID = 4096


class QuadratureRule(enum.Enum):
    LEFT_ENDPOINT = "left"
    TRAPEZOID = "trapezoid"


def volterra_matrix(n: int, rule: QuadratureRule) -> MatrixOperator:
    """Lower triangular discretization of the running integral on n grid points.

    Left endpoint: h on the strict lower triangle.  Trapezoid: additionally
    h/2 on the diagonal.
    """
    if not 1 <= n <= MAX_GRID:
        raise ValueError(f"grid size must be in [1, {MAX_GRID}], got {n}")
    h = 1.0 / n
    m = np.zeros((n, n))
    m[np.tril_indices(n, -1)] = h
    if rule is QuadratureRule.TRAPEZOID:
        np.fill_diagonal(m, h / 2)
    return MatrixOperator(m)


def resolvent_at_identity(v: MatrixOperator) -> MatrixOperator:
    """T = (I + V)^(-1), by forward substitution when V is lower triangular.

    Non-triangular inputs fall back to a general dense solve.  The residual
    ||(I + V) T - I|| stays below 1e-10 for the grids handled here.
    """
    arr = v.entries if isinstance(v, MatrixOperator) else np.asarray(v)
    n = arr.shape[0]
    m = np.eye(n) + arr
    if not np.any(np.triu(m, 1)):
        diag = np.diag(m)
        if np.any(diag == 0):
            raise ComputationError("I + V is singular: zero on the triangular diagonal")
        t = solve_triangular(m, np.eye(n), lower=True)
    else:
        try:
            t = np.linalg.solve(m, np.eye(n))
        except np.linalg.LinAlgError as exc:
            raise ComputationError(f"I + V is singular: {exc}") from exc
    return MatrixOperator(t)


def resolvent_residual(v: MatrixOperator, t: MatrixOperator) -> float:
    """||(I + V) T - I||, the defect of T as the inverse of I + V."""
    n = v.dim
    return spectral_norm((np.eye(n) + v.entries) @ t.entries - np.eye(n))


@dataclass(frozen=True)
class WitnessReport:
    """All facts verified for one (n, rule) resolvent element (T_n, xi)."""

    n: int
    rule: QuadratureRule
    h: float
    norm_T: float
    xi_used: float
    cone_member: bool
    cluster_radius: float
    deviation: float
    geq_unit: bool
    norm_excess: float


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    h: float
    norm_T: float
    cluster_radius: float
    deviation: float
    norm_excess: float


def build_witness(
    n: int, rule: QuadratureRule, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> WitnessReport:
    """Assemble the full fact sheet for the resolvent element at grid size n.

    xi_used = max(1, ||T_n||): at finite n the norm can exceed 1 by a
    discretization error (left-endpoint rule), and the report then records the
    excess instead of silently failing cone membership.
    """
    v = volterra_matrix(n, rule)
    t = resolvent_at_identity(v)
    norm_t = spectral_norm(t)
    xi = max(1.0, norm_t)
    element = ProductElement(t, xi)
    return WitnessReport(
        n=n,
        rule=rule,
        h=1.0 / n,
        norm_T=norm_t,
        xi_used=xi,
        cone_member=algebra.cone_contains(element, tol),
        cluster_radius=cluster_radius(eigenvalues(t), 1.0),
        deviation=spectral_norm(t.entries - np.eye(n)),
        geq_unit=algebra.geq_unit(element, tol),
        norm_excess=norm_t - 1.0,
    )


def convergence_study(
    ns, rule: QuadratureRule, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> list[ConvergenceRow]:
    """One row per grid size, ascending; each row is a witness projection."""
    sizes = sorted(set(int(n) for n in ns))
    if not sizes:
        raise ValueError("convergence_study needs at least one grid size")
    rows = []
    for n in sizes:
        w = build_witness(n, rule, tol)
        rows.append(
            ConvergenceRow(
                n=w.n,
                h=w.h,
                norm_T=w.norm_T,
                cluster_radius=w.cluster_radius,
                deviation=w.deviation,
                norm_excess=w.norm_excess,
            )
        )
    return rows


def growth_diagnostic(n: int, k_max: int) -> np.ndarray:
    """Sequence a_k = k ||(T - I)^k||^(1/k), k = 1..k_max, on the left-endpoint grid.

    The rule is fixed to left endpoint so that T - I is nilpotent like its
    continuous counterpart.  Requires k_max < n: from k = n on, the powers
    vanish identically and the normalized quantity is meaningless.  Computed
    in log scale with per-step renormalization.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be at least 1, got {k_max}")
    if k_max >= n:
        raise ValueError(f"k_max must be smaller than the grid size, got k_max={k_max}, n={n}")
    v = volterra_matrix(n, QuadratureRule.LEFT_ENDPOINT)
    t = resolvent_at_identity(v)
    base = t.entries - np.eye(n)
    out = np.zeros(k_max)
    power = base
    log_scale = 0.0
    for k in range(1, k_max + 1):
        s = spectral_norm(power)
        if s == 0.0:
            break
        out[k - 1] = k * float(np.exp((np.log(s) + log_scale) / k))
        if k < k_max:
            log_scale += np.log(s)
            power = (power / s) @ base
    return out
