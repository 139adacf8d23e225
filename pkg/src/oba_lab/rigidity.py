"""Finite-dimensional rigidity: a norm-one matrix with spectrum {1} must be the identity.

The mechanism is a trace bound: for A = I + N with N strictly nilpotent, the
largest eigenvalue of A^H A is at least its average, 1 + ||N||_F^2 / dim, so
any nonzero nilpotent part pushes the norm strictly above 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ComputationError, PreconditionError
from .operators import DEFAULT_TOLERANCE, MatrixOperator, ToleranceConfig
from .spectral import cluster_radius, eigenvalues, spectral_norm


@dataclass(frozen=True)
class RigidityVerdict:
    """Measured gaps of a candidate: norm above 1, distance from I, and the identity call."""

    norm_excess: float
    deviation: float
    is_identity: bool


def random_strict_nilpotent(seed: int, dim: int, scale: float) -> MatrixOperator:
    """Seeded strictly upper triangular matrix with peak entry modulus in [scale/2, scale].

    Entries are complex Gaussian rescaled so the largest modulus lands in
    [0.6, 1.0) * scale; every output is nilpotent of index at most dim.
    """
    if dim < 2:
        raise ValueError(f"dim must be at least 2 for a nonzero strict triangle, got {dim}")
    if not np.isfinite(scale) or scale <= 0:
        raise ValueError(f"scale must be positive and finite, got {scale}")
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(dim, 1)
    values = rng.standard_normal(rows.size) + 1j * rng.standard_normal(rows.size)
    peak_fraction = rng.uniform(0.6, 1.0)
    peak = np.abs(values).max()
    if peak == 0.0:  # measure-zero draw; keep the contract anyway
        values[0] = 1.0
        peak = 1.0
    values = values * (peak_fraction * scale / peak)
    mat = np.zeros((dim, dim), dtype=np.complex128)
    mat[rows, cols] = values
    return MatrixOperator(mat)


def random_unitary(seed: int, dim: int) -> MatrixOperator:
    """Seeded Haar-distributed unitary (QR of a complex Gaussian, phases fixed)."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return MatrixOperator(q * (d / np.abs(d)))


def rigidity_gap(a: MatrixOperator, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> RigidityVerdict:
    """Norm excess and deviation from the identity, with no spectrum assumption."""
    arr = a.entries if isinstance(a, MatrixOperator) else np.asarray(a)
    deviation = spectral_norm(arr - np.eye(arr.shape[0]))
    return RigidityVerdict(
        norm_excess=spectral_norm(arr) - 1.0,
        deviation=deviation,
        is_identity=deviation <= tol.abs_tol,
    )


def check_rigidity(a: MatrixOperator, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> RigidityVerdict:
    """Enforce the rigidity hypotheses, then require the element to be the identity.

    Raises PreconditionError naming the failed clause when the spectrum is not
    concentrated at 1 (within abs_tol) or the norm exceeds 1 + abs_tol.  When
    both hypotheses hold but the matrix still differs from I beyond abs_tol
    (possible only in a narrow float boundary band, since no quantitative
    stability law is claimed), raises ComputationError rather than passing.
    """
    radius = cluster_radius(eigenvalues(a), 1.0)
    if radius > tol.abs_tol:
        raise PreconditionError(
            f"spectrum clause failed: eigenvalue cluster radius about 1 is "
            f"{radius:.6e}, above abs_tol {tol.abs_tol:.1e}"
        )
    norm = spectral_norm(a)
    if norm > 1.0 + tol.abs_tol:
        raise PreconditionError(
            f"norm clause failed: spectral norm {norm:.12f} exceeds 1 + abs_tol "
            f"{tol.abs_tol:.1e}"
        )
    verdict = rigidity_gap(a, tol)
    if not verdict.is_identity:
        raise ComputationError(
            f"rigidity dichotomy violated at tolerance {tol.abs_tol:.1e}: "
            f"deviation from identity is {verdict.deviation:.6e}"
        )
    return verdict
