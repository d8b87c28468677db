"""Dense Hermitian linear algebra: eigendecomposition, congruence, inertia counting.

Everything here works on plain complex numpy arrays.  Matrices are small
(dimension a few tens at most), so robustness and validation win over speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

# Default relative tolerance for classifying an eigenvalue as zero.
TOL_ZERO = 1e-9
# Hermiticity acceptance tolerance (relative to the largest entry).
TOL_HERM = 1e-12
# Validation bound for eigendecomposition residuals.
TOL_RESID = 1e-10


class Inertia(NamedTuple):
    """Signature triple (v_minus, v_zero, v_plus) of a Hermitian matrix."""

    neg: int
    zero: int
    pos: int

    def __str__(self) -> str:
        return f"({self.neg},{self.zero},{self.pos})"


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues and orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray


def max_abs(mat: np.ndarray) -> float:
    return float(np.abs(mat).max()) if mat.size else 0.0


def hermiticity_defect(mat: np.ndarray) -> float:
    """Largest entrywise deviation of M from its conjugate transpose."""
    return max_abs(mat - mat.conj().T)


def require_hermitian(mat: np.ndarray, tol: float = TOL_HERM) -> None:
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    defect = hermiticity_defect(mat)
    bound = tol * max(1.0, max_abs(mat))
    if defect > bound:
        raise ValueError(
            f"matrix is not Hermitian: max asymmetry {defect:.3e} exceeds {bound:.3e}"
        )


def require_invertible(mat: np.ndarray, tol: float = 1e-12) -> None:
    """Reject matrices whose smallest singular value is negligible."""
    s = np.linalg.svd(np.asarray(mat, dtype=complex), compute_uv=False)
    if s.size == 0 or s[-1] <= tol * max(1.0, s[0]):
        raise ValueError(
            f"matrix is numerically singular (sigma_min={s[-1] if s.size else 0.0:.3e})"
        )


def herm_eig(mat: np.ndarray, tol: float = TOL_HERM) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, with residual validation.

    Raises ValueError on non-Hermitian input (reporting the asymmetry) and
    RuntimeError if the solver fails to converge or the reconstruction
    residual is out of bounds.
    """
    require_hermitian(mat, tol)
    mat = np.asarray(mat, dtype=complex)
    try:
        values, vectors = np.linalg.eigh(mat)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise RuntimeError(f"eigensolver did not converge: {exc}") from exc
    scale = max(1.0, max_abs(mat))
    resid = max_abs(mat - (vectors * values) @ vectors.conj().T)
    ortho = max_abs(vectors.conj().T @ vectors - np.eye(mat.shape[0]))
    if resid > TOL_RESID * scale or ortho > TOL_RESID:
        raise RuntimeError(
            f"eigendecomposition failed validation: residual={resid:.3e}, "
            f"orthonormality defect={ortho:.3e}"
        )
    return EigenDecomposition(values=values, vectors=vectors)


def congruence(mat: np.ndarray, s: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Return S M S^dagger for Hermitian M and invertible S.

    By Sylvester's law of inertia the result has the same signature as M.
    """
    mat = np.asarray(mat, dtype=complex)
    s = np.asarray(s, dtype=complex)
    require_hermitian(mat)
    if s.shape != mat.shape:
        raise ValueError(f"shape mismatch: M is {mat.shape}, S is {s.shape}")
    require_invertible(s, tol)
    out = s @ mat @ s.conj().T
    # exact arithmetic would give a Hermitian result; discard roundoff skew
    return 0.5 * (out + out.conj().T)


def spectrum_inertia(values: np.ndarray, tol_zero: float = TOL_ZERO) -> tuple[Inertia, bool]:
    """Classify eigenvalues into (negative, zero, positive) counts.

    The zero band is |lambda| <= tol_zero * max(1, max|lambda|).  The result
    is flagged marginal when reclassifying at tol_zero/10 and 10*tol_zero
    would change any count, i.e. when some eigenvalue sits near the band edge.
    """
    values = np.asarray(values, dtype=float)
    if tol_zero <= 0:
        raise ValueError("tol_zero must be positive")
    scale = max(1.0, float(np.abs(values).max())) if values.size else 1.0

    def counts(tol):
        t = tol * scale
        neg = int((values < -t).sum())
        pos = int((values > t).sum())
        return Inertia(neg, values.size - neg - pos, pos)

    ine = counts(tol_zero)
    marginal = counts(tol_zero / 10) != ine or counts(tol_zero * 10) != ine
    return ine, marginal
