"""Dense complex linear algebra used throughout the package.

All routines take and return plain ``numpy`` arrays. Eigenvalues and singular
values are returned in *descending* order.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotPositive

NEG_TOL = 1e-10
RANK_EPS = 1e-12
HERM_TOL = 1e-10


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues (descending) with the matching orthonormal eigenvectors as columns."""

    values: np.ndarray
    vectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.values)

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.conj().T


def as_matrix(M) -> np.ndarray:
    """Coerce to a finite square complex array."""
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def dagger(M: np.ndarray) -> np.ndarray:
    return np.conj(np.swapaxes(M, -1, -2))


def hermitian_part(M: np.ndarray) -> np.ndarray:
    return 0.5 * (M + dagger(M))


def eig_hermitian(M, herm_tol: float = HERM_TOL) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized as ``(M + M^dagger)/2`` first; the antihermitian
    part must be small relative to ``1 + ||M||_F``.
    """
    M = as_matrix(M)
    scale = 1.0 + np.linalg.norm(M)
    skew = np.linalg.norm(M - M.conj().T)
    if skew > herm_tol * scale:
        raise NotHermitian(
            f"||M - M^dagger||_F = {skew:.3e} exceeds {herm_tol:.1e} * (1 + ||M||_F)"
        )
    w, v = np.linalg.eigh(hermitian_part(M))
    return EigenSystem(values=w[::-1].copy(), vectors=v[:, ::-1].copy())


def _clipped(es: EigenSystem, neg_tol: float, scale: float) -> np.ndarray:
    w = es.values
    if w.size and w[-1] < -neg_tol * scale:
        raise NotPositive(
            f"min eigenvalue {w[-1]:.3e} below clip band -{neg_tol:.1e} * {scale:.3g}"
        )
    return np.clip(w, 0.0, None)


def psd_sqrt(P, neg_tol: float = NEG_TOL) -> np.ndarray:
    """Positive square root; eigenvalues in ``[-neg_tol * (1 + ||P||_F), 0)`` are set to 0."""
    P = as_matrix(P)
    es = eig_hermitian(P)
    w = _clipped(es, neg_tol, 1.0 + np.linalg.norm(P))
    V = es.vectors
    return (V * np.sqrt(w)) @ V.conj().T


def inv_sqrt_psd(P, rank_eps: float = RANK_EPS, neg_tol: float = NEG_TOL) -> np.ndarray:
    """Pseudo-inverse square root.

    Eigenvalues at or below ``rank_eps * lambda_max`` are treated as kernel and map to 0.
    """
    P = as_matrix(P)
    es = eig_hermitian(P)
    w = _clipped(es, neg_tol, 1.0 + np.linalg.norm(P))
    lmax = w[0] if w.size else 0.0
    inv = np.zeros_like(w)
    keep = w > rank_eps * lmax
    inv[keep] = 1.0 / np.sqrt(w[keep])
    V = es.vectors
    return (V * inv) @ V.conj().T


def svd(M) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(U, s, V)`` with ``M = U diag(s) V^dagger``, ``s`` descending.

    Note ``V`` itself is returned, not ``V^dagger``.
    """
    M = as_matrix(M)
    U, s, Vh = np.linalg.svd(M)
    return U, s, Vh.conj().T


def singular_values(M) -> np.ndarray:
    return np.linalg.svd(np.asarray(M, dtype=complex), compute_uv=False)


def polar_unitary(M) -> np.ndarray:
    """Unitary ``W = V U^dagger`` such that ``Tr(M W)`` equals the trace norm of M.

    This is the adjoint of the unitary polar factor of M, i.e. the unitary that
    maximizes ``|Tr(M W)|``.
    """
    U, _, V = svd(M)
    return V @ U.conj().T


def condition_number(X) -> float:
    s = singular_values(X)
    if s[-1] == 0.0:
        return np.inf
    return float(s[0] / s[-1])
