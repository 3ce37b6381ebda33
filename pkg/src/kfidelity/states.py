"""Validated positive operators, state pairs and random test states."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import BadRank, DimMismatch, NotPositive
from .matcore import (
    HERM_TOL,
    NEG_TOL,
    RANK_EPS,
    EigenSystem,
    as_matrix,
    eig_hermitian,
    hermitian_part,
)

NOISE_FLOOR = 8 * np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class PositiveOperator:
    """A positive semidefinite matrix together with its (clipped) eigensystem.

    Traces are not constrained; unnormalized operators are first-class.
    Build instances through :func:`validate_positive`.
    """

    matrix: np.ndarray
    eigen: EigenSystem

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace(self) -> float:
        return float(np.sum(self.eigen.values))

    @cached_property
    def sqrt(self) -> np.ndarray:
        V = self.eigen.vectors
        return (V * np.sqrt(self.eigen.values)) @ V.conj().T

    def rank(self, rank_eps: float = RANK_EPS) -> int:
        return numeric_rank(self, rank_eps)

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)


class DensityOperator(PositiveOperator):
    """Positive operator of unit trace."""


def validate_positive(
    M, neg_tol: float = NEG_TOL, herm_tol: float = HERM_TOL
) -> PositiveOperator:
    """Check Hermiticity and positivity, clipping roundoff-level negative eigenvalues.

    Raises
    ------
    NotHermitian
        If the antihermitian part is larger than ``herm_tol * (1 + ||M||_F)``.
    NotPositive
        If an eigenvalue lies below ``-neg_tol * (1 + ||M||_F)``.
    """
    if isinstance(M, PositiveOperator):
        return M
    M = as_matrix(M)
    es = eig_hermitian(M, herm_tol)
    scale = 1.0 + np.linalg.norm(M)
    w = es.values
    if w[-1] < -neg_tol * scale:
        raise NotPositive(
            f"min eigenvalue {w[-1]:.3e} below clip band -{neg_tol:.1e} * {scale:.3g}"
        )
    H = hermitian_part(M)
    if w[-1] < 0:
        H = EigenSystem(values=np.clip(w, 0.0, None), vectors=es.vectors).reconstruct()
    # eigenvalues at the roundoff floor are indistinguishable from 0; keeping them
    # would put spurious sqrt(eps)-sized entries into the square root
    floor = NOISE_FLOOR * len(w) * max(abs(w[0]), abs(w[-1]))
    w = np.where(w > floor, w, 0.0)
    return PositiveOperator(matrix=H, eigen=EigenSystem(values=w, vectors=es.vectors))


def validate_density(M, trace_tol: float = 1e-10) -> DensityOperator:
    P = validate_positive(M)
    if abs(P.trace - 1.0) > trace_tol:
        raise NotPositive(f"trace {P.trace!r} is not 1 within {trace_tol:.1e}")
    return DensityOperator(matrix=P.matrix, eigen=P.eigen)


def numeric_rank(P, rank_eps: float = RANK_EPS) -> int:
    """Number of eigenvalues above ``rank_eps * lambda_max`` (0 for the zero operator)."""
    P = validate_positive(P)
    w = P.eigen.values
    if w.size == 0 or w[0] <= 0.0:
        return 0
    return int(np.count_nonzero(w > rank_eps * w[0]))


def ginibre(rng: np.random.Generator, *shape: int) -> np.ndarray:
    """I.i.d. standard complex Gaussian entries (unit variance)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_density(d: int, r: int, seed) -> DensityOperator:
    """``G G^dagger / Tr(G G^dagger)`` for a d x r Ginibre matrix ``G``.

    Rank is r almost surely; output is a deterministic function of ``(d, r, seed)``.
    """
    if not (1 <= r <= d):
        raise BadRank(f"rank {r} outside 1..{d}")
    rng = np.random.default_rng(seed)
    G = ginibre(rng, d, r)
    M = G @ G.conj().T
    return validate_density(M / np.trace(M).real)


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    """Haar-distributed unitary via QR with phase correction."""
    Q, R = np.linalg.qr(ginibre(rng, d, d))
    ph = np.diagonal(R)
    return Q * (ph / np.abs(ph))


def random_unitaries(rng: np.random.Generator, n: int, d: int) -> np.ndarray:
    Q, R = np.linalg.qr(ginibre(rng, n, d, d))
    ph = np.diagonal(R, axis1=1, axis2=2)
    return Q * (ph / np.abs(ph))[:, None, :]


def pure_state(psi) -> DensityOperator:
    psi = np.asarray(psi, dtype=complex).ravel()
    psi = psi / np.linalg.norm(psi)
    return validate_density(np.outer(psi, psi.conj()))


@dataclass(frozen=True, eq=False)
class StatePair:
    """Ordered pair ``{omega, rho}`` of positive operators of equal dimension."""

    omega: PositiveOperator
    rho: PositiveOperator

    def __post_init__(self):
        if self.omega.dim != self.rho.dim:
            raise DimMismatch(f"dims differ: {self.omega.dim} vs {self.rho.dim}")

    @property
    def dim(self) -> int:
        return self.omega.dim

    def swapped(self) -> StatePair:
        return StatePair(self.rho, self.omega)


def state_pair(omega, rho) -> StatePair:
    """Validate two matrices (or pass through ``PositiveOperator``) into a ``StatePair``."""
    return StatePair(validate_positive(omega), validate_positive(rho))


def random_pair(
    rng: np.random.Generator, d: int, ranks: tuple[int, int] | None = None
) -> StatePair:
    """Random pair of densities; ranks default to full."""
    r1, r2 = ranks if ranks is not None else (d, d)
    s1, s2 = rng.integers(0, 2**63, size=2)
    return StatePair(random_density(d, r1, s1), random_density(d, r2, s2))
