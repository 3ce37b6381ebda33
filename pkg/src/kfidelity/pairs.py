"""The dual feasible sets PAIRS_m.

A pair ``{A, B}`` of positive operators belongs to PAIRS when ``ABA = A`` and
``BAB = B``. Then ``AB`` is an idempotent and ``rank A = rank B = rank AB = Tr AB``;
that common integer ``m`` is the rank of the pair. For ``m + k = d`` the
infimum of ``(Tr A omega + Tr B rho) / 2`` over PAIRS_m is the k-th partial
fidelity.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadRank,
    DimMismatch,
    IllConditioned,
    LengthMismatch,
    NotAPair,
    NotBiorthogonal,
    RankMismatch,
    SingularBlock,
    ZeroVector,
)
from .matcore import RANK_EPS, as_matrix, condition_number, singular_values
from .states import PositiveOperator, StatePair, ginibre, numeric_rank, validate_positive

PAIR_TOL = 1e-7
TRACE_GUARD = 1e-6
MAX_COND = 1e8


@dataclass(frozen=True, eq=False)
class DualPair:
    A: PositiveOperator
    B: PositiveOperator
    m: int
    trace_ab: float

    @property
    def dim(self) -> int:
        return self.A.dim

    @property
    def k(self) -> int:
        return self.dim - self.m

    def idempotent(self) -> np.ndarray:
        return self.A.matrix @ self.B.matrix

    def rescaled(self, lam: float) -> DualPair:
        """``{lam A, B / lam}``, again in PAIRS_m."""
        return validate_pair(lam * self.A.matrix, self.B.matrix / lam)


def _rank_of(M: np.ndarray, rank_eps: float) -> int:
    s = singular_values(M)
    if s[0] <= 0.0:
        return 0
    return int(np.count_nonzero(s > rank_eps * s[0]))


def validate_pair(A, B, tol: float = PAIR_TOL, rank_eps: float = RANK_EPS) -> DualPair:
    """Check ``ABA = A``, ``BAB = B`` and the rank chain; return the pair with its rank.

    The identities are tested in Frobenius norm relative to ``1 + ||A||_F`` and
    ``1 + ||B||_F``. ``Tr AB`` must sit within 1e-6 of an integer equal to the
    numeric ranks of ``A``, ``B`` and ``AB``.
    """
    A = validate_positive(A)
    B = validate_positive(B)
    if A.dim != B.dim:
        raise DimMismatch(f"dims differ: {A.dim} vs {B.dim}")
    a, b = A.matrix, B.matrix
    ra = np.linalg.norm(a @ b @ a - a)
    rb = np.linalg.norm(b @ a @ b - b)
    if ra > tol * (1.0 + np.linalg.norm(a)):
        raise NotAPair(f"||ABA - A||_F = {ra:.3e}")
    if rb > tol * (1.0 + np.linalg.norm(b)):
        raise NotAPair(f"||BAB - B||_F = {rb:.3e}")
    ab = a @ b
    t = float(np.trace(ab).real)
    m = int(round(t))
    if abs(t - m) > TRACE_GUARD:
        raise RankMismatch(f"Tr AB = {t!r} is not an integer")
    ranks = (numeric_rank(A, rank_eps), numeric_rank(B, rank_eps), _rank_of(ab, rank_eps))
    if any(r != m for r in ranks):
        raise RankMismatch(f"ranks (A, B, AB) = {ranks} but Tr AB = {t!r}")
    return DualPair(A=A, B=B, m=m, trace_ab=t)


@dataclass(frozen=True, eq=False)
class BiorthogonalSystem:
    """Vectors ``psi_i`` and ``phi_i`` (columns of ``psi``/``phi``) with ``<psi_i, phi_j> = delta_ij``."""

    psi: np.ndarray
    phi: np.ndarray
    tol: float = 1e-9

    def __post_init__(self):
        psi = np.asarray(self.psi, dtype=complex)
        phi = np.asarray(self.phi, dtype=complex)
        if psi.ndim == 1:
            psi, phi = psi[:, None], phi[:, None]
        if psi.shape != phi.shape:
            raise LengthMismatch(f"psi {psi.shape} vs phi {phi.shape}")
        d, m = psi.shape
        if m > d:
            raise BadRank(f"length {m} exceeds dimension {d}")
        object.__setattr__(self, "psi", psi)
        object.__setattr__(self, "phi", phi)
        gram = psi.conj().T @ phi
        norms = np.outer(np.linalg.norm(psi, axis=0), np.linalg.norm(phi, axis=0))
        err = np.abs(gram - np.eye(m))
        if np.any(err > self.tol * np.maximum(1.0, norms)):
            raise NotBiorthogonal(f"max |<psi_i, phi_j> - delta_ij| = {err.max():.3e}")

    @classmethod
    def from_vectors(cls, psi, phi) -> BiorthogonalSystem:
        return cls(np.column_stack(psi), np.column_stack(phi))

    @property
    def d(self) -> int:
        return self.psi.shape[0]

    @property
    def m(self) -> int:
        return self.psi.shape[1]

    @property
    def balanced(self) -> bool:
        n1 = np.linalg.norm(self.psi, axis=0) ** 2
        n2 = np.linalg.norm(self.phi, axis=0) ** 2
        return bool(np.all(np.abs(n1 - n2) <= 1e-9))


def _weights(a, m: int) -> np.ndarray:
    a = np.broadcast_to(np.asarray(a, dtype=float), (m,))
    if np.any(~(a > 0)):
        raise ValueError("weights must be positive")
    return a


def biorthogonal_operators(sys: BiorthogonalSystem, a) -> tuple[np.ndarray, np.ndarray]:
    a = _weights(a, sys.m)
    A = (sys.psi * a) @ sys.psi.conj().T
    B = (sys.phi / a) @ sys.phi.conj().T
    return A, B


def make_pair_biorthogonal(sys: BiorthogonalSystem, a) -> DualPair:
    """``A = sum a_i |psi_i><psi_i|``, ``B = sum a_i^-1 |phi_i><phi_i|``."""
    return validate_pair(*biorthogonal_operators(sys, a))


def make_pair_block(A11, B12) -> DualPair:
    """Pair with ``A = [[A11, 0], [0, 0]]`` and the completing ``B``.

    ``B = [[A11^-1, B12], [B12^dagger, B12^dagger A11 B12]]``; ``B12`` is free.
    """
    A11 = np.atleast_2d(np.asarray(A11, dtype=complex))
    m = A11.shape[0]
    B12 = np.asarray(B12, dtype=complex).reshape(m, -1)
    k = B12.shape[1]
    P11 = validate_positive(A11)
    if numeric_rank(P11) < m:
        raise SingularBlock("A11 is not invertible")
    d = m + k
    A = np.zeros((d, d), dtype=complex)
    A[:m, :m] = P11.matrix
    B = np.zeros((d, d), dtype=complex)
    B[:m, :m] = np.linalg.inv(P11.matrix)
    B[:m, m:] = B12
    B[m:, :m] = B12.conj().T
    B[m:, m:] = B12.conj().T @ P11.matrix @ B12
    return validate_pair(A, B)


def balance(sys: BiorthogonalSystem, a) -> tuple[BiorthogonalSystem, np.ndarray]:
    """Rescale ``psi_i -> t_i psi_i``, ``phi_i -> phi_i / t_i``, ``a_i -> a_i / t_i^2``.

    ``t_i = sqrt(|phi_i| / |psi_i|)``; the generated pair is unchanged and the
    new system has ``|psi_i| = |phi_i|``.
    """
    a = _weights(a, sys.m)
    n_psi = np.linalg.norm(sys.psi, axis=0)
    n_phi = np.linalg.norm(sys.phi, axis=0)
    if np.any(n_psi < 1e-300) or np.any(n_phi < 1e-300):
        raise ZeroVector("bi-orthogonal system contains a zero vector")
    t = np.sqrt(n_phi / n_psi)
    return BiorthogonalSystem(sys.psi * t, sys.phi / t, sys.tol), a / t**2


def _check_invertible(X, max_cond: float) -> np.ndarray:
    X = as_matrix(X)
    c = condition_number(X)
    if not c <= max_cond:
        raise IllConditioned(f"cond(X) = {c:.3e} exceeds {max_cond:.1e}")
    return X


def gamma_transform_pair(p: DualPair, X, max_cond: float = MAX_COND) -> DualPair:
    """``{X^dagger A X, X^-1 B X^-dagger}``, again in PAIRS_m.

    The objective is preserved when the states move the opposite way:
    ``Tr(A' omega') = Tr(A omega)`` for ``omega' = X^-1 omega X^-dagger``,
    i.e. the state transform by ``X^-1``.
    """
    X = _check_invertible(X, max_cond)
    Xi = np.linalg.inv(X)
    A = X.conj().T @ p.A.matrix @ X
    B = Xi @ p.B.matrix @ Xi.conj().T
    return validate_pair(A, B)


def pair_objective(p: DualPair, pair: StatePair) -> float:
    """``(Tr A omega + Tr B rho) / 2``."""
    if p.dim != pair.dim:
        raise DimMismatch(f"pair dim {p.dim} vs states dim {pair.dim}")
    ta = np.trace(p.A.matrix @ pair.omega.matrix).real
    tb = np.trace(p.B.matrix @ pair.rho.matrix).real
    return float(0.5 * (ta + tb))


def random_invertible(rng: np.random.Generator, d: int, max_cond: float = 20.0) -> np.ndarray:
    """Ginibre matrix, redrawn until its condition number is at most ``max_cond``."""
    while True:
        X = ginibre(rng, d, d)
        if condition_number(X) <= max_cond:
            return X


def random_projection(rng: np.random.Generator, d: int, m: int) -> np.ndarray:
    Q, _ = np.linalg.qr(ginibre(rng, d, m))
    return Q @ Q.conj().T


def random_dual_pair(d: int, m: int, seed, max_cond: float = 20.0) -> DualPair:
    """Random element of PAIRS_m: ``{P, P}`` moved by a cond-guarded Ginibre ``X``."""
    if not (1 <= m <= d):
        raise BadRank(f"pair rank {m} outside 1..{d}")
    rng = np.random.default_rng(seed)
    P = random_projection(rng, d, m)
    X = random_invertible(rng, d, max_cond)
    base = DualPair(A=validate_positive(P), B=validate_positive(P), m=m, trace_ab=float(m))
    return gamma_transform_pair(base, X)
