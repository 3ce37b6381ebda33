"""Exact minimizers and upper bounds for the infimum representation of F_k.

For invertible ``omega`` and ``rho`` the positive solution ``X`` of
``X omega X = X^-1 rho X^-1 =: tau`` moves the pair to ``{tau, tau}``. The
projection ``P`` onto the ``m = d - k`` smallest eigenvalues of ``tau`` then
gives the minimizing pair ``{X P X, X^-1 P X^-1}``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadK, DimMismatch, SingularState
from .matcore import eig_hermitian, hermitian_part, inv_sqrt_psd, psd_sqrt
from .pairs import (
    BiorthogonalSystem,
    DualPair,
    balance,
    pair_objective,
    validate_pair,
)
from .states import PositiveOperator, StatePair, ginibre, numeric_rank, validate_positive

TIE_TOL = 1e-10


def _require_invertible(pair: StatePair) -> None:
    d = pair.dim
    for name, P in (("omega", pair.omega), ("rho", pair.rho)):
        r = numeric_rank(P)
        if r < d:
            raise SingularState(f"{name} has numeric rank {r} < {d}")


def _check_k(k: int, d: int) -> int:
    if not (0 <= k < d):
        raise BadK(f"k = {k} outside 0..{d - 1}")
    return d - k


def geometric_mean_sqrt(pair: StatePair) -> np.ndarray:
    """Positive ``X`` with ``X omega X = X^-1 rho X^-1``.

    ``X^2 = omega^-1/2 (omega^1/2 rho omega^1/2)^1/2 omega^-1/2`` is the
    geometric mean of ``omega^-1`` and ``rho``.
    """
    _require_invertible(pair)
    w_half = pair.omega.sqrt
    w_inv_half = inv_sqrt_psd(pair.omega.matrix)
    inner = psd_sqrt(hermitian_part(w_half @ pair.rho.matrix @ w_half))
    X2 = hermitian_part(w_inv_half @ inner @ w_inv_half)
    return psd_sqrt(X2)


@dataclass(frozen=True, eq=False)
class MinimizerResult:
    pair: DualPair
    X: np.ndarray
    tau: PositiveOperator
    k: int
    objective: float
    stationarity_residual: float
    printed_residual: float
    frame: np.ndarray  # orthonormal eigenvectors of tau spanning the range of P

    def system(self) -> BiorthogonalSystem:
        """Bi-orthogonal system ``psi_i = X v_i``, ``phi_i = X^-1 v_i`` with unit weights."""
        return BiorthogonalSystem(self.X @ self.frame, np.linalg.solve(self.X, self.frame))


def optimal_pair(pair: StatePair, k: int) -> MinimizerResult:
    """The pair in PAIRS_{d-k} attaining ``F_k`` for invertible states.

    Ties between eigenvalues of ``tau`` at the cut are broken by taking the
    first ``m`` eigenvectors in ascending order; the objective does not depend
    on that choice.
    """
    m = _check_k(k, pair.dim)
    X = geometric_mean_sqrt(pair)
    Xi = np.linalg.inv(X)
    tau = validate_positive(hermitian_part(X @ pair.omega.matrix @ X))
    w, V = np.linalg.eigh(tau.matrix)
    frame = V[:, :m]
    P = frame @ frame.conj().T
    p = validate_pair(hermitian_part(X @ P @ X), hermitian_part(Xi @ P @ Xi))
    return MinimizerResult(
        pair=p,
        X=X,
        tau=tau,
        k=k,
        objective=pair_objective(p, pair),
        stationarity_residual=stationarity_residual(p, pair),
        printed_residual=printed_stationarity_residual(p, pair),
        frame=frame,
    )


def _dims(p: DualPair, pair: StatePair) -> None:
    if p.dim != pair.dim:
        raise DimMismatch(f"pair dim {p.dim} vs states dim {pair.dim}")


def stationarity_residual(p: DualPair, pair: StatePair) -> float:
    """``||omega A - B rho||_F``; vanishes at a minimizer of the pair objective."""
    _dims(p, pair)
    return float(np.linalg.norm(pair.omega.matrix @ p.A.matrix - p.B.matrix @ pair.rho.matrix))


def printed_stationarity_residual(p: DualPair, pair: StatePair) -> float:
    """``||A rho - omega B||_F``, kept as a diagnostic only; it is nonzero at true minimizers."""
    _dims(p, pair)
    return float(np.linalg.norm(p.A.matrix @ pair.rho.matrix - pair.omega.matrix @ p.B.matrix))


def _expectations(sys: BiorthogonalSystem, pair: StatePair) -> tuple[np.ndarray, np.ndarray]:
    if sys.d != pair.dim:
        raise DimMismatch(f"system dim {sys.d} vs states dim {pair.dim}")
    x = np.einsum("di,de,ei->i", sys.psi.conj(), pair.omega.matrix, sys.psi).real
    y = np.einsum("di,de,ei->i", sys.phi.conj(), pair.rho.matrix, sys.phi).real
    return np.clip(x, 0.0, None), np.clip(y, 0.0, None)


def biorthogonal_objective(sys: BiorthogonalSystem, pair: StatePair) -> float:
    """``sum_i sqrt(<psi_i, omega psi_i> <phi_i, rho phi_i>)``."""
    x, y = _expectations(sys, pair)
    return float(np.sum(np.sqrt(x * y)))


def optimal_weights(sys: BiorthogonalSystem, pair: StatePair) -> np.ndarray:
    """Weights ``a_i = sqrt(<phi_i, rho phi_i> / <psi_i, omega psi_i>)`` minimizing the pair objective.

    Each term ``(a x + y / a) / 2`` is minimized at ``a = sqrt(y / x)`` with value
    ``sqrt(x y)``. Entries are ``inf`` or ``0`` when an expectation vanishes.
    """
    x, y = _expectations(sys, pair)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.sqrt(y / x)


def product_bound(p: DualPair, pair: StatePair) -> float:
    """``Tr(A omega) Tr(B rho)``, an upper bound for ``F_k^2``."""
    _dims(p, pair)
    ta = np.trace(p.A.matrix @ pair.omega.matrix).real
    tb = np.trace(p.B.matrix @ pair.rho.matrix).real
    return float(ta * tb)


@dataclass(frozen=True, eq=False)
class SearchResult:
    value: float
    history: np.ndarray  # running minimum after each trial
    system: BiorthogonalSystem


GLOBAL_TRIALS = 512
CHUNK = 128
LOCAL_BATCH = 64


def _batch_values(X: np.ndarray, pair: StatePair, m: int) -> np.ndarray:
    with np.errstate(all="ignore"):
        Xi = np.linalg.inv(X)
        psi = Xi[:, :, :m]
        phi = np.conj(np.swapaxes(X, 1, 2))[:, :, :m]
        x = np.einsum("tdi,de,tei->ti", psi.conj(), pair.omega.matrix, psi).real
        y = np.einsum("tdi,de,tei->ti", phi.conj(), pair.rho.matrix, phi).real
        v = np.sqrt(np.clip(x, 0, None) * np.clip(y, 0, None)).sum(axis=1)
    return np.where(np.isfinite(v), v, np.inf)


def random_search(pair: StatePair, k: int, trials: int, seed: int) -> SearchResult:
    """Stochastic upper bound on ``F_k`` from random bi-orthogonal systems.

    Each trial draws an invertible ``X`` and evaluates the system
    ``psi_i = X^-1 e_i``, ``phi_i = X^dagger e_i`` (``i <= m``) at its optimal
    weights. The first 512 trials are independent Ginibre draws; later trials
    perturb the incumbent multiplicatively in batches of 64 with an adaptive
    step size. Batch ``j`` is drawn from ``default_rng([seed, j])``, so the
    first ``n`` trials are identical for every ``trials >= n``.
    """
    d = pair.dim
    m = _check_k(k, d)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    values = np.empty(trials)
    best, best_X = np.inf, np.eye(d, dtype=complex)
    step = 0.3
    n, batch_idx = 0, 0
    while n < trials:
        rng = np.random.default_rng([seed, batch_idx])
        local = n >= GLOBAL_TRIALS
        if not local:
            size = min(CHUNK, GLOBAL_TRIALS - n)
            X = ginibre(rng, size, d, d)
        else:
            size = LOCAL_BATCH
            G = ginibre(rng, size, d, d) / np.sqrt(d)
            X = best_X @ (np.eye(d) + step * G)
        size = min(size, trials - n)
        X = X[:size]
        v = _batch_values(X, pair, m)
        values[n : n + size] = v
        i = int(np.argmin(v))
        improved = v[i] < best
        if improved:
            best, best_X = float(v[i]), X[i]
        if local:
            step = 1.5 * step if improved else max(0.7 * step, 1e-4)
        n += size
        batch_idx += 1
    Xi = np.linalg.inv(best_X)
    sys = BiorthogonalSystem(Xi[:, :m], best_X.conj().T[:, :m], tol=1e-6)
    sys, _ = balance(sys, np.ones(m))
    return SearchResult(value=best, history=np.minimum.accumulate(values), system=sys)


def random_search_upper_bound(pair: StatePair, k: int, trials: int, seed: int) -> float:
    return random_search(pair, k, trials, seed).value
