"""Gamma-transforms, equivalence classes and the orderings on state pairs."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimMismatch,
    KFidelityError,
    LengthMismatch,
    NotEquivalent,
    NotOrthogonal,
    SingularState,
)
from .fidelity import fidelity_vector
from .matcore import hermitian_part
from .pairs import MAX_COND, _check_invertible
from .states import PositiveOperator, StatePair, validate_positive
from .variational import _require_invertible


def gamma_transform_states(pair: StatePair, X, max_cond: float = MAX_COND) -> StatePair:
    """``{X omega X^dagger, X^-dagger rho X^-1}``. Every F_k is unchanged."""
    X = _check_invertible(X, max_cond)
    Xi = np.linalg.inv(X)
    omega = hermitian_part(X @ pair.omega.matrix @ X.conj().T)
    rho = hermitian_part(Xi.conj().T @ pair.rho.matrix @ Xi)
    return StatePair(validate_positive(omega), validate_positive(rho))


def canonical_form(pair: StatePair) -> PositiveOperator:
    """``sqrt(rho) omega sqrt(rho)``: the first member after moving ``rho`` to the identity.

    Its eigenvalues are the squared fidelity spectrum.
    """
    if pair.rho.rank() < pair.dim:
        raise SingularState("rho is not invertible")
    s = pair.rho.sqrt
    return validate_positive(hermitian_part(s @ pair.omega.matrix @ s))


@dataclass(frozen=True, eq=False)
class GammaWitness:
    X: np.ndarray
    residual_omega: float
    residual_rho: float


def gamma_residuals(pair1: StatePair, pair2: StatePair, X) -> tuple[float, float]:
    X = np.asarray(X, dtype=complex)
    Xi = np.linalg.inv(X)
    r_omega = np.linalg.norm(X @ pair1.omega.matrix @ X.conj().T - pair2.omega.matrix)
    r_rho = np.linalg.norm(Xi.conj().T @ pair1.rho.matrix @ Xi - pair2.rho.matrix)
    return float(r_omega), float(r_rho)


def find_gamma_witness(pair1: StatePair, pair2: StatePair, tol: float = 1e-6) -> GammaWitness:
    """Invertible ``X`` with ``pair2 = pair1^X`` for equivalent pairs of invertible states.

    Both pairs are moved to ``{omega', 1}`` with ``X = sqrt(rho)``; the two
    canonical forms share a spectrum, and the unitary matching their
    eigenbases closes the chain ``X = rho2^-1/2 U rho1^1/2``. Inside a
    degenerate eigenspace any basis works, so the residuals certify the result.
    """
    if pair1.dim != pair2.dim:
        raise DimMismatch(f"dims differ: {pair1.dim} vs {pair2.dim}")
    for p in (pair1, pair2):
        _require_invertible(p)
    f1, f2 = fidelity_vector(pair1), fidelity_vector(pair2)
    gap = float(np.max(np.abs(f1.partials - f2.partials)))
    if gap > tol:
        raise NotEquivalent(f"fidelity vectors differ by {gap:.3e}")
    c1, c2 = canonical_form(pair1), canonical_form(pair2)
    U = c2.eigen.vectors @ c1.eigen.vectors.conj().T
    X = np.linalg.inv(pair2.rho.sqrt) @ U @ pair1.rho.sqrt
    r_omega, r_rho = gamma_residuals(pair1, pair2, X)
    return GammaWitness(X=X, residual_omega=r_omega, residual_rho=r_rho)


def _vectors(pair1: StatePair, pair2: StatePair):
    if pair1.dim != pair2.dim:
        raise DimMismatch(f"dims differ: {pair1.dim} vs {pair2.dim}")
    return fidelity_vector(pair1).partials, fidelity_vector(pair2).partials


def equivalent(pair1: StatePair, pair2: StatePair, tol: float = 1e-8) -> bool:
    """Equal partial fidelities for every k, up to ``tol``."""
    f1, f2 = _vectors(pair1, pair2)
    return bool(np.max(np.abs(f1 - f2)) <= tol)


def operator_dominates(big: StatePair, small: StatePair) -> bool:
    """Both ``omega - omega'`` and ``rho - rho'`` are positive (up to the clip band)."""
    if big.dim != small.dim:
        raise DimMismatch(f"dims differ: {big.dim} vs {small.dim}")
    try:
        validate_positive(big.omega.matrix - small.omega.matrix)
        validate_positive(big.rho.matrix - small.rho.matrix)
    except KFidelityError:
        return False
    return True


def f_dominates(pair2: StatePair, pair1: StatePair, tol: float = 1e-9) -> bool:
    """``F_k(pair1) <= F_k(pair2) + tol`` for all k: pair1 is F-dominated by pair2."""
    f1, f2 = _vectors(pair1, pair2)
    return bool(np.all(f1 <= f2 + tol))


def weakly_submajorized(s, t, tol: float = 1e-12) -> bool:
    """Partial sums of ``s`` sorted descending never exceed those of ``t``."""
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    if s.shape != t.shape:
        raise LengthMismatch(f"lengths differ: {s.shape} vs {t.shape}")
    cs = np.cumsum(np.sort(s)[::-1])
    ct = np.cumsum(np.sort(t)[::-1])
    return bool(np.all(cs <= ct + tol))


def split_extend(
    base: StatePair, omega0, rho0, tol: float = 1e-10
) -> StatePair:
    """``{omega' + omega0, rho' + rho0}`` under mutual orthogonality.

    Requires ``omega0 rho' = 0``, ``rho0 omega' = 0`` and also ``omega0 rho0 = 0``;
    without the last condition the extra block can add ``sqrt(|omega0^1/2 rho0^1/2|)``
    terms to the spectrum.
    """
    omega0 = validate_positive(omega0)
    rho0 = validate_positive(rho0)
    checks = (
        ("omega0 rho'", omega0.matrix, base.rho.matrix),
        ("rho0 omega'", rho0.matrix, base.omega.matrix),
        ("omega0 rho0", omega0.matrix, rho0.matrix),
    )
    for label, a, b in checks:
        r = np.linalg.norm(a @ b)
        if r > tol * (1.0 + np.linalg.norm(a) * np.linalg.norm(b)):
            raise NotOrthogonal(f"||{label}||_F = {r:.3e}")
    return StatePair(
        validate_positive(base.omega.matrix + omega0.matrix),
        validate_positive(base.rho.matrix + rho0.matrix),
    )
