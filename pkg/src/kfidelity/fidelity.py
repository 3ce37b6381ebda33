"""Fidelity spectrum, partial fidelities and the transition probability.

For a pair ``{omega, rho}`` the fidelity spectrum ``lambda_1 >= ... >= lambda_d``
is the list of singular values of ``sqrt(omega) sqrt(rho)``. The k-th partial
fidelity is the sum of the ``d - k`` smallest of them, so ``F_0`` is the
ordinary (root) fidelity ``Tr |sqrt(omega) sqrt(rho)|``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadK
from .matcore import polar_unitary, singular_values
from .states import StatePair


@dataclass(frozen=True, eq=False)
class FidelityVector:
    lambdas: np.ndarray
    partials: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.lambdas)

    @property
    def fidelity(self) -> float:
        return float(self.partials[0])

    def __getitem__(self, k: int) -> float:
        if k < 0:
            raise BadK(f"k must be >= 0, got {k}")
        return float(self.partials[k]) if k < self.dim else 0.0

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "lambdas": [float(x) for x in self.lambdas],
            "partials": [float(x) for x in self.partials],
        }


def _product(pair: StatePair) -> np.ndarray:
    return pair.omega.sqrt @ pair.rho.sqrt


def fidelity_spectrum(pair: StatePair) -> np.ndarray:
    return singular_values(_product(pair))


def tail_sums(lambdas: np.ndarray) -> np.ndarray:
    """``out[k] = sum(lambdas[k:])``."""
    return np.cumsum(np.asarray(lambdas)[::-1])[::-1].copy()


def partial_fidelity(pair: StatePair, k: int) -> float:
    if k < 0:
        raise BadK(f"k must be >= 0, got {k}")
    lam = fidelity_spectrum(pair)
    return float(np.sum(lam[k:]))


def fidelity(pair: StatePair) -> float:
    return partial_fidelity(pair, 0)


def fidelity_vector(pair: StatePair) -> FidelityVector:
    lam = fidelity_spectrum(pair)
    return FidelityVector(lambdas=lam, partials=tail_sums(lam))


def transition_probability(pair: StatePair) -> float:
    return fidelity(pair) ** 2


def purification_witness(pair: StatePair) -> tuple[np.ndarray, float]:
    """Unitary ``W`` maximizing ``|Tr(sqrt(omega) sqrt(rho) W)|`` and the maximum, ``F_0``."""
    M = _product(pair)
    W = polar_unitary(M)
    return W, float(np.trace(M @ W).real)
