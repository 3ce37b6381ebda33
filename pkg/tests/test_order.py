import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import make_pair
from kfidelity.errors import LengthMismatch, NotEquivalent, NotOrthogonal
from kfidelity.fidelity import fidelity_spectrum, fidelity_vector
from kfidelity.order import (
    canonical_form,
    equivalent,
    f_dominates,
    find_gamma_witness,
    gamma_transform_states,
    operator_dominates,
    split_extend,
    weakly_submajorized,
)
from kfidelity.pairs import random_invertible
from kfidelity.states import StatePair, random_density, random_unitary, state_pair, validate_positive

seeds = st.integers(0, 2**32 - 1)


def test_gamma_transform_unitary_and_scalar(rng):
    p = make_pair(3, 1)
    U = random_unitary(rng, 3)
    q = gamma_transform_states(p, U)
    np.testing.assert_allclose(q.omega.matrix, U @ p.omega.matrix @ U.conj().T, atol=1e-14)
    np.testing.assert_allclose(fidelity_vector(q).partials, fidelity_vector(p).partials, atol=1e-12)
    q = gamma_transform_states(p, 2 * np.eye(3))
    np.testing.assert_allclose(q.omega.matrix, 4 * p.omega.matrix)
    np.testing.assert_allclose(q.rho.matrix, p.rho.matrix / 4)
    np.testing.assert_allclose(fidelity_vector(q).partials, fidelity_vector(p).partials, atol=1e-12)


@given(seeds, st.integers(1, 6), st.data())
def test_gamma_invariance(seed, d, data):
    ranks = (data.draw(st.integers(1, d)), data.draw(st.integers(1, d)))
    p = make_pair(d, seed, ranks)
    X = random_invertible(np.random.default_rng(seed), d)
    q = gamma_transform_states(p, X)
    assert np.max(np.abs(fidelity_vector(p).partials - fidelity_vector(q).partials)) <= 1e-7


def test_canonical_form_examples():
    p = make_pair(3, 2)
    c = canonical_form(StatePair(p.omega, validate_positive(np.eye(3) / 3)))
    np.testing.assert_allclose(c.matrix, p.omega.matrix / 3, atol=1e-15)
    pd, qd = np.array([0.5, 0.3, 0.2]), np.array([0.1, 0.6, 0.3])
    c = canonical_form(state_pair(np.diag(pd), np.diag(qd)))
    np.testing.assert_allclose(c.matrix, np.diag(pd * qd), atol=1e-15)
    lam = np.sort(np.sqrt(pd * qd))[::-1]
    np.testing.assert_allclose(np.sqrt(c.eigen.values), lam, atol=1e-12)


@given(seeds, st.integers(1, 6))
def test_canonical_spectrum(seed, d):
    p = make_pair(d, seed)
    np.testing.assert_allclose(canonical_form(p).eigen.values, fidelity_spectrum(p) ** 2, atol=1e-8)


def test_witness_identity():
    p = make_pair(3, 5)
    w = find_gamma_witness(p, p)
    assert w.residual_omega <= 1e-12 and w.residual_rho <= 1e-12


@given(seeds, st.integers(1, 6))
def test_witness_round_trip(seed, d):
    rng = np.random.default_rng(seed)
    p = make_pair(d, seed)
    q = gamma_transform_states(p, random_invertible(rng, d, 5.0))
    w = find_gamma_witness(p, q)
    assert w.residual_omega <= 1e-6 * (1 + np.linalg.norm(q.omega.matrix))
    assert w.residual_rho <= 1e-6 * (1 + np.linalg.norm(q.rho.matrix))


def test_witness_degenerate_canonical_spectrum(rng):
    V = random_unitary(rng, 4)
    tau = validate_positive(V @ np.diag([0.4, 0.4, 0.1, 0.1]) @ V.conj().T)
    base = StatePair(tau, tau)
    p = gamma_transform_states(base, random_invertible(rng, 4, 5.0))
    q = gamma_transform_states(base, random_invertible(rng, 4, 5.0))
    w = find_gamma_witness(p, q)
    assert max(w.residual_omega, w.residual_rho) <= 1e-6


def test_witness_rejects_inequivalent():
    p = make_pair(3, 5)
    q = state_pair(p.omega.matrix * (1 + 2e-3), p.rho)
    with pytest.raises(NotEquivalent):
        find_gamma_witness(p, q)


def test_equivalent_examples():
    p = make_pair(4, 6)
    assert equivalent(p, p)
    assert equivalent(p, p.swapped())
    assert not equivalent(p, state_pair(p.omega.matrix * 2, p.rho))


def test_operator_dominates_examples():
    big = make_pair(3, 7)
    assert operator_dominates(big, big)
    small = state_pair(0.5 * big.omega.matrix, 0.5 * big.rho.matrix)
    assert operator_dominates(big, small)
    np.testing.assert_allclose(fidelity_vector(small).partials, 0.5 * fidelity_vector(big).partials, atol=1e-12)
    assert not operator_dominates(small, big)


@given(seeds, st.integers(1, 6))
def test_split_extension_preserves_dominance(seed, d):
    rng = np.random.default_rng(seed)
    big = make_pair(d, seed, (int(rng.integers(1, d + 1)), int(rng.integers(1, d + 1))))

    def shrink(P):
        C = random_density(d, int(rng.integers(1, d + 1)), int(rng.integers(2**32))).matrix
        C = C / np.linalg.eigvalsh(C)[-1] * rng.uniform()
        return P.sqrt @ (np.eye(d) - C) @ P.sqrt

    small = state_pair(shrink(big.omega), shrink(big.rho))
    assert operator_dominates(big, small)
    assert f_dominates(big, small, 1e-9)


def test_f_dominates_examples(rng):
    p = make_pair(3, 11)
    assert f_dominates(p, p) and f_dominates(p, p)
    a = gamma_transform_states(p, random_invertible(rng, 3))
    b = gamma_transform_states(p, random_invertible(rng, 3))
    mix = state_pair(0.3 * a.omega.matrix + 0.7 * b.omega.matrix, 0.3 * a.rho.matrix + 0.7 * b.rho.matrix)
    assert f_dominates(mix, p)
    bigger = state_pair(4 * p.omega.matrix, p.rho)
    assert not f_dominates(p, bigger)


def test_weakly_submajorized_examples():
    assert weakly_submajorized([0.3, 0.1], [0.3, 0.1])
    assert not weakly_submajorized([1.0, 0.0], [0.6, 0.6])
    assert weakly_submajorized([0.5, 0.3], [0.6, 0.4])
    with pytest.raises(LengthMismatch):
        weakly_submajorized([1.0], [1.0, 0.0])


def _basis(i, d=4):
    v = np.zeros(d)
    v[i] = 1.0
    return np.outer(v, v)


def test_split_extend_examples(rng):
    p = make_pair(2, 3)
    pad = lambda M: np.pad(M, ((0, 2), (0, 2)))  # noqa: E731
    base = state_pair(pad(p.omega.matrix), pad(p.rho.matrix))
    assert equivalent(split_extend(base, np.zeros((4, 4)), np.zeros((4, 4))), base)
    ext = split_extend(base, 0.7 * _basis(2), 1.3 * _basis(3))
    assert equivalent(ext, base, 1e-8)
    assert operator_dominates(ext, base)


def test_split_extend_needs_omega0_rho0_orthogonal():
    p = make_pair(2, 3)
    pad = lambda M: np.pad(M, ((0, 1), (0, 1)))  # noqa: E731
    base = state_pair(pad(p.omega.matrix), pad(p.rho.matrix))
    a, b = 0.5, 0.8
    e3 = _basis(2, 3)
    with pytest.raises(NotOrthogonal):
        split_extend(base, a * e3, b * e3)
    # the unchecked sum really leaves the class: an extra sqrt(ab) appears in the spectrum
    raw = state_pair(base.omega.matrix + a * e3, base.rho.matrix + b * e3)
    lam = fidelity_spectrum(raw)
    assert np.min(np.abs(lam - np.sqrt(a * b))) <= 1e-12
    assert not equivalent(raw, base)
