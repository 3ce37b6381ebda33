import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import make_pair
from kfidelity.errors import IllConditioned, NotAPair, NotBiorthogonal, RankMismatch, SingularBlock, ZeroVector
from kfidelity.fidelity import fidelity_vector
from kfidelity.order import gamma_transform_states
from kfidelity.pairs import (
    BiorthogonalSystem,
    balance,
    biorthogonal_operators,
    gamma_transform_pair,
    make_pair_biorthogonal,
    make_pair_block,
    pair_objective,
    random_dual_pair,
    random_invertible,
    validate_pair,
)
from kfidelity.states import ginibre, numeric_rank, state_pair

seeds = st.integers(0, 2**32 - 1)


def random_system(rng, d, m):
    X = random_invertible(rng, d)
    return BiorthogonalSystem(np.linalg.inv(X)[:, :m], X.conj().T[:, :m])


def test_validate_identity_and_projection():
    assert validate_pair(np.eye(3), np.eye(3)).m == 3
    P = np.diag([1.0, 1.0, 0.0])
    assert validate_pair(P, P).m == 2


def test_validate_rank_one_example():
    A = np.diag([2.0, 0.0])
    B = 0.5 * np.ones((2, 2))
    # direct multiplication oracle
    np.testing.assert_allclose(A @ B @ A, A)
    np.testing.assert_allclose(B @ A @ B, B)
    p = validate_pair(A, B)
    assert p.m == 1 and p.trace_ab == pytest.approx(1.0)


def test_validate_rejects():
    with pytest.raises(NotAPair):
        validate_pair(np.eye(2), 2 * np.eye(2))
    with pytest.raises(NotAPair):
        validate_pair(np.diag([1.0, 0.0]), np.diag([1.0, 1.0]))


def test_rank_mismatch():
    # ABA = A and BAB = B hold to 1e-7 but B carries an extra direction of size 1e-9
    A = np.diag([1.0, 0.0])
    with pytest.raises(RankMismatch):
        validate_pair(A, np.diag([1.0, 1e-9]))


def test_biorthogonal_examples():
    sys = BiorthogonalSystem(np.eye(3)[:, :2], np.eye(3)[:, :2])
    p = make_pair_biorthogonal(sys, np.ones(2))
    np.testing.assert_allclose(p.A.matrix, np.diag([1, 1, 0]))
    assert p.m == 2
    sys = BiorthogonalSystem.from_vectors([[1, 0]], [[1, 1]])
    p = make_pair_biorthogonal(sys, [2.0])
    np.testing.assert_allclose(p.A.matrix, np.diag([2.0, 0.0]))
    np.testing.assert_allclose(p.B.matrix, 0.5 * np.ones((2, 2)))


def test_biorthogonal_random_system(rng):
    sys = random_system(rng, 5, 3)
    p = make_pair_biorthogonal(sys, rng.uniform(0.1, 10, size=3))
    assert p.m == 3 and abs(p.trace_ab - 3) <= 1e-9


def test_biorthogonal_rejects():
    with pytest.raises(NotBiorthogonal):
        BiorthogonalSystem.from_vectors([[1, 0]], [[0.5, 1]])


def test_block_examples():
    p = make_pair_block(np.diag([2.0, 5.0]), np.zeros((2, 0)))
    np.testing.assert_allclose(p.B.matrix, np.diag([0.5, 0.2]))
    p = make_pair_block([[2.0]], [[1.0]])
    np.testing.assert_allclose(p.A.matrix, np.diag([2.0, 0.0]))
    np.testing.assert_allclose(p.B.matrix, [[0.5, 1.0], [1.0, 2.0]])
    A, B = p.A.matrix, p.B.matrix
    np.testing.assert_allclose(A @ B @ A, A)
    np.testing.assert_allclose(B @ A @ B, B)
    p = make_pair_block(np.diag([4.0]), np.zeros((1, 2)))
    np.testing.assert_allclose(p.B.matrix, np.diag([0.25, 0.0, 0.0]))
    with pytest.raises(SingularBlock):
        make_pair_block(np.diag([1.0, 0.0]), np.zeros((2, 1)))


def test_balance_examples(rng):
    sys = BiorthogonalSystem(np.eye(2)[:, :1], np.eye(2)[:, :1])
    out, a = balance(sys, [3.0])
    np.testing.assert_allclose(out.psi, sys.psi, atol=1e-12)
    assert a[0] == pytest.approx(3.0)
    sys = BiorthogonalSystem.from_vectors([[2, 0]], [[0.5, 0]])
    out, a = balance(sys, [1.0])
    np.testing.assert_allclose(np.linalg.norm(out.psi), 1.0)
    np.testing.assert_allclose(np.linalg.norm(out.phi), 1.0)
    assert out.balanced and not sys.balanced
    sys = random_system(rng, 5, 3)
    a = rng.uniform(0.2, 5, size=3)
    out, b = balance(sys, a)
    A0, B0 = biorthogonal_operators(sys, a)
    A1, B1 = biorthogonal_operators(out, b)
    assert np.abs(A0 - A1).max() <= 1e-10 and np.abs(B0 - B1).max() <= 1e-10
    with pytest.raises(ZeroVector):
        balance(BiorthogonalSystem(np.zeros((2, 1)), np.zeros((2, 1)), tol=np.inf), [1.0])


def test_gamma_transform_pair_examples(rng):
    p = random_dual_pair(4, 2, 1)
    q = gamma_transform_pair(p, np.eye(4))
    np.testing.assert_allclose(q.A.matrix, p.A.matrix)
    c = 3.0
    q = gamma_transform_pair(p, c * np.eye(4))
    np.testing.assert_allclose(q.A.matrix, c**2 * p.A.matrix)
    np.testing.assert_allclose(q.B.matrix, p.B.matrix / c**2)
    s = make_pair(4, 2)
    # objective is preserved against the states moved by X^-1
    t = gamma_transform_states(s, np.eye(4) / c)
    assert pair_objective(q, t) == pytest.approx(pair_objective(p, s), abs=1e-12)
    X = random_invertible(rng, 4, 10.0)
    q = gamma_transform_pair(p, X)
    assert q.m == 2
    with pytest.raises(IllConditioned):
        gamma_transform_pair(p, np.diag([1.0, 1.0, 1.0, 1e-12]))


def test_pair_objective_examples():
    s = state_pair(np.diag([0.2, 0.8]), np.diag([0.8, 0.2]))
    assert pair_objective(validate_pair(np.eye(2), np.eye(2)), s) == pytest.approx(1.0)
    p = validate_pair(np.diag([2.0, 0.0]), np.diag([0.5, 0.0]))
    assert pair_objective(p, s) == pytest.approx(0.4)


def test_random_dual_pair_examples():
    p = random_dual_pair(3, 3, 5)
    assert p.m == 3 and numeric_rank(p.A) == 3
    # full rank: B is the inverse of A
    np.testing.assert_allclose(p.B.matrix, np.linalg.inv(p.A.matrix), atol=1e-10)
    assert validate_pair(*(q.matrix for q in (random_dual_pair(4, 2, 3).A, random_dual_pair(4, 2, 3).B))).m == 2
    a, b = random_dual_pair(5, 2, 9), random_dual_pair(5, 2, 9)
    assert np.array_equal(a.A.matrix, b.A.matrix)


@given(seeds, st.integers(1, 6), st.data())
def test_pair_invariants(seed, d, data):
    m = data.draw(st.integers(1, d))
    p = random_dual_pair(d, m, seed)
    Q = p.idempotent()
    assert np.linalg.norm(Q @ Q - Q) <= 1e-7 * (1 + np.linalg.norm(Q))
    assert numeric_rank(p.A) == numeric_rank(p.B) == m
    assert abs(p.trace_ab - m) <= 1e-8
    s = make_pair(d, seed + 1)
    assert pair_objective(p, s) >= fidelity_vector(s)[d - m] - 1e-9


@given(seeds, st.integers(1, 5), st.data())
def test_objective_gamma_invariance(seed, d, data):
    m = data.draw(st.integers(1, d))
    rng = np.random.default_rng(seed)
    p = random_dual_pair(d, m, seed)
    s = make_pair(d, seed + 7)
    X = random_invertible(rng, d)
    lhs = pair_objective(gamma_transform_pair(p, X), gamma_transform_states(s, np.linalg.inv(X)))
    assert lhs == pytest.approx(pair_objective(p, s), abs=1e-8)
    lhs = pair_objective(gamma_transform_pair(p, np.linalg.inv(X)), gamma_transform_states(s, X))
    assert lhs == pytest.approx(pair_objective(p, s), abs=1e-8)


def test_objective_not_invariant_under_same_x():
    # with the same X on both sides the objective changes; scalar case makes it explicit
    p = random_dual_pair(3, 2, 4)
    s = make_pair(3, 4)
    lhs = pair_objective(gamma_transform_pair(p, 2 * np.eye(3)), gamma_transform_states(s, 2 * np.eye(3)))
    ta = np.trace(p.A.matrix @ s.omega.matrix).real
    tb = np.trace(p.B.matrix @ s.rho.matrix).real
    assert lhs == pytest.approx(0.5 * (16 * ta + tb / 16))


@given(seeds, st.integers(1, 5), st.data())
def test_rescaling_freedom(seed, d, data):
    m = data.draw(st.integers(1, d))
    p = random_dual_pair(d, m, seed)
    s = make_pair(d, seed + 3)
    ta = np.trace(p.A.matrix @ s.omega.matrix).real
    tb = np.trace(p.B.matrix @ s.rho.matrix).real
    lam = np.sqrt(tb / ta)
    q = p.rescaled(lam)
    assert q.m == m
    assert pair_objective(q, s) == pytest.approx(np.sqrt(ta * tb), rel=1e-10)
    for x in (0.5 * lam, 2 * lam):
        assert pair_objective(p.rescaled(x), s) >= np.sqrt(ta * tb) - 1e-12


def test_system_rejects_too_long():
    with pytest.raises(Exception):
        BiorthogonalSystem(ginibre(np.random.default_rng(0), 2, 3), np.zeros((2, 3)))
