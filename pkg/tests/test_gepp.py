import math

import numpy as np
import pytest

from butterfly_trees.butterfly import is_nonsimple_butterfly, is_simple_butterfly
from butterfly_trees.gepp import (
    batch_gepp_words,
    gepp_factorization,
    gepp_permutation,
    nonsimple_matrices,
    random_nonsimple_butterfly_matrix,
    random_simple_butterfly_matrix,
    rotation,
    simple_matrices,
    uniformity_check,
)
from butterfly_trees.sampling import RngState


def plu_error(M, word, L, U):
    P = np.zeros_like(M)
    for j, wj in enumerate(word):
        P[wj - 1, j] = 1.0
    return np.abs(P @ M - L @ U).max()


def test_rotation():
    assert np.allclose(rotation(0.0), np.eye(2))
    t = 0.7
    R = rotation(t)
    assert np.allclose(R.T @ R, np.eye(2), atol=1e-15)
    assert R[0, 1] == math.sin(t) and R[1, 0] == -math.sin(t)


def test_gepp_examples():
    assert gepp_permutation(np.eye(4)) == (1, 2, 3, 4)
    assert gepp_permutation(rotation(2 * math.pi / 3)) == (2, 1)
    # |cos| = 0.5 < |sin| forces the swap at theta = 2*pi/3
    assert abs(math.cos(2 * math.pi / 3)) < abs(math.sin(2 * math.pi / 3))


def test_gepp_tie_keeps_first_row():
    M = np.array([[1.0, 0.0], [-1.0, 1.0]])
    assert gepp_permutation(M) == (1, 2)


def test_gepp_singular_raises():
    with pytest.raises(ValueError):
        gepp_permutation(np.zeros((3, 3)))
    M = np.array([[1.0, 2.0], [1.0, 2.0]])
    with pytest.raises(ValueError):
        gepp_permutation(M)
    with pytest.raises(ValueError):
        gepp_factorization(np.ones((2, 3)))


def test_identity_angles_give_identity_matrix():
    for n in (1, 2, 3):
        M = nonsimple_matrices(n, np.zeros((1, (1 << n) - 1)))[0]
        assert np.allclose(M, np.eye(1 << n))
        S = simple_matrices(n, np.zeros((1, n)))[0]
        assert np.allclose(S, np.eye(1 << n))


def test_order_two_sampler_is_one_rotation():
    theta = RngState(0).generator().uniform(0, 2 * np.pi)
    assert np.allclose(random_simple_butterfly_matrix(1, RngState(0)), rotation(theta))
    assert np.allclose(random_nonsimple_butterfly_matrix(1, RngState(0)), rotation(theta))


def test_simple_matrix_is_kron_of_rotations():
    g = RngState(5).generator()
    thetas = g.uniform(0, 2 * np.pi, size=3)
    M = simple_matrices(3, thetas[None])[0]
    K = rotation(thetas[2])
    for t in (thetas[1], thetas[0]):
        K = np.kron(K, rotation(t))
    assert np.allclose(M, K, atol=1e-14)


def test_orthogonality():
    for n in range(1, 7):
        M = random_simple_butterfly_matrix(n, RngState(42, n))
        assert np.abs(M.T @ M - np.eye(1 << n)).max() <= 1e-12
        B = random_nonsimple_butterfly_matrix(n, RngState(43, n))
        assert np.abs(B.T @ B - np.eye(1 << n)).max() <= 1e-12


def test_plu_reconstruction():
    for n in range(1, 7):
        for i in range(10):
            M = random_nonsimple_butterfly_matrix(n, RngState(77, 10 * n + i))
            word, L, U = gepp_factorization(M)
            assert plu_error(M, word, L, U) <= 1e-9
            assert np.allclose(np.triu(L, 1), 0) and np.allclose(np.tril(U, -1), 0)
            assert np.allclose(np.diag(L), 1)


def test_membership_of_gepp_permutations():
    for n in range(1, 6):
        for i in range(60):
            w = gepp_permutation(random_simple_butterfly_matrix(n, RngState(7, 100 * n + i)))
            assert is_simple_butterfly(w)
            w = gepp_permutation(random_nonsimple_butterfly_matrix(n, RngState(8, 100 * n + i)))
            assert is_nonsimple_butterfly(w)


def test_batch_gepp_matches_scalar():
    g = RngState(11).generator()
    mats = nonsimple_matrices(3, g.uniform(0, 2 * np.pi, size=(25, 7)))
    words = batch_gepp_words(mats)
    for t in range(25):
        assert tuple(int(x) for x in words[t]) == gepp_permutation(mats[t])


def test_uniformity_check_simple():
    rep = uniformity_check(2, 40_000, RngState(1234), family="simple")
    assert rep.classes == 4
    assert rep.pvalue > 0.001
    assert sum(rep.counts.values()) == 40_000


def test_uniformity_check_nonsimple():
    rep = uniformity_check(2, 40_000, RngState(4321), family="nonsimple")
    assert rep.classes == 8
    assert rep.pvalue > 0.001


def test_uniformity_check_caps():
    with pytest.raises(ValueError):
        uniformity_check(4, 10, RngState(0), family="nonsimple")
    with pytest.raises(ValueError):
        uniformity_check(11, 10, RngState(0), family="simple")
    with pytest.raises(ValueError):
        uniformity_check(2, 10, RngState(0), family="other")
