"""
Jacobi 特徵分解單元測試
"""
import numpy as np
import pytest
from mpmath import mp

from app.core.errors import NoConvergence
from app.core.local_svd import symmetric_eigen


def _givens(n, i, j, angle):
    G = mp.eye(n)
    c, s = mp.cos(angle), mp.sin(angle)
    G[i, i], G[j, j], G[i, j], G[j, i] = c, c, -s, s
    return G


class TestSymmetricEigen:
    """symmetric_eigen 測試"""

    def test_diagonal_is_sorted(self):
        values, vectors = symmetric_eigen(np.diag([3.0, 1.0, 2.0]))
        assert [float(v) for v in values] == [3.0, 2.0, 1.0]
        np.testing.assert_array_equal(
            np.array(vectors.tolist(), dtype=float),
            [[1.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]],
        )

    def test_sign_convention(self):
        """測試：[[0,1],[1,0]] → λ = (1, −1)，最大分量（同值取第一個）為正"""
        values, vectors = symmetric_eigen([[0, 1], [1, 0]])
        assert [float(v) for v in values] == pytest.approx([1.0, -1.0], abs=1e-45)
        frame = np.array(vectors.tolist(), dtype=float)
        half = 1 / np.sqrt(2)
        np.testing.assert_allclose(frame, [[half, half], [half, -half]], atol=1e-15)

    def test_random_matrix_reconstructs(self):
        rng = np.random.default_rng(42)
        A = rng.normal(size=(5, 5))
        A = A + A.T
        values, V = symmetric_eigen(A)
        D = mp.diag(values)
        residual = mp.mnorm(V * D * V.T - mp.matrix(A.tolist()), 'F')
        assert residual < mp.mpf(10) ** -14
        assert mp.mnorm(V.T * V - mp.eye(5), 'F') < mp.mpf(10) ** -40
        np.testing.assert_allclose(sorted(float(v) for v in values), np.linalg.eigvalsh(A), atol=1e-12)

    def test_graded_spectrum_keeps_relative_accuracy(self):
        """測試：特徵值 1、1e−10、1e−20 經旋轉後仍有完整相對精度"""
        Q = _givens(3, 0, 1, mp.mpf('0.3')) * _givens(3, 1, 2, mp.mpf('0.5'))
        exact = [mp.one, mp.mpf('1e-10'), mp.mpf('1e-20')]
        A = Q * mp.diag(exact) * Q.T
        values, _ = symmetric_eigen(A)
        for value, target in zip(values, exact):
            assert abs(value / target - 1) < mp.mpf(10) ** -25

    def test_no_convergence(self):
        rng = np.random.default_rng(3)
        A = rng.normal(size=(6, 6))
        with pytest.raises(NoConvergence):
            symmetric_eigen(A + A.T, max_sweeps=1)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            symmetric_eigen([[1.0, 2.0, 3.0], [2.0, 1.0, 0.0]])
