"""
局部共變異矩陣單元測試
"""
from dataclasses import replace

import numpy as np
import pytest
from mpmath import mp

from app.core.errors import DomainError, PatternViolation, TooFewSamples
from app.core.frenet import Curve, SampledCurve, builtin_curve
from app.core.local_svd import (
    checkerboard_blocks,
    covariance_mean_centered,
    covariance_on_curve,
    discrete_covariance,
    gauss_legendre,
    surrogate_covariance,
    symmetric_eigen,
    taylor_moment_matrix,
    window_rule,
)
from app.core.local_svd.covariance import FLOAT64_FLOOR


def _line(direction=('0.6', '0.8')) -> Curve:
    """十進位字串建構方向，50 位精度下 ‖u‖ = 1"""
    u = [mp.mpf(x) for x in direction]
    return Curve(dimension=2, value_fn=lambda t: [t * c for c in u], name='line')


class TestQuadrature:
    """Gauss-Legendre 規則測試"""

    def test_weights_sum_to_two(self):
        _, weights = gauss_legendre(12)
        assert abs(mp.fsum(weights) - 2) < mp.mpf(10) ** -45

    def test_integrates_polynomials_exactly(self):
        """測試：order 點規則對 x^{2·order−2} 精確"""
        nodes, weights = gauss_legendre(6)
        value = mp.fsum(w * x ** 10 for x, w in zip(nodes, weights))
        assert abs(value - mp.mpf(2) / 11) < mp.mpf(10) ** -45

    def test_window_rule_is_normalized_and_symmetric(self):
        offsets, weights = window_rule(0.1, 8)
        assert abs(mp.fsum(weights) - 1) < mp.mpf(10) ** -45
        assert abs(mp.fsum(offsets)) < mp.mpf(10) ** -45
        assert min(offsets) > -0.1 and max(offsets) < 0.1

    def test_order_too_small(self):
        with pytest.raises(ValueError):
            gauss_legendre(1)


class TestCovarianceOnCurve:
    """曲線上共變異矩陣測試"""

    def test_unit_circle_closed_form(self, unit_circle):
        """測試：C_12 = 0，C_22 = 1/2 − sin(2ε)/(4ε)，C_11 = 3/2 − 2 sin ε/ε + sin(2ε)/(4ε)"""
        eps = mp.mpf('0.01')
        C = covariance_on_curve(unit_circle, 0.0, eps).entries
        assert abs(C[0, 1]) < mp.mpf(10) ** -40
        c22 = mp.mpf(1) / 2 - mp.sin(2 * eps) / (4 * eps)
        c11 = mp.mpf(3) / 2 - 2 * mp.sin(eps) / eps + mp.sin(2 * eps) / (4 * eps)
        assert abs(C[1, 1] / c22 - 1) < mp.mpf(10) ** -35
        assert abs(C[0, 0] / c11 - 1) < mp.mpf(10) ** -30

    def test_leading_eigenvalue(self, unit_circle):
        """測試：λ_1 ≈ ε²/3"""
        eps = 1e-2
        values, _ = symmetric_eigen(covariance_on_curve(unit_circle, 0.7, eps))
        assert float(values[0]) == pytest.approx(eps ** 2 / 3, rel=1e-4)
        assert float(values[1]) == pytest.approx(eps ** 4 / 20, rel=1e-3)

    def test_symmetric_and_positive_semidefinite(self, twisted_cubic):
        covariance = covariance_on_curve(twisted_cubic, 1.0, 0.05)
        matrix = covariance.to_numpy()
        np.testing.assert_array_equal(matrix, matrix.T)
        assert np.all(np.linalg.eigvalsh(matrix) > -1e-15)
        assert covariance.dimension == 3
        assert not covariance.centered

    def test_floor_follows_working_precision(self, unit_circle):
        covariance = covariance_on_curve(unit_circle, 0.0, 0.1)
        assert covariance.floor == mp.mpf(10) ** (1 - mp.dps)

    def test_window_outside_domain(self, twisted_cubic):
        bounded = replace(twisted_cubic, domain=(0.0, 1.0))
        with pytest.raises(DomainError):
            covariance_on_curve(bounded, 0.05, 0.1)

    def test_non_positive_eps(self, unit_circle):
        with pytest.raises(ValueError):
            covariance_on_curve(unit_circle, 0.0, 0.0)


class TestMeanCentered:
    """均值中心版本測試"""

    def test_straight_line(self):
        """測試：直線的 C̄ 只有 λ_1 = ε²/3"""
        eps = mp.mpf('0.1')
        values, vectors = symmetric_eigen(covariance_mean_centered(_line(), 0.3, eps))
        assert abs(values[0] / (eps ** 2 / 3) - 1) < mp.mpf(10) ** -30
        assert abs(values[1]) < mp.mpf(10) ** -40
        assert float(vectors[0, 0]) == pytest.approx(0.6, abs=1e-15)

    def test_direction_norm_is_exact(self):
        """測試：λ_1 = ε²/3·‖u‖²，方向必須在工作精度下為單位向量"""
        u = _line().value(1)
        assert abs(mp.fsum(x * x for x in u) - 1) < mp.mpf(10) ** -45

    def test_centering_reduces_trace(self, twisted_cubic):
        """測試：trace(C̄) ≤ trace(C)"""
        plain = covariance_on_curve(twisted_cubic, 1.0, 0.1)
        centered = covariance_mean_centered(twisted_cubic, 1.0, 0.1)
        assert centered.centered
        assert centered.trace() <= plain.trace()

    def test_frame_converges_to_plain_frame(self, twisted_cubic):
        """測試：1 − |⟨ū_i, u_i⟩| 隨 ε 縮小趨近 0"""
        deviations = []
        for eps in (1e-2, 1e-3):
            _, plain = symmetric_eigen(covariance_on_curve(twisted_cubic, 1.0, eps))
            _, centered = symmetric_eigen(covariance_mean_centered(twisted_cubic, 1.0, eps))
            deviations.append([
                1 - abs(mp.fsum(plain[k, i] * centered[k, i] for k in range(3)))
                for i in range(3)
            ])
        coarse, fine = deviations
        for i in range(3):
            assert fine[i] < coarse[i]
            assert fine[i] < mp.mpf('1e-6')


class TestTaylorSurrogate:
    """Taylor 代理測試"""

    def test_moment_matrix_entries(self):
        """測試：ε = 1 時 ℰ_11 = 1/3，ℰ_12 = 0，ℰ_22 = 1/20，ℰ_13 = 1/30"""
        E = taylor_moment_matrix(3, 1)
        assert E[0, 0] == mp.mpf(1) / 3
        assert E[0, 1] == 0
        assert E[1, 1] == mp.mpf(1) / 20
        assert E[0, 2] == mp.mpf(1) / 30
        assert E[2, 2] == mp.mpf(1) / 252

    def test_moment_matrix_scaling(self):
        E = taylor_moment_matrix(2, mp.mpf('0.5'))
        assert E[1, 1] == mp.mpf('0.5') ** 4 / 20

    def test_matches_on_curve_covariance(self, unit_circle):
        """測試：四個導數的代理與曲線上矩陣差 O(ε⁶)"""
        eps = 1e-2
        surrogate = surrogate_covariance(unit_circle.derivatives(0.4, 4), eps, t=0.4)
        exact = covariance_on_curve(unit_circle, 0.4, eps)
        assert np.max(np.abs(surrogate.to_numpy() - exact.to_numpy())) <= 1e-12

    @pytest.mark.parametrize('count,ratio', [(2, 16), (4, 64)])
    def test_error_order_under_halving(self, unit_circle, count, ratio):
        """測試：m 個導數的代理誤差為 O(ε^{m+2})，ε 減半時縮小 2^{m+2} 倍"""
        def error(eps):
            surrogate = surrogate_covariance(unit_circle.derivatives(0.4, count), eps, t=0.4).entries
            exact = covariance_on_curve(unit_circle, 0.4, eps).entries
            return max(abs(surrogate[i, j] - exact[i, j]) for i in range(2) for j in range(2))

        assert float(error(1e-2) / error(5e-3)) == pytest.approx(ratio, rel=1e-2)

    def test_requires_derivatives(self):
        with pytest.raises(ValueError):
            surrogate_covariance([], 0.1)


class TestCheckerboard:
    """棋盤模式分塊測試"""

    def test_split_blocks(self):
        matrix = [[1, 0, 2, 0], [0, 4, 0, 5], [2, 0, 3, 0], [0, 5, 0, 6]]
        odd, even, permutation = checkerboard_blocks(matrix)
        assert odd.tolist() == [[1, 2], [2, 3]]
        assert even.tolist() == [[4, 5], [5, 6]]
        assert permutation == [0, 2, 1, 3]

    def test_pattern_violation(self):
        with pytest.raises(PatternViolation):
            checkerboard_blocks([[1, 1, 2], [1, 4, 0], [2, 0, 3]])

    def test_toroidal_curve_at_origin(self):
        """測試：t = 0 時偶數維典型曲線的 C_ε 為棋盤模式，區塊特徵值即全體特徵值"""
        covariance = covariance_on_curve(builtin_curve('toroidal4'), 0.0, 0.1)
        odd, even, _ = checkerboard_blocks(covariance)
        full, _ = symmetric_eigen(covariance)
        blocks = sorted(symmetric_eigen(odd)[0] + symmetric_eigen(even)[0], reverse=True)
        for value, expected in zip(blocks, full):
            assert abs(value / expected - 1) < mp.mpf(10) ** -25


class TestDiscreteCovariance:
    """離散樣本共變異測試"""

    def test_matches_analytic_circle(self, circle_samples, unit_circle):
        discrete = discrete_covariance(circle_samples, 1.0, 0.05)
        exact = covariance_on_curve(unit_circle, 1.0, 0.05)
        np.testing.assert_allclose(discrete.to_numpy(), exact.to_numpy(), atol=1e-6)
        assert discrete.floor == mp.mpf(FLOAT64_FLOOR)

    def test_converges_as_samples_densify(self, unit_circle):
        """測試：步長 1e−2 → 2.5e−3，與 C_ε 的差距每次至少減半（梯形法則 O(h²)）"""
        exact = covariance_on_curve(unit_circle, 1.0, 0.1).to_numpy()
        errors = []
        for count in (200, 400, 800):
            t = np.linspace(0.0, 2.0, count + 1)
            samples = SampledCurve(parameters=t, points=np.column_stack([np.cos(t), np.sin(t)]))
            errors.append(np.max(np.abs(discrete_covariance(samples, 1.0, 0.1).to_numpy() - exact)))
        assert errors[1] < errors[0] / 2
        assert errors[2] < errors[1] / 2
        assert errors[2] < 1e-5

    def test_window_outside_samples(self, circle_samples):
        with pytest.raises(TooFewSamples):
            discrete_covariance(circle_samples, 0.0, 0.1)

    def test_window_too_narrow(self, circle_samples):
        """測試：窗口內樣本不足 5 個"""
        with pytest.raises(TooFewSamples):
            discrete_covariance(circle_samples, 1.0, 1e-3)
