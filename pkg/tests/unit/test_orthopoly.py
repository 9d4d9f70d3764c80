"""
首一正交多項式單元測試
Gram-Schmidt 產生的 β_n 與 Hankel 行列式比值對照
"""
from fractions import Fraction

import pytest

from app.core.errors import DegenerateMoments
from app.core.hankel import MomentSequence, hankel_det_exact, ortho_poly_generate
from app.core.hankel.orthopoly import format_polynomial, inner_product, shift


def _recurrence_step(x_pn, pn, pm, alpha, beta):
    """(x − α)P_n − βP_{n−1}"""
    size = len(x_pn)
    padded = lambda p: list(p) + [Fraction(0)] * (size - len(p))  # noqa: E731
    return tuple(a - alpha * b - beta * c for a, b, c in zip(padded(x_pn), padded(pn), padded(pm)))


class TestOrthoPolyGenerate:
    """正交多項式產生測試"""

    @pytest.mark.parametrize('seq', [
        MomentSequence.of(2, 3, interleave_zeros=True),
        MomentSequence.of(1, 1),
    ], ids=['interleaved-2-3', 'plain-1-1'])
    def test_beta_matches_determinant_ratio(self, seq):
        """測試：β_{n−1} = B_n·B_{n−2}/B_{n−1}²，n ≤ 8"""
        family = ortho_poly_generate(seq.take(17), 8)
        for n in range(2, 9):
            dets = [hankel_det_exact(seq, k) for k in (n, n - 1, n - 2)]
            assert family.betas[n - 1] == dets[0] * dets[2] / dets[1] ** 2

    def test_norms_are_determinant_pivots(self):
        """測試：⟨P_n, P_n⟩ = B_{n+1}/B_n"""
        seq = MomentSequence.of(2, 3, interleave_zeros=True)
        family = ortho_poly_generate(seq.take(13), 6)
        for n, norm in enumerate(family.norms()):
            assert norm == hankel_det_exact(seq, n + 1) / hankel_det_exact(seq, n)

    def test_polynomials_are_monic_and_orthogonal(self):
        seq = MomentSequence.of(1, 1)
        family = ortho_poly_generate(seq.take(11), 5)
        for n, p in enumerate(family.polys):
            assert len(p) == n + 1
            assert p[-1] == 1
            for m in range(n):
                assert inner_product(p, family.polys[m], family.measure_moments) == 0

    def test_three_term_recurrence(self):
        """測試：P_{n+1} = (x − α_n)P_n − β_n P_{n−1}"""
        seq = MomentSequence.of(1, 2)
        family = ortho_poly_generate(seq.take(13), 6)
        for n in range(1, 6):
            p = family.polys
            step = _recurrence_step(shift(p[n]), p[n], p[n - 1], family.alphas[n], family.betas[n])
            assert step == p[n + 1]

    def test_symmetric_measure_has_zero_alpha(self):
        """測試：交錯序列（偶測度）的 α_n 全為 0"""
        family = ortho_poly_generate(MomentSequence.of(2, 3, interleave_zeros=True).take(11), 5)
        assert all(alpha == 0 for alpha in family.alphas)
        assert family.polys[2] == (Fraction(-3, 5), Fraction(0), Fraction(1))

    def test_shifted_legendre_first_values(self):
        """測試：[0,1] 上的 Legendre：P_1 = x − 1/2，β_1 = 1/12"""
        family = ortho_poly_generate(MomentSequence.of(1, 1).take(5), 2)
        assert family.polys[1] == (Fraction(-1, 2), Fraction(1))
        assert family.betas[0] == 1
        assert family.betas[1] == Fraction(1, 12)
        assert family.count == 2

    def test_not_enough_moments(self):
        with pytest.raises(ValueError):
            ortho_poly_generate([Fraction(1), Fraction(1, 2)], 2)

    def test_degenerate_moments(self):
        """測試：μ_0 = 0 時無法正規化"""
        with pytest.raises(DegenerateMoments):
            ortho_poly_generate([Fraction(0)] * 5, 2)

    def test_format_polynomial(self):
        assert format_polynomial((Fraction(-3, 5), Fraction(0), Fraction(1))) == 'x^2 - 3/5'
        assert format_polynomial((Fraction(0),)) == '0'
