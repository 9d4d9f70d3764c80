"""
Hankel package - 精確有理數 Hankel 行列式與曲率係數
"""
from app.core.hankel.coefficients import (
    coefficient_from_determinants,
    coefficient_table,
    curvature_coefficient,
    leading_coefficient_prediction,
)
from app.core.hankel.determinants import (
    HankelFamily,
    bareiss_determinant,
    hankel_det_exact,
    hankel_matrix,
)
from app.core.hankel.moments import MomentSequence, moment
from app.core.hankel.orthopoly import OrthoPolySequence, ortho_poly_generate
from app.core.hankel.rational import as_rational, format_rational, parse_rational
from app.core.hankel.selberg import (
    b_recursion_ratio,
    block_decompose,
    f_recursion_ratio,
    hankel_b,
    interleaved_recursion_ratio,
    pivot,
    selberg_f,
)

__all__ = [
    'MomentSequence', 'moment',
    'HankelFamily', 'bareiss_determinant', 'hankel_det_exact', 'hankel_matrix',
    'selberg_f', 'f_recursion_ratio', 'block_decompose', 'hankel_b',
    'b_recursion_ratio', 'interleaved_recursion_ratio', 'pivot',
    'curvature_coefficient', 'coefficient_from_determinants', 'coefficient_table',
    'leading_coefficient_prediction',
    'OrthoPolySequence', 'ortho_poly_generate',
    'as_rational', 'format_rational', 'parse_rational',
]
