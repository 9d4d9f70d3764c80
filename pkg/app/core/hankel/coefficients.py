"""
通用曲率係數 a_j 與主特徵值係數的預測

κ_j = √(a_j · c_{j+1} / (c_1·c_j))，其中 c_i 為 λ_{i,ε} ≈ c_i ε^{2i} 的首項係數
"""
from fractions import Fraction
from math import factorial
from typing import List, Sequence

from app.core.hankel.selberg import hankel_b, pivot


def curvature_coefficient(j: int) -> Fraction:
    """a_j（對應 κ_j），i = j+1 時 a_j = (i/(i+(−1)^i))²·(4i²−1)/3

    Examples:
        >>> curvature_coefficient(1)
        Fraction(20, 9)
    """
    if j < 1:
        raise ValueError(f"曲率索引必須 >= 1，當前值: {j}")
    i = j + 1
    sign = 1 if i % 2 == 0 else -1
    return Fraction(i, i + sign) ** 2 * Fraction(4 * i * i - 1, 3)


def coefficient_from_determinants(j: int) -> Fraction:
    """由 Hankel 行列式重建 a_j = (j+1)²·B_1·B_j² / (B_{j+1}·B_{j−1})，(α,β) = (2,3)"""
    if j < 1:
        raise ValueError(f"曲率索引必須 >= 1，當前值: {j}")
    b1 = hankel_b(1)
    return (j + 1) ** 2 * b1 * hankel_b(j) ** 2 / (hankel_b(j + 1) * hankel_b(j - 1))


def coefficient_table(max_j: int) -> List[Fraction]:
    """a_1..a_maxJ"""
    return [curvature_coefficient(j) for j in range(1, max_j + 1)]


def leading_coefficient_prediction(kappas: Sequence[float], speed: float = 1.0) -> List[float]:
    """由曲率預測 C_ε 特徵值的首項係數

    c_1 = p_1·r²，c_j = (κ_1⋯κ_{j−1})²·p_j·r^{2j}/(j!)²，r = ‖γ′‖

    Args:
        kappas: κ_1..κ_{n−1}
        speed: 參數速度 r

    Returns:
        c_1..c_n
    """
    coefficients = []
    product = 1.0
    for j in range(1, len(kappas) + 2):
        if j >= 2:
            product *= float(kappas[j - 2]) ** 2
        value = product * float(pivot(j)) * speed ** (2 * j) / factorial(j) ** 2
        coefficients.append(value)
    return coefficients
