"""
Selberg 閉式與交錯序列的區塊分解

F_n(α,β) = (1/αⁿ) ∏_{k<n} (k!)² ∏_{j,k<n} α/(α(k+j)+β)
B_{2m}   = F_m(α,β)·F_m(α,β+α)
B_{2m-1} = F_m(α,β)·F_{m-1}(α,β+α)
F_0 = B_0 = 1
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Tuple

from app.core.hankel.rational import RationalLike, as_rational


def _check_positive(alpha: Fraction, beta: Fraction) -> None:
    if alpha <= 0 or beta <= 0:
        raise ValueError(f"α、β 必須大於 0，當前值: α={alpha}, β={beta}")


@lru_cache(maxsize=512)
def _selberg_cached(n: int, alpha: Fraction, beta: Fraction) -> Fraction:
    value = Fraction(1) / alpha ** n
    for k in range(n):
        value *= factorial(k) ** 2
    for j in range(n):
        for k in range(n):
            value *= alpha / (alpha * (k + j) + beta)
    return value


def selberg_f(n: int, alpha: RationalLike, beta: RationalLike) -> Fraction:
    """F_n(α,β)，即非交錯序列 {1/(αk+β)} 的 n×n Hankel 行列式"""
    if n < 0:
        raise ValueError(f"維度必須 >= 0，當前值: {n}")
    alpha, beta = as_rational(alpha), as_rational(beta)
    _check_positive(alpha, beta)
    if n == 0:
        return Fraction(1)
    return _selberg_cached(n, alpha, beta)


def f_recursion_ratio(n: int, alpha: RationalLike, beta: RationalLike) -> Fraction:
    """F_n·F_{n-2}/F_{n-1}² 的閉式（n ≥ 2）"""
    if n < 2:
        raise ValueError(f"遞迴比值需要 n >= 2，當前值: {n}")
    a, b = as_rational(alpha), as_rational(beta)
    _check_positive(a, b)
    numerator = a ** 2 * (a * (n - 2) + b) ** 2 * (n - 1) ** 2
    denominator = (a * (2 * n - 2) + b) * (a * (2 * n - 3) + b) ** 2 * (a * (2 * n - 4) + b)
    return numerator / denominator


def block_decompose(n: int) -> Tuple[int, int]:
    """B_n 的區塊維度 (m_F, m_E)：n=2m → (m, m)，n=2m−1 → (m, m−1)"""
    if n < 1:
        raise ValueError(f"維度必須 >= 1，當前值: {n}")
    return (n + 1) // 2, n // 2


def hankel_b(n: int, alpha: RationalLike = 2, beta: RationalLike = 3) -> Fraction:
    """交錯序列 {1/(αk+β), 0} 的 n×n Hankel 行列式 B_n"""
    if n == 0:
        return Fraction(1)
    alpha, beta = as_rational(alpha), as_rational(beta)
    m_f, m_e = block_decompose(n)
    return selberg_f(m_f, alpha, beta) * selberg_f(m_e, alpha, beta + alpha)


def b_recursion_ratio(n: int) -> Fraction:
    """(α,β)=(2,3) 時 B_n·B_{n-2}/B_{n-1}² = (n+(−1)ⁿ)²/(4n²−1)"""
    if n < 2:
        raise ValueError(f"遞迴比值需要 n >= 2，當前值: {n}")
    sign = 1 if n % 2 == 0 else -1
    return Fraction((n + sign) ** 2, 4 * n * n - 1)


def interleaved_recursion_ratio(n: int, alpha: RationalLike, beta: RationalLike) -> Fraction:
    """一般 (α,β) 下 B_n·B_{n-2}/B_{n-1}² 的閉式

    n = 2m:   (α(m−1)+β)² / ((α(2m−1)+β)(α(2m−2)+β))
    n = 2m−1: α²(m−1)² / ((α(2m−2)+β)(α(2m−3)+β))
    """
    if n < 2:
        raise ValueError(f"遞迴比值需要 n >= 2，當前值: {n}")
    a, b = as_rational(alpha), as_rational(beta)
    _check_positive(a, b)
    if n % 2 == 0:
        m = n // 2
        return (a * (m - 1) + b) ** 2 / ((a * (2 * m - 1) + b) * (a * (2 * m - 2) + b))
    m = (n + 1) // 2
    return a ** 2 * (m - 1) ** 2 / ((a * (2 * m - 2) + b) * (a * (2 * m - 3) + b))


def pivot(k: int, alpha: RationalLike = 2, beta: RationalLike = 3) -> Fraction:
    """p_k = B_k/B_{k−1}，高斯消去（不換列）的第 k 個主元"""
    if k < 1:
        raise ValueError(f"主元索引必須 >= 1，當前值: {k}")
    return hankel_b(k, alpha, beta) / hankel_b(k - 1, alpha, beta)
