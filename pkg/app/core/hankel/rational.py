"""
有理數工具
所有精確量（μ_n、B_n、F_n、p_k、a_j）都以 fractions.Fraction 表示，序列化格式為 "p/q"
"""
from fractions import Fraction
from typing import Union

from mpmath import mp

RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """轉換成 Fraction

    字串使用小數點或 "p/q" 格式，與系統語系無關；
    float 先以 repr 轉字串，避免二進位誤差被當成精確值。
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"不支援的有理數輸入: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"不支援的有理數輸入: {value!r}")


def parse_rational(text: str) -> Fraction:
    """解析 "p/q"、"-p/q"、整數或小數字串"""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"無法解析有理數: {text!r}") from e


def format_rational(value: Fraction) -> str:
    """輸出 "p/q"，分母為 1 時省略"""
    return str(Fraction(value))


def to_mpf(value: Fraction):
    """以目前工作精度轉成 mpf"""
    value = Fraction(value)
    return mp.mpf(value.numerator) / value.denominator
