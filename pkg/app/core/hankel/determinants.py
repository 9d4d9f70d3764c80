"""
Hankel 行列式的精確計算（暴力驗證用的 oracle）

H[i][j] = μ_{i+j-2}（1-based），以 Bareiss 無分數消去法求值：
先把每列乘上分母的最小公倍數變成整數矩陣，消去過程中的除法都是整除。
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import List, Sequence

from app.core.errors import DegenerateMoments
from app.core.hankel.moments import MomentSequence

logger = logging.getLogger(__name__)


def hankel_matrix(seq: MomentSequence, n: int) -> List[List[Fraction]]:
    """n×n Hankel 矩陣，(1,1) 元素為 μ_0"""
    if n < 1:
        raise ValueError(f"維度必須 >= 1，當前值: {n}")
    moments = seq.take(2 * n - 1)
    return [[moments[i + j] for j in range(n)] for i in range(n)]


def bareiss_determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """精確行列式

    Args:
        matrix: 方陣，元素為 Fraction 或整數

    Returns:
        行列式（Fraction）
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("行列式只對方陣定義")

    # 逐列清除分母
    rows = []
    scale = Fraction(1)
    for row in matrix:
        row = [Fraction(x) for x in row]
        multiplier = lcm(*(x.denominator for x in row))
        rows.append([int(x * multiplier) for x in row])
        scale *= multiplier

    sign = 1
    previous = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // previous
        previous = pivot

    return Fraction(sign * rows[n - 1][n - 1]) / scale


def hankel_det_exact(seq: MomentSequence, n: int) -> Fraction:
    """n×n Hankel 行列式；n = 0 時為空行列式 1"""
    if n == 0:
        return Fraction(1)
    return bareiss_determinant(hankel_matrix(seq, n))


@dataclass(frozen=True)
class HankelFamily:
    """動差序列的 Hankel 行列式族

    dets[n] 為 n×n 行列式（dets[0] = 1），pivots[k] = dets[k]/dets[k-1]（pivots[0] 未使用），
    ratios[n] = dets[n]·dets[n-2]/dets[n-1]²（n ≥ 2）
    """
    moments: MomentSequence
    dets: List[Fraction]
    pivots: List[Fraction] = field(default_factory=list)
    ratios: List[Fraction] = field(default_factory=list)

    @property
    def n_max(self) -> int:
        return len(self.dets) - 1

    @classmethod
    def build(cls, seq: MomentSequence, n_max: int) -> 'HankelFamily':
        """以 oracle 計算 1..n_max 的行列式、主元與遞迴比值

        Raises:
            DegenerateMoments: 出現零行列式而需要作為分母時
        """
        if n_max < 1:
            raise ValueError(f"n_max 必須 >= 1，當前值: {n_max}")

        dets = [hankel_det_exact(seq, n) for n in range(n_max + 1)]
        pivots = [Fraction(1)]
        ratios = [Fraction(0), Fraction(0)]
        for k in range(1, n_max + 1):
            if dets[k - 1] == 0:
                raise DegenerateMoments(f"{seq} 的 {k - 1}×{k - 1} 行列式為 0，主元 p_{k} 無定義")
            pivots.append(dets[k] / dets[k - 1])
            if k >= 2:
                ratios.append(dets[k] * dets[k - 2] / dets[k - 1] ** 2)

        logger.debug(f"Hankel 族 {seq}: n_max={n_max}")
        return cls(moments=seq, dets=dets, pivots=pivots, ratios=ratios)
