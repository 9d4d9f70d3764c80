"""
局部共變異矩陣

曲線上：   C_ε(t)  = (1/2ε) ∫_{t−ε}^{t+ε} (γ(s)−γ(t))(γ(s)−γ(t))ᵀ ds
均值中心： C̄_ε(t) = (1/2ε) ∫ (γ(s)−γ̄)(γ(s)−γ̄)ᵀ ds，γ̄ 為區間平均
Taylor 代理：Γ ℰ Γᵀ，Γ 的欄為 γ^{(1)}..γ^{(m)}
離散樣本： 以梯形法則在樣本網格上近似 C_ε(t)
"""
import logging
from dataclasses import dataclass
from math import factorial
from typing import List, Optional, Sequence, Tuple

import numpy as np
from mpmath import mp
from scipy.integrate import trapezoid
from scipy.interpolate import BarycentricInterpolator

from app.config import config
from app.core.errors import PatternViolation, TooFewSamples
from app.core.frenet.curves import Curve, SampledCurve
from app.core.local_svd.quadrature import window_rule

logger = logging.getLogger(__name__)

FLOAT64_FLOOR = 1e-15
MIN_WINDOW_SAMPLES = 5


def working_floor():
    """工作精度下特徵分解的相對下限"""
    return mp.mpf(10) ** (1 - mp.dps)


def as_mp_matrix(matrix) -> 'mp.matrix':
    """numpy 陣列、巢狀串列或 mp.matrix 轉為 mp.matrix"""
    if isinstance(matrix, mp.matrix):
        return matrix.copy()
    if isinstance(matrix, np.ndarray):
        matrix = matrix.tolist()
    return mp.matrix([[mp.mpf(x) for x in row] for row in matrix])


@dataclass(frozen=True, eq=False)
class CovarianceMatrix:
    """對稱半正定 n×n 共變異矩陣

    Attributes:
        t: 中心參數（代理矩陣可為 None）
        eps: 窗口半徑 ε
        entries: mp.matrix
        centered: True 為均值中心版本
        floor: 特徵值相對於 λ_1 的解析下限（資料精度決定）
    """
    t: Optional[float]
    eps: float
    entries: 'mp.matrix'
    centered: bool = False
    floor: object = None

    @property
    def dimension(self) -> int:
        return self.entries.rows

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries.tolist(), dtype=float)

    def trace(self):
        return mp.fsum(self.entries[i, i] for i in range(self.dimension))

    def frobenius(self):
        return mp.mnorm(self.entries, 'F')


def _outer_sum(differences: Sequence[Sequence], weights: Sequence, n: int) -> 'mp.matrix':
    entries = mp.matrix(n, n)
    for i in range(n):
        for j in range(i, n):
            value = mp.fsum(w * d[i] * d[j] for w, d in zip(weights, differences))
            entries[i, j] = value
            entries[j, i] = value
    return entries


def _window_samples(curve: Curve, t, eps, quad_order: Optional[int]) -> Tuple[List, List]:
    quad_order = quad_order or config.QUAD_ORDER
    t = mp.mpf(t)
    curve.require_window(t, mp.mpf(eps))
    offsets, weights = window_rule(eps, quad_order)
    values = [curve.value(t + offset) for offset in offsets]
    return values, weights


def covariance_on_curve(curve: Curve, t, eps, quad_order: Optional[int] = None) -> CovarianceMatrix:
    """曲線上的共變異矩陣 C_ε(t)（只計算上三角再鏡射）

    Raises:
        DomainError: [t−ε, t+ε] 超出定義域
    """
    if eps <= 0:
        raise ValueError(f"ε 必須大於 0，當前值: {eps}")
    values, weights = _window_samples(curve, t, eps, quad_order)
    center = curve.value(t)
    n = curve.dimension
    differences = [[v[i] - center[i] for i in range(n)] for v in values]
    return CovarianceMatrix(
        t=float(t), eps=float(eps), entries=_outer_sum(differences, weights, n),
        centered=False, floor=working_floor(),
    )


def covariance_mean_centered(curve: Curve, t, eps, quad_order: Optional[int] = None) -> CovarianceMatrix:
    """均值中心的共變異矩陣 C̄_ε(t)"""
    if eps <= 0:
        raise ValueError(f"ε 必須大於 0，當前值: {eps}")
    values, weights = _window_samples(curve, t, eps, quad_order)
    n = curve.dimension
    mean = [mp.fsum(w * v[i] for w, v in zip(weights, values)) for i in range(n)]
    differences = [[v[i] - mean[i] for i in range(n)] for v in values]
    return CovarianceMatrix(
        t=float(t), eps=float(eps), entries=_outer_sum(differences, weights, n),
        centered=True, floor=working_floor(),
    )


def taylor_moment_matrix(n: int, eps) -> 'mp.matrix':
    """ℰ_{i,j} = ε^{i+j}/(i!·j!·(i+j+1))（i+j 偶數），否則 0；i, j = 1..n"""
    if n < 1:
        raise ValueError(f"階數必須 >= 1，當前值: {n}")
    if eps <= 0:
        raise ValueError(f"ε 必須大於 0，當前值: {eps}")
    eps = mp.mpf(eps)
    E = mp.matrix(n, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (i + j) % 2 == 0:
                E[i - 1, j - 1] = eps ** (i + j) / (factorial(i) * factorial(j) * (i + j + 1))
    return E


def surrogate_covariance(derivatives: Sequence[Sequence], eps, t: Optional[float] = None) -> CovarianceMatrix:
    """Taylor 代理 Γ ℰ Γᵀ

    Args:
        derivatives: γ^{(1)}..γ^{(m)}；截斷誤差為 O(ε^{m+2})（m 偶數時）
        eps: 窗口半徑
    """
    if not derivatives:
        raise ValueError("至少需要一個導數")
    gamma = as_mp_matrix([list(column) for column in derivatives]).T
    E = taylor_moment_matrix(len(derivatives), eps)
    entries = gamma * E * gamma.T
    n = entries.rows
    for i in range(n):
        for j in range(i + 1, n):
            entries[j, i] = entries[i, j]
    return CovarianceMatrix(t=t, eps=float(eps), entries=entries, centered=False, floor=working_floor())


def checkerboard_blocks(matrix, tol: float = 1e-13):
    """把棋盤狀零模式的矩陣分成兩個對角區塊

    Returns:
        (奇數位置區塊, 偶數位置區塊, 排列)；位置以 1 起算，排列以 0 起算

    Raises:
        PatternViolation: i+j 為奇數的元素超過 tol·‖C‖_F
    """
    entries = matrix.entries if isinstance(matrix, CovarianceMatrix) else as_mp_matrix(matrix)
    n = entries.rows
    if n < 2 or entries.cols != n:
        raise PatternViolation(f"需要至少 2×2 的方陣，當前: {entries.rows}×{entries.cols}")
    limit = tol * mp.mnorm(entries, 'F')
    for i in range(n):
        for j in range(n):
            if (i + j) % 2 == 1 and abs(entries[i, j]) > limit:
                raise PatternViolation(
                    f"元素 ({i + 1},{j + 1}) = {mp.nstr(entries[i, j], 6)} 破壞棋盤模式（門檻 {mp.nstr(limit, 3)}）"
                )
    odd = list(range(0, n, 2))
    even = list(range(1, n, 2))

    def block(indices):
        return mp.matrix([[entries[i, j] for j in indices] for i in indices])

    return block(odd), block(even), odd + even


def _interpolate(parameters: np.ndarray, points: np.ndarray, at: float) -> np.ndarray:
    """以最近的 4 個樣本做三次 Lagrange（重心形式）內插"""
    index = int(np.searchsorted(parameters, at))
    lo = max(0, min(index - 2, len(parameters) - 4))
    xs = parameters[lo:lo + 4] - at
    interpolator = BarycentricInterpolator(xs, points[lo:lo + 4])
    return np.asarray(interpolator(0.0), dtype=float)


def discrete_covariance(samples: SampledCurve, t: float, eps: float) -> CovarianceMatrix:
    """由離散樣本以梯形法則近似 C_ε(t)

    窗口端點與不在網格上的 γ(t) 以三次內插取得。

    Raises:
        TooFewSamples: 窗口超出取樣範圍，或窗口內部樣本少於 5 個
    """
    if eps <= 0:
        raise ValueError(f"ε 必須大於 0，當前值: {eps}")
    parameters, points = samples.parameters, samples.points
    lo, hi = t - eps, t + eps
    if lo < parameters[0] or hi > parameters[-1]:
        raise TooFewSamples(
            f"窗口 [{lo:g}, {hi:g}] 超出取樣範圍 [{parameters[0]:g}, {parameters[-1]:g}]"
        )
    inside = (parameters > lo) & (parameters < hi)
    count = int(inside.sum())
    if count < MIN_WINDOW_SAMPLES:
        raise TooFewSamples(f"窗口內只有 {count} 個樣本，至少需要 {MIN_WINDOW_SAMPLES} 個")

    grid = np.concatenate([[lo], parameters[inside], [hi]])
    curve_points = np.vstack([
        _interpolate(parameters, points, lo),
        points[inside],
        _interpolate(parameters, points, hi),
    ])
    on_grid = np.flatnonzero(parameters == t)
    center = points[on_grid[0]] if on_grid.size else _interpolate(parameters, points, t)

    differences = curve_points - center
    products = differences[:, :, None] * differences[:, None, :]
    entries = trapezoid(products, grid, axis=0) / (2 * eps)

    return CovarianceMatrix(
        t=float(t), eps=float(eps), entries=as_mp_matrix(entries),
        centered=False, floor=mp.mpf(FLOAT64_FLOOR),
    )
