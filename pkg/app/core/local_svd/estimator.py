"""
局部 SVD 曲率估計

λ_{i,ε}(t) = c_i ε^{2i} + O(ε^{2i+2})
κ_j = √(a_j · c_{j+1} / (c_1·c_j))

c_i 由 ε 梯度（比例 1/2）上的 Romberg 外推求得；ε 的冪次在比值中完全抵消。
低於解析下限的特徵值不參與外推，對應的 κ_j 標記為不可靠。
"""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

import numpy as np
from mpmath import mp

from app.config import config
from app.core.errors import DegenerateSpectrum, InsufficientLadder, UnderResolved
from app.core.frenet.apparatus import gram_schmidt_frame
from app.core.frenet.curves import Curve, SampledCurve
from app.core.hankel.coefficients import curvature_coefficient
from app.core.hankel.rational import to_mpf
from app.core.local_svd.covariance import (
    CovarianceMatrix,
    covariance_on_curve,
    discrete_covariance,
)
from app.core.local_svd.eigen import symmetric_eigen

logger = logging.getLogger(__name__)

CurveSource = Union[Curve, SampledCurve]

RESOLUTION_MARGIN = 100
TIE_TOL = 1e-12


def eps_ladder(eps0: Optional[float] = None, rungs: Optional[int] = None) -> List[float]:
    """ε_0, ε_0/2, ..., 共 rungs 個"""
    eps0 = config.EPS0 if eps0 is None else eps0
    rungs = config.LADDER_RUNGS if rungs is None else rungs
    if eps0 <= 0:
        raise InsufficientLadder(f"ε_0 必須大於 0，當前值: {eps0}")
    if rungs < 1:
        raise InsufficientLadder(f"梯度至少需要 1 個 ε，當前值: {rungs}")
    return [eps0 / 2 ** k for k in range(rungs)]


def _check_ladder(ladder: Sequence[float]) -> List[float]:
    ladder = [float(eps) for eps in ladder]
    if not ladder:
        raise InsufficientLadder("ε 梯度是空的")
    for larger, smaller in zip(ladder, ladder[1:]):
        if not math.isclose(smaller, larger / 2, rel_tol=1e-9):
            raise InsufficientLadder(f"ε 梯度必須是比例 1/2 的遞減數列: {ladder}")
    return ladder


def covariance_for(source: CurveSource, t: float, eps: float,
                   quad_order: Optional[int] = None) -> CovarianceMatrix:
    """解析曲線用 Gauss-Legendre，離散樣本用梯形法則"""
    if isinstance(source, SampledCurve):
        return discrete_covariance(source, t, eps)
    return covariance_on_curve(source, t, eps, quad_order)


def romberg(values: Sequence, levels: int):
    """比例 1/2 梯度上的 Romberg 外推：T[k][m] = (4^m T[k][m−1] − T[k−1][m−1])/(4^m − 1)"""
    row = list(values)
    depth = min(levels, len(row) - 1)
    for m in range(1, depth + 1):
        factor = 4 ** m
        row = [(factor * row[k] - row[k - 1]) / (factor - 1) for k in range(1, len(row))]
    return row[-1]


def fit_leading_coefficients(
    eigenvalues: Sequence[Sequence],
    ladder: Sequence[float],
    levels: Optional[int] = None,
    usable: Optional[Sequence[Sequence[bool]]] = None,
) -> List:
    """由各 ε 的特徵值擬合首項係數 c_1..c_n

    Args:
        eigenvalues: eigenvalues[k][i] 為 λ_{i+1}(ε_k)
        ladder: ε 梯度（比例 1/2）
        levels: Romberg 深度（1 = 兩點 (4 r_{ε/2} − r_ε)/3）
        usable: usable[k][i] 為 False 時該點不參與外推；整列都不可用時退回使用全部

    Returns:
        c_1..c_n（mpf）
    """
    ladder = _check_ladder(ladder)
    if len(eigenvalues) != len(ladder):
        raise InsufficientLadder(f"特徵值組數 {len(eigenvalues)} 與梯度長度 {len(ladder)} 不符")
    levels = config.RICHARDSON_LEVELS if levels is None else levels
    n = len(eigenvalues[0])

    coefficients = []
    for i in range(n):
        power = 2 * (i + 1)
        rungs = [k for k in range(len(ladder)) if usable is None or usable[k][i]]
        # 只有較大的 ε 能解析時，取其中最小的幾個
        rungs = rungs or list(range(len(ladder)))
        rungs = rungs[-(levels + 1):] if levels > 0 else rungs[-1:]
        ratios = [mp.mpf(eigenvalues[k][i]) / mp.mpf(ladder[k]) ** power for k in rungs]
        coefficients.append(romberg(ratios, levels))
    return coefficients


@dataclass(frozen=True, eq=False)
class LocalSpectrum:
    """t 處沿 ε 梯度的特徵結構"""
    t: float
    eps_ladder: List[float]
    eigenvalues: List[List]
    eigenvectors: List['mp.matrix']
    coefficients: List
    resolved: List[bool]
    floor: object = None

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def scaling_slopes(self) -> List[List[float]]:
        """相鄰 ε 的 log₂(λ_i(ε)/λ_i(ε/2))，理論值為 2i"""
        slopes = []
        for larger, smaller in zip(self.eigenvalues, self.eigenvalues[1:]):
            slopes.append([
                float(mp.log(abs(a) / abs(b), 2)) if a and b else float('nan')
                for a, b in zip(larger, smaller)
            ])
        return slopes

    def singular_values(self, eps: float) -> List[float]:
        """σ_i = √c_i·ε^i（需指定 ε）"""
        return [float(mp.sqrt(abs(c)) * mp.mpf(eps) ** (i + 1)) for i, c in enumerate(self.coefficients)]


@dataclass(frozen=True, eq=False)
class CurvatureEstimate:
    """κ_1..κ_{n−1} 與可靠度旗標"""
    t: float
    kappas: List[float]
    reliable: List[bool]
    coefficients: List[float]
    spectrum: LocalSpectrum = field(repr=False)

    @property
    def unreliable_indices(self) -> List[int]:
        return [j for j, ok in enumerate(self.reliable, start=1) if not ok]


class CurvatureEstimator:
    """局部 SVD 曲率估計器

    使用方式：
        estimator = CurvatureEstimator(eps0=1e-2, rungs=4)
        estimate = estimator.estimate_curvatures(curve, t=3.0)
    """

    def __init__(
        self,
        eps0: Optional[float] = None,
        rungs: Optional[int] = None,
        ladder: Optional[Sequence[float]] = None,
        quad_order: Optional[int] = None,
        levels: Optional[int] = None,
    ):
        """初始化估計器

        Args:
            eps0: 梯度起點（ladder 未指定時使用）
            rungs: 梯度長度
            ladder: 直接指定 ε 梯度
            quad_order: 每個半區間的 Gauss-Legendre 節點數
            levels: Romberg 深度
        """
        self.ladder = _check_ladder(ladder) if ladder is not None else eps_ladder(eps0, rungs)
        self.quad_order = quad_order or config.QUAD_ORDER
        self.levels = config.RICHARDSON_LEVELS if levels is None else levels
        if self.levels < 0:
            raise ValueError(f"Romberg 深度不可為負，當前值: {self.levels}")

    def spectrum(self, source: CurveSource, t: float) -> LocalSpectrum:
        """沿梯度計算特徵值、特徵向量與首項係數

        Raises:
            DegenerateSpectrum: 兩個可解析的特徵值重合
        """
        eigenvalues, eigenvectors, usable = [], [], []
        floor = None
        for eps in self.ladder:
            covariance = covariance_for(source, t, eps, self.quad_order)
            floor = covariance.floor
            values, vectors = symmetric_eigen(covariance)
            if values[0] <= 0:
                raise DegenerateSpectrum(f"t={t:g}, ε={eps:g}: λ_1 = {mp.nstr(values[0], 6)} ≤ 0")
            threshold = RESOLUTION_MARGIN * floor * values[0]
            flags = [value >= threshold for value in values]
            for i in range(len(values) - 1):
                if flags[i] and flags[i + 1] and values[i] - values[i + 1] <= TIE_TOL * values[i]:
                    raise DegenerateSpectrum(
                        f"t={t:g}, ε={eps:g}: λ_{i + 1} 與 λ_{i + 2} 重合，標架無法區分"
                    )
            eigenvalues.append(values)
            eigenvectors.append(vectors)
            usable.append(flags)

        n = len(eigenvalues[0])
        resolved = [any(flags[i] for flags in usable) for i in range(n)]
        coefficients = fit_leading_coefficients(eigenvalues, self.ladder, self.levels, usable)
        return LocalSpectrum(
            t=float(t),
            eps_ladder=list(self.ladder),
            eigenvalues=eigenvalues,
            eigenvectors=eigenvectors,
            coefficients=coefficients,
            resolved=resolved,
            floor=floor,
        )

    def estimate_curvatures(self, source: CurveSource, t: float, strict: bool = False) -> CurvatureEstimate:
        """估計 κ_1..κ_{n−1}

        Raises:
            UnderResolved: strict=True 且有 κ_j 不可靠
        """
        spectrum = self.spectrum(source, t)
        c = spectrum.coefficients
        kappas, reliable = [], []
        for j in range(1, spectrum.dimension):
            ok = all(spectrum.resolved[:j + 1])
            squared = to_mpf(curvature_coefficient(j)) * c[j] / (c[0] * c[j - 1]) if c[j - 1] else mp.zero
            if squared <= 0:
                ok = False
                kappas.append(float('nan'))
            else:
                kappas.append(float(mp.sqrt(squared)))
            reliable.append(ok)

        estimate = CurvatureEstimate(
            t=float(t),
            kappas=kappas,
            reliable=reliable,
            coefficients=[float(x) for x in c],
            spectrum=spectrum,
        )
        if estimate.unreliable_indices:
            logger.warning(
                f"⚠️  t={t:g}: {', '.join(f'κ_{j}' for j in estimate.unreliable_indices)} 低於解析下限"
            )
            if strict:
                raise UnderResolved(estimate.unreliable_indices)
        logger.info(f"t={t:g}: κ = {[f'{k:.10g}' for k in kappas]}")
        return estimate

    def estimate_frame(self, source: CurveSource, t: float, eps: Optional[float] = None) -> np.ndarray:
        """以 C_ε(t) 的特徵向量近似 Frenet 標架

        Returns:
            (n, n)，第 i 欄為 u_i
        """
        eps = self.ladder[-1] if eps is None else eps
        covariance = covariance_for(source, t, eps, self.quad_order)
        _, vectors = symmetric_eigen(covariance)
        return orient_frame(vectors, source, t)

    def __repr__(self) -> str:
        return f"CurvatureEstimator(ladder={self.ladder}, quad_order={self.quad_order}, levels={self.levels})"


def orient_frame(vectors, source: CurveSource, t: float) -> np.ndarray:
    """特徵向量轉為 numpy 標架

    有導數 oracle 時，符號對齊到 ⟨u_i, e_i⟩ > 0；否則沿用最大分量為正的慣例。
    """
    frame = np.array(vectors.tolist(), dtype=float)
    if isinstance(source, Curve) and source.has_derivatives:
        reference = gram_schmidt_frame(source.derivatives(t))
        signs = np.where(np.sum(frame * reference, axis=0) < 0, -1.0, 1.0)
        frame = frame * signs
    return frame


def local_spectrum(source: CurveSource, t: float, ladder: Optional[Sequence[float]] = None,
                   quad_order: Optional[int] = None, levels: Optional[int] = None) -> LocalSpectrum:
    return CurvatureEstimator(ladder=ladder, quad_order=quad_order, levels=levels).spectrum(source, t)


def estimate_curvatures(source: CurveSource, t: float, ladder: Optional[Sequence[float]] = None,
                        quad_order: Optional[int] = None, levels: Optional[int] = None,
                        strict: bool = False) -> CurvatureEstimate:
    """函數式介面，見 CurvatureEstimator.estimate_curvatures"""
    estimator = CurvatureEstimator(ladder=ladder, quad_order=quad_order, levels=levels)
    return estimator.estimate_curvatures(source, t, strict=strict)


def estimate_frame(source: CurveSource, t: float, eps: float, quad_order: Optional[int] = None) -> np.ndarray:
    """函數式介面，見 CurvatureEstimator.estimate_frame"""
    return CurvatureEstimator(ladder=[eps], quad_order=quad_order).estimate_frame(source, t, eps)
