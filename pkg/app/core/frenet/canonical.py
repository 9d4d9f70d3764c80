"""
常曲率典型曲線與「參數 ↔ 曲率」系統

偶數維 γ_e(t) = Σ a_i (cos α_i t, sin α_i t)
奇數維 γ_o(t) = γ_e(t) ⊕ b·t

記 G_k = Σ a_i² α_i^k。常曲率曲線滿足 ‖γ^{(m)}‖² = [(KᵀK)^{m−1}]_{11}，
K 為三對角反對稱曲率矩陣；因此
    G_2 (+ b²) = 1
    G_4 = κ_1²
    G_6 = κ_1⁴ + κ_1²κ_2²
    G_8 = κ_1²(κ_1²+κ_2²)² + κ_1²κ_2²κ_3²
    ...
每一式只引入一個新的未知數，由上而下依序求解。
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from mpmath import mp

from app.core.errors import DegenerateCurve, InvalidCurvature, InvalidParams, NotUnitSpeed
from app.core.frenet.curves import Curve

logger = logging.getLogger(__name__)

UNIT_SPEED_TOL = 1e-10
DEGENERACY_TOL = 1e-12

# d^k/dt^k 的循環：cos → −sin → −cos → sin
_COS_CYCLE = (mp.cos, lambda x: -mp.sin(x), lambda x: -mp.cos(x), mp.sin)
_SIN_CYCLE = (mp.sin, mp.cos, lambda x: -mp.sin(x), lambda x: -mp.cos(x))


@dataclass(frozen=True)
class CanonicalCurveParams:
    """典型曲線參數

    Attributes:
        amplitudes: a_1..a_k > 0
        frequencies: α_1..α_k > 0
        drift: 奇數維的線性項係數 b（偶數維為 None）
    """
    amplitudes: Tuple[float, ...]
    frequencies: Tuple[float, ...]
    drift: Optional[float] = None

    def __post_init__(self):
        amplitudes = tuple(float(a) for a in self.amplitudes)
        frequencies = tuple(float(f) for f in self.frequencies)
        if not amplitudes:
            raise InvalidParams("至少需要一組振幅與頻率")
        if len(amplitudes) != len(frequencies):
            raise InvalidParams(f"振幅與頻率數量不符: {len(amplitudes)} vs {len(frequencies)}")
        if any(a <= 0 for a in amplitudes):
            raise InvalidParams(f"振幅必須大於 0: {amplitudes}")
        if any(f <= 0 for f in frequencies):
            raise InvalidParams(f"頻率必須大於 0: {frequencies}")
        drift = self.drift
        if drift is not None:
            drift = float(drift)
            if drift < 0:
                raise InvalidParams(f"線性項係數不可為負: {drift}")
        object.__setattr__(self, 'amplitudes', amplitudes)
        object.__setattr__(self, 'frequencies', frequencies)
        object.__setattr__(self, 'drift', drift)

    @property
    def parity(self) -> str:
        return 'even' if self.drift is None else 'odd'

    @property
    def dimension(self) -> int:
        return 2 * len(self.amplitudes) + (0 if self.drift is None else 1)

    def power_sum(self, k: int) -> float:
        """G_k = Σ a_i² α_i^k"""
        return float(sum(a * a * f ** k for a, f in zip(self.amplitudes, self.frequencies)))

    def speed_squared(self) -> float:
        """‖γ′‖² = G_2 + b²"""
        return self.power_sum(2) + (self.drift or 0.0) ** 2

    def is_unit_speed(self, tol: float = UNIT_SPEED_TOL) -> bool:
        return abs(self.speed_squared() - 1.0) <= tol


def canonical_curve(params: CanonicalCurveParams, name: Optional[str] = None) -> Curve:
    """由參數建立典型曲線（所有階導數皆為閉式）"""
    amplitudes = [mp.mpf(a) for a in params.amplitudes]
    frequencies = [mp.mpf(f) for f in params.frequencies]
    drift = None if params.drift is None else mp.mpf(params.drift)

    def value(t):
        point = []
        for a, f in zip(amplitudes, frequencies):
            point.extend((a * mp.cos(f * t), a * mp.sin(f * t)))
        if drift is not None:
            point.append(drift * t)
        return point

    def derivative(k, t):
        point = []
        for a, f in zip(amplitudes, frequencies):
            scale = a * f ** k
            point.extend((scale * _COS_CYCLE[k % 4](f * t), scale * _SIN_CYCLE[k % 4](f * t)))
        if drift is not None:
            point.append(drift if k == 1 else mp.zero)
        return point

    return Curve(
        dimension=params.dimension,
        value_fn=value,
        derivative_fn=derivative,
        name=name or f"canonical{params.dimension}",
        params=params,
    )


def _walk_sum(kappas: Sequence[float], steps: int, dim: int) -> float:
    """‖K^steps e_1‖²，K 為以 kappas 建立的三對角反對稱矩陣"""
    K = np.zeros((dim, dim))
    for i, kappa in enumerate(kappas):
        K[i + 1, i] = kappa
        K[i, i + 1] = -kappa
    v = np.zeros(dim)
    v[0] = 1.0
    for _ in range(steps):
        v = K @ v
    return float(v @ v)


def params_to_curvatures(dim: int, params: CanonicalCurveParams) -> List[float]:
    """解參數 ↔ 曲率系統，回傳 κ_1..κ_{dim−1}

    Raises:
        InvalidParams: dim 與參數維度不符
        NotUnitSpeed: 不滿足弧長正規化
        DegenerateCurve: 某個 κ_j² ≤ 0
    """
    if dim < 2:
        raise InvalidParams(f"維度必須 >= 2，當前值: {dim}")
    if params.dimension != dim:
        raise InvalidParams(f"參數描述的是 R^{params.dimension} 曲線，而非 R^{dim}")
    if not params.is_unit_speed():
        raise NotUnitSpeed(f"‖γ′‖² = {params.speed_squared():.15g}，不等於 1")

    kappas: List[float] = []
    product = 1.0
    for j in range(1, dim):
        target = params.power_sum(2 * j + 2)
        known = _walk_sum(kappas + [0.0], j, j + 1)
        residual = target - known
        if residual <= DEGENERACY_TOL * target:
            raise DegenerateCurve(
                f"κ_{j}² ≤ 0（G_{2 * j + 2} − R = {residual:.3e}），曲線在 R^{dim} 不是正則的"
            )
        kappas.append(float(np.sqrt(residual / product)))
        product *= kappas[-1] ** 2

    logger.debug(f"R^{dim} 曲率: {kappas}")
    return kappas


def curvatures_to_params_r3(kappa1: float, kappa2: float) -> CanonicalCurveParams:
    """由 (κ_1, κ_2) 反推 R³ 螺旋線參數

    α = √(κ_1²+κ_2²)，a = κ_1/α²，b = κ_2/α
    """
    if kappa1 <= 0:
        raise InvalidCurvature(f"κ_1 必須大於 0，當前值: {kappa1}")
    if kappa2 < 0:
        raise InvalidCurvature(f"κ_2 不可為負，當前值: {kappa2}")
    alpha = float(np.hypot(kappa1, kappa2))
    return CanonicalCurveParams(
        amplitudes=(kappa1 / alpha ** 2,),
        frequencies=(alpha,),
        drift=kappa2 / alpha,
    )
