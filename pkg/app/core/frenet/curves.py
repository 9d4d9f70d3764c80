"""
曲線表示

Curve         解析曲線：值與各階導數的 oracle，以 mpmath 在工作精度下求值
SampledCurve  離散樣本（CSV 輸入、ODE 積分輸出）
"""
import math
from dataclasses import dataclass, field, replace
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from mpmath import mp

from app.core.errors import DomainError, InvalidParams

ValueOracle = Callable[[object], Sequence]
DerivativeOracle = Callable[[int, object], Sequence]


@dataclass(frozen=True)
class Curve:
    """R^n 中的參數曲線

    Attributes:
        dimension: n ≥ 2
        value_fn: t ↦ γ(t)
        derivative_fn: (k, t) ↦ γ^{(k)}(t)，可為 None
        domain: 參數閉區間
        name: 顯示名稱
        params: 典型曲線的參數（CanonicalCurveParams），其他曲線為 None
    """
    dimension: int
    value_fn: ValueOracle
    derivative_fn: Optional[DerivativeOracle] = None
    domain: Tuple[float, float] = (-math.inf, math.inf)
    name: str = 'custom'
    params: Optional[object] = field(default=None, compare=False)

    def __post_init__(self):
        if self.dimension < 2:
            raise InvalidParams(f"曲線維度必須 >= 2，當前值: {self.dimension}")
        lo, hi = self.domain
        if not lo < hi:
            raise InvalidParams(f"定義域無效: {self.domain}")

    @property
    def has_derivatives(self) -> bool:
        return self.derivative_fn is not None

    def value(self, t) -> List:
        """γ(t)，mpf 串列"""
        return [mp.mpf(x) for x in self.value_fn(mp.mpf(t))]

    def derivative(self, k: int, t) -> List:
        """γ^{(k)}(t)，mpf 串列"""
        if not self.has_derivatives:
            raise InvalidParams(f"曲線 {self.name} 沒有導數 oracle")
        if k < 1:
            raise ValueError(f"導數階數必須 >= 1，當前值: {k}")
        return [mp.mpf(x) for x in self.derivative_fn(k, mp.mpf(t))]

    def derivatives(self, t, count: Optional[int] = None) -> List[List]:
        """γ^{(1)}..γ^{(count)}（預設 count = n）"""
        count = count or self.dimension
        return [self.derivative(k, t) for k in range(1, count + 1)]

    def speed(self, t) -> float:
        return float(mp.sqrt(sum(x * x for x in self.derivative(1, t))))

    def contains(self, lo, hi) -> bool:
        return self.domain[0] <= lo and hi <= self.domain[1]

    def require_window(self, t, radius) -> None:
        """[t − radius, t + radius] 必須在定義域內"""
        if not self.contains(t - radius, t + radius):
            raise DomainError(
                f"區間 [{float(t - radius)}, {float(t + radius)}] 超出曲線 {self.name} 的定義域 {self.domain}"
            )

    def reparameterize(self, scale: float) -> 'Curve':
        """t ↦ γ(scale·t)；k 階導數乘上 scale^k，定義域除以 scale"""
        if scale <= 0:
            raise InvalidParams(f"重新參數化比例必須大於 0，當前值: {scale}")
        factor = mp.mpf(scale)
        value_fn = self.value_fn
        derivative_fn = self.derivative_fn

        def scaled_value(t):
            return value_fn(factor * t)

        scaled_derivative = None
        if derivative_fn is not None:
            def scaled_derivative(k, t):
                return [factor ** k * x for x in derivative_fn(k, factor * t)]

        lo, hi = self.domain
        return replace(
            self,
            value_fn=scaled_value,
            derivative_fn=scaled_derivative,
            domain=(lo / scale, hi / scale),
            name=f"{self.name}∘{scale:g}t",
        )

    def __repr__(self) -> str:
        return f"Curve({self.name}, n={self.dimension}, domain={self.domain})"


@dataclass(frozen=True, eq=False)
class SampledCurve:
    """離散曲線樣本

    Attributes:
        parameters: 嚴格遞增的 t 值 (m,)
        points: (m, n) 樣本點
        frames: (m, n, n) 每個樣本的標架（欄為 e_i），ODE 輸出才有
    """
    parameters: np.ndarray
    points: np.ndarray
    frames: Optional[np.ndarray] = field(default=None, compare=False)
    name: str = 'samples'

    def __post_init__(self):
        parameters = np.asarray(self.parameters, dtype=float)
        points = np.asarray(self.points, dtype=float)
        if points.ndim != 2:
            raise InvalidParams(f"樣本點必須是二維陣列，當前形狀: {points.shape}")
        if parameters.shape != (points.shape[0],):
            raise InvalidParams(
                f"參數與樣本數量不符: {parameters.shape[0]} vs {points.shape[0]}"
            )
        if points.shape[1] < 2:
            raise InvalidParams(f"曲線維度必須 >= 2，當前值: {points.shape[1]}")
        if parameters.size > 1 and not np.all(np.diff(parameters) > 0):
            raise InvalidParams("參數必須嚴格遞增")
        object.__setattr__(self, 'parameters', parameters)
        object.__setattr__(self, 'points', points)

    @property
    def dimension(self) -> int:
        return self.points.shape[1]

    @property
    def domain(self) -> Tuple[float, float]:
        return float(self.parameters[0]), float(self.parameters[-1])

    def __len__(self) -> int:
        return self.parameters.shape[0]

    def __repr__(self) -> str:
        lo, hi = self.domain
        return f"SampledCurve({self.name}, n={self.dimension}, samples={len(self)}, range=[{lo:g}, {hi:g}])"


def twisted_cubic() -> Curve:
    """γ(t) = (t, t², t³)"""

    def value(t):
        return [t, t ** 2, t ** 3]

    def derivative(k, t):
        if k == 1:
            return [1, 2 * t, 3 * t ** 2]
        if k == 2:
            return [0, 2, 6 * t]
        if k == 3:
            return [0, 0, 6]
        return [0, 0, 0]

    return Curve(dimension=3, value_fn=value, derivative_fn=derivative, name='twisted-cubic')


def twisted_cubic_curvatures(t: float) -> Tuple[float, float]:
    """扭曲三次曲線的閉式曲率

    κ_1 = 2√(9t⁴+9t²+1)/(1+4t²+9t⁴)^{3/2}，κ_2 = 3/(9t⁴+9t²+1)
    """
    t = mp.mpf(t)
    q = 9 * t ** 4 + 9 * t ** 2 + 1
    kappa1 = 2 * mp.sqrt(q) / (1 + 4 * t ** 2 + 9 * t ** 4) ** mp.mpf(1.5)
    kappa2 = 3 / q
    return float(kappa1), float(kappa2)


def align_rigid(points: np.ndarray, reference: np.ndarray) -> Tuple[np.ndarray, float]:
    """以正交 Procrustes 把 points 剛體對齊到 reference

    Returns:
        (對齊後的點, 最大逐點偏差)
    """
    from scipy.linalg import orthogonal_procrustes

    points = np.asarray(points, dtype=float)
    reference = np.asarray(reference, dtype=float)
    if points.shape != reference.shape:
        raise InvalidParams(f"點集形狀不符: {points.shape} vs {reference.shape}")
    source_center = points.mean(axis=0)
    target_center = reference.mean(axis=0)
    rotation, _ = orthogonal_procrustes(points - source_center, reference - target_center)
    aligned = (points - source_center) @ rotation + target_center
    deviation = float(np.max(np.linalg.norm(aligned - reference, axis=1)))
    return aligned, deviation
