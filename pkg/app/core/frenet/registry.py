"""
內建曲線註冊表

預設參數皆為單位速率的範例：
    circle(a)                          半徑 a，頻率 1/a
    helix(a=1, alpha=1/√2, b=1/√2)     κ_1 = κ_2 = 1/2
    toroidal4(a=b=1/√5, alpha=1, beta=2)
    screw5(a=b=1/√10, alpha=1, beta=2, c=1/√2)
    torus6(a=b=c=1/√14, alpha=1, beta=2, delta=3)
    twisted-cubic                      (t, t², t³)
"""
import math
from typing import Callable, Dict, Optional

from app.core.errors import InvalidParams, UnknownCurve
from app.core.frenet.canonical import CanonicalCurveParams, canonical_curve
from app.core.frenet.curves import Curve, twisted_cubic


def _circle(a: float = 1.0, alpha: Optional[float] = None) -> Curve:
    if a <= 0:
        raise InvalidParams(f"半徑必須大於 0，當前值: {a}")
    alpha = 1.0 / a if alpha is None else alpha
    return canonical_curve(CanonicalCurveParams((a,), (alpha,)), name='circle')


def _helix(a: float = 1.0, alpha: float = 1 / math.sqrt(2), b: float = 1 / math.sqrt(2)) -> Curve:
    return canonical_curve(CanonicalCurveParams((a,), (alpha,), drift=b), name='helix')


def _toroidal4(a: float = 1 / math.sqrt(5), b: float = 1 / math.sqrt(5),
               alpha: float = 1.0, beta: float = 2.0) -> Curve:
    return canonical_curve(CanonicalCurveParams((a, b), (alpha, beta)), name='toroidal4')


def _screw5(a: float = 1 / math.sqrt(10), b: float = 1 / math.sqrt(10),
            alpha: float = 1.0, beta: float = 2.0, c: float = 1 / math.sqrt(2)) -> Curve:
    return canonical_curve(CanonicalCurveParams((a, b), (alpha, beta), drift=c), name='screw5')


def _torus6(a: float = 1 / math.sqrt(14), b: float = 1 / math.sqrt(14), c: float = 1 / math.sqrt(14),
            alpha: float = 1.0, beta: float = 2.0, delta: float = 3.0) -> Curve:
    return canonical_curve(CanonicalCurveParams((a, b, c), (alpha, beta, delta)), name='torus6')


BUILTIN_CURVES: Dict[str, Callable[..., Curve]] = {
    'circle': _circle,
    'helix': _helix,
    'toroidal4': _toroidal4,
    'screw5': _screw5,
    'torus6': _torus6,
    'twisted-cubic': twisted_cubic,
}


def builtin_curve(name: str, **params) -> Curve:
    """依名稱建立內建曲線

    Raises:
        UnknownCurve: 名稱未註冊
        InvalidParams: 參數名稱錯誤或數值無效
    """
    factory = BUILTIN_CURVES.get(name)
    if factory is None:
        raise UnknownCurve(f"未知的內建曲線: {name}（可用: {', '.join(sorted(BUILTIN_CURVES))}）")
    try:
        return factory(**params)
    except TypeError as e:
        raise InvalidParams(f"曲線 {name} 的參數無效: {e}") from e
