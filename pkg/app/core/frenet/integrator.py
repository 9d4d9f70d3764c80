"""
Frenet 系統積分器

γ′ = e_1，E′ = E·K(t)，K 為三對角反對稱矩陣（K[i+1,i] = κ_i，K[i,i+1] = −κ_i）。
固定步長的古典 RK4，每 REORTHO_EVERY 步以 Gram-Schmidt 重新正交化標架。
"""
import logging
import math
from numbers import Real
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from app.config import config
from app.core.errors import InvalidFrame, NonPositiveCurvature
from app.core.frenet.apparatus import gram_schmidt_frame
from app.core.frenet.curves import SampledCurve

logger = logging.getLogger(__name__)

KappaSpec = Union[float, Callable[[float], float]]


def _as_function(spec: KappaSpec) -> Callable[[float], float]:
    if isinstance(spec, Real):
        value = float(spec)
        return lambda _t: value
    if callable(spec):
        return spec
    raise TypeError(f"曲率必須是常數或 t 的函數: {spec!r}")


def curvature_matrix(kappas: Sequence[float]) -> np.ndarray:
    """由 κ_1..κ_{n−1} 建立 K"""
    n = len(kappas) + 1
    K = np.zeros((n, n))
    for i, kappa in enumerate(kappas):
        K[i + 1, i] = kappa
        K[i, i + 1] = -kappa
    return K


def integrate_frenet_system(
    dim: int,
    kappa_fns: Sequence[KappaSpec],
    gamma0: Sequence[float],
    frame0: np.ndarray,
    t_range: Tuple[float, float],
    step: float,
    sample_every: int = 1,
    reortho_every: Optional[int] = None,
    ortho_tol: Optional[float] = None,
) -> SampledCurve:
    """積分 Frenet 方程，產生具指定曲率的單位速率曲線

    Args:
        dim: 維度 n
        kappa_fns: n−1 個曲率（常數或 t 的函數）
        gamma0: 起點
        frame0: 初始正交標架（欄為 e_i）
        t_range: (t_start, t_end)
        step: 名目步長；實際步長 = 區間長度 / ceil(區間長度 / step)
        sample_every: 每幾步保留一個樣本
        reortho_every: 重新正交化週期（預設 config.REORTHO_EVERY）
        ortho_tol: 初始標架的正交容差（預設 config.ORTHO_TOL）

    Returns:
        SampledCurve（含每個樣本的標架）

    Raises:
        InvalidFrame: 初始標架不正交或形狀不符
        NonPositiveCurvature: 積分過程中某個 κ_i(t) ≤ 0
    """
    if dim < 2:
        raise ValueError(f"維度必須 >= 2，當前值: {dim}")
    if len(kappa_fns) != dim - 1:
        raise ValueError(f"R^{dim} 需要 {dim - 1} 個曲率，收到 {len(kappa_fns)} 個")
    if step <= 0:
        raise ValueError(f"步長必須大於 0，當前值: {step}")
    if sample_every < 1:
        raise ValueError(f"sample_every 必須 >= 1，當前值: {sample_every}")
    t_start, t_end = map(float, t_range)
    if not t_end > t_start:
        raise ValueError(f"積分區間無效: {t_range}")

    reortho_every = reortho_every or config.REORTHO_EVERY
    ortho_tol = config.ORTHO_TOL if ortho_tol is None else ortho_tol

    frame = np.array(frame0, dtype=float)
    if frame.shape != (dim, dim):
        raise InvalidFrame(f"初始標架形狀應為 ({dim}, {dim})，當前: {frame.shape}")
    drift = float(np.max(np.abs(frame.T @ frame - np.eye(dim))))
    if drift > ortho_tol:
        raise InvalidFrame(f"初始標架不正交（偏差 {drift:.3e} > {ortho_tol:g}）")
    gamma = np.array(gamma0, dtype=float)
    if gamma.shape != (dim,):
        raise InvalidFrame(f"起點維度應為 {dim}，當前: {gamma.shape}")

    fns = [_as_function(spec) for spec in kappa_fns]

    def K_at(t: float) -> np.ndarray:
        kappas = [fn(t) for fn in fns]
        for index, kappa in enumerate(kappas, start=1):
            if not kappa > 0:
                raise NonPositiveCurvature(f"κ_{index}({t:g}) = {kappa}，曲率必須大於 0")
        return curvature_matrix(kappas)

    steps = max(1, math.ceil((t_end - t_start) / step - 1e-9))
    h = (t_end - t_start) / steps

    parameters = [t_start]
    points = [gamma.copy()]
    frames = [frame.copy()]

    for k in range(steps):
        t = t_start + k * h
        K1 = K_at(t)
        K2 = K_at(t + h / 2)
        K4 = K_at(t + h)

        e1, E1 = frame[:, 0], frame @ K1
        frame2 = frame + (h / 2) * E1
        e2, E2 = frame2[:, 0], frame2 @ K2
        frame3 = frame + (h / 2) * E2
        e3, E3 = frame3[:, 0], frame3 @ K2
        frame4 = frame + h * E3
        e4, E4 = frame4[:, 0], frame4 @ K4

        gamma = gamma + (h / 6) * (e1 + 2 * e2 + 2 * e3 + e4)
        frame = frame + (h / 6) * (E1 + 2 * E2 + 2 * E3 + E4)

        if (k + 1) % reortho_every == 0:
            drift = float(np.max(np.abs(frame.T @ frame - np.eye(dim))))
            if drift > 1e-12:
                logger.warning(f"⚠️  標架正交偏差 {drift:.3e}（t={t + h:g}）")
            frame = gram_schmidt_frame(frame.T)

        if (k + 1) % sample_every == 0 or k + 1 == steps:
            parameters.append(t_start + (k + 1) * h)
            points.append(gamma.copy())
            frames.append(frame.copy())

    logger.info(f"✅ Frenet 積分完成: R^{dim}, {steps} 步, h={h:.3e}")
    return SampledCurve(
        parameters=np.array(parameters),
        points=np.array(points),
        frames=np.array(frames),
        name=f"frenet{dim}",
    )
