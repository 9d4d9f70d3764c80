"""
Frenet-Serret 標架與曲率

標架由導數 γ^{(1)}..γ^{(n)} 做 Gram-Schmidt 得到；
κ_i = ⟨e_i′, e_{i+1}⟩ / ‖γ′‖，其中 e_i′ 以中央差分（h 與 h/2 做一次 Richardson）求得，
差分前先把鄰近標架的每個向量對齊到 t 處的方向。
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from mpmath import mp

from app.config import config
from app.core.errors import DomainError, RankDeficient
from app.core.frenet.curves import Curve

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FrenetApparatus:
    """t 處的 Frenet-Serret 資料

    Attributes:
        t: 參數
        frame: (n, n)，第 i 欄為 e_i
        curvatures: κ_1..κ_{n−1}（弧長速率）
        speed: ‖γ′(t)‖
    """
    t: float
    frame: np.ndarray
    curvatures: np.ndarray
    speed: float = 1.0

    @property
    def dimension(self) -> int:
        return self.frame.shape[0]

    def orthonormality_error(self) -> float:
        """max |⟨e_i, e_j⟩ − δ_ij|"""
        gram = self.frame.T @ self.frame
        return float(np.max(np.abs(gram - np.eye(gram.shape[0]))))

    def __repr__(self) -> str:
        kappas = ', '.join(f"{k:.10g}" for k in self.curvatures)
        return f"FrenetApparatus(t={self.t:g}, κ=[{kappas}])"


def gram_schmidt_frame(vectors: Sequence, rank_tol: Optional[float] = None) -> np.ndarray:
    """修正 Gram-Schmidt（再正交化一次）

    Args:
        vectors: k 個 R^n 向量（依序為 γ^{(1)}, γ^{(2)}, ...）
        rank_tol: 相對秩門檻，‖ẽ_i‖ < rank_tol·‖γ^{(i)}‖ 視為線性相關

    Returns:
        (n, k) 矩陣，第 i 欄為 e_i

    Raises:
        RankDeficient: 向量線性相關
    """
    rank_tol = config.RANK_TOL if rank_tol is None else rank_tol
    basis = []
    for index, vector in enumerate(vectors, start=1):
        w = np.array([float(x) for x in vector], dtype=float)
        original = np.linalg.norm(w)
        for _ in range(2):
            for e in basis:
                w -= (w @ e) * e
        residual = np.linalg.norm(w)
        if original == 0 or residual < rank_tol * original:
            raise RankDeficient(
                f"第 {index} 個導數與前面的導數線性相關（殘差 {residual:.3e}，範數 {original:.3e}）",
                index=index,
            )
        basis.append(w / residual)
    return np.column_stack(basis)


def _frame_at(curve: Curve, t) -> np.ndarray:
    return gram_schmidt_frame(curve.derivatives(t))


def _aligned(frame: np.ndarray, reference: np.ndarray) -> np.ndarray:
    signs = np.where(np.sum(frame * reference, axis=0) < 0, -1.0, 1.0)
    return frame * signs


def _frame_derivative(curve: Curve, t, h, reference: np.ndarray) -> np.ndarray:
    forward = _aligned(_frame_at(curve, t + h), reference)
    backward = _aligned(_frame_at(curve, t - h), reference)
    return (forward - backward) / (2 * float(h))


def frenet_apparatus(curve: Curve, t: float) -> FrenetApparatus:
    """計算 t 處的標架與曲率

    Raises:
        RankDeficient: 曲線在 t 附近不是 n 階正則
        DomainError: t ± h 超出定義域
    """
    t_mp = mp.mpf(t)
    h = mp.mpf(max(1e-5, 1e-5 * abs(float(t))))
    if not curve.contains(t_mp - h, t_mp + h):
        raise DomainError(f"t={float(t)} ± {float(h):g} 超出曲線 {curve.name} 的定義域 {curve.domain}")

    frame = _frame_at(curve, t_mp)
    speed = curve.speed(t_mp)

    coarse = _frame_derivative(curve, t_mp, h, frame)
    fine = _frame_derivative(curve, t_mp, h / 2, frame)
    derivative = (4 * fine - coarse) / 3

    n = curve.dimension
    curvatures = np.array([derivative[:, i] @ frame[:, i + 1] for i in range(n - 1)]) / speed
    return FrenetApparatus(t=float(t), frame=frame, curvatures=curvatures, speed=speed)
