"""
對稱矩陣的循環 Jacobi 特徵分解（mpmath 工作精度）

收斂條件採相對標準：|a_ij| ≤ tol·√|a_ii·a_jj|，tol = 10^(−dps/3)。
λ_i ~ ε^{2i} 的分級頻譜因此每個特徵值都有完整的相對精度。
"""
import logging
from typing import List, Optional, Tuple

from mpmath import mp

from app.config import config
from app.core.errors import NoConvergence
from app.core.local_svd.covariance import CovarianceMatrix, as_mp_matrix

logger = logging.getLogger(__name__)


def _relative_tol():
    return mp.mpf(10) ** (-(mp.dps // 3))


def _is_negligible(a, i, j, tol, absolute) -> bool:
    off = abs(a[i][j])
    return off <= absolute or off <= tol * mp.sqrt(abs(a[i][i] * a[j][j]))


def _rotate(a, v, i, j, n) -> None:
    theta = (a[j][j] - a[i][i]) / (2 * a[i][j])
    sign = 1 if theta >= 0 else -1
    t = sign / (abs(theta) + mp.sqrt(theta * theta + 1))
    c = 1 / mp.sqrt(t * t + 1)
    s = t * c
    aij = a[i][j]

    a[i][i] -= t * aij
    a[j][j] += t * aij
    a[i][j] = a[j][i] = mp.zero
    for k in range(n):
        if k != i and k != j:
            aki, akj = a[k][i], a[k][j]
            a[k][i] = a[i][k] = c * aki - s * akj
            a[k][j] = a[j][k] = s * aki + c * akj
    for k in range(n):
        vki, vkj = v[k][i], v[k][j]
        v[k][i] = c * vki - s * vkj
        v[k][j] = s * vki + c * vkj


def symmetric_eigen(matrix, max_sweeps: Optional[int] = None) -> Tuple[List, 'mp.matrix']:
    """對稱矩陣的特徵分解

    Args:
        matrix: 對稱 n×n（mp.matrix、numpy 陣列、巢狀串列或 CovarianceMatrix）
        max_sweeps: 最大掃描次數（預設 config.JACOBI_MAX_SWEEPS）

    Returns:
        (由大到小的特徵值, 欄為對應特徵向量的 mp.matrix)；
        每個特徵向量中絕對值最大的第一個分量為正

    Raises:
        NoConvergence: 超過最大掃描次數
    """
    entries = matrix.entries if isinstance(matrix, CovarianceMatrix) else as_mp_matrix(matrix)
    n = entries.rows
    if entries.cols != n:
        raise ValueError(f"需要方陣，當前: {entries.rows}×{entries.cols}")
    max_sweeps = max_sweeps or config.JACOBI_MAX_SWEEPS

    a = [[entries[i, j] for j in range(n)] for i in range(n)]
    v = [[mp.one if i == j else mp.zero for j in range(n)] for i in range(n)]
    tol = _relative_tol()
    absolute = mp.mpf(10) ** (-2 * mp.dps) * mp.mnorm(entries, 'F')

    for sweep in range(max_sweeps + 1):
        pending = [(i, j) for i in range(n) for j in range(i + 1, n)
                   if not _is_negligible(a, i, j, tol, absolute)]
        if not pending:
            break
        if sweep == max_sweeps:
            raise NoConvergence(f"Jacobi 旋轉在 {max_sweeps} 次掃描後仍未收斂")
        for i, j in pending:
            if not _is_negligible(a, i, j, tol, absolute):
                _rotate(a, v, i, j, n)

    logger.debug(f"Jacobi 收斂: n={n}, sweeps={sweep}")

    order = sorted(range(n), key=lambda k: a[k][k], reverse=True)
    values = [a[k][k] for k in order]
    vectors = mp.matrix(n, n)
    for column, k in enumerate(order):
        components = [v[row][k] for row in range(n)]
        largest = max(range(n), key=lambda row: (abs(components[row]), -row))
        sign = -1 if components[largest] < 0 else 1
        for row in range(n):
            vectors[row, column] = sign * components[row]
    return values, vectors
