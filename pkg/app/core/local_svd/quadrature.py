"""
Gauss-Legendre 節點與權重

以 numpy 的 leggauss 作初值，在 mpmath 工作精度下用 Newton 法修正節點，
再對稱化，使奇函數在對稱區間上的積分精確為 0。
"""
from functools import lru_cache
from typing import List, Tuple

import numpy as np
from mpmath import mp


def _legendre_and_derivative(order: int, x) -> Tuple[object, object]:
    p = mp.legendre(order, x)
    p_prev = mp.legendre(order - 1, x)
    return p, order * (x * p - p_prev) / (x * x - 1)


@lru_cache(maxsize=32)
def _nodes_cached(order: int, dps: int) -> Tuple[Tuple, Tuple]:
    seeds, _ = np.polynomial.legendre.leggauss(order)
    tolerance = mp.mpf(10) ** (-dps)
    nodes = []
    for seed in seeds:
        x = mp.mpf(seed)
        for _ in range(8):
            p, dp = _legendre_and_derivative(order, x)
            delta = p / dp
            x -= delta
            if abs(delta) <= tolerance:
                break
        nodes.append(x)
    nodes = [(nodes[i] - nodes[order - 1 - i]) / 2 for i in range(order)]
    weights = []
    for x in nodes:
        _, dp = _legendre_and_derivative(order, x)
        weights.append(2 / ((1 - x * x) * dp * dp))
    weights = [(weights[i] + weights[order - 1 - i]) / 2 for i in range(order)]
    return tuple(nodes), tuple(weights)


def gauss_legendre(order: int) -> Tuple[List, List]:
    """[-1, 1] 上的 order 點 Gauss-Legendre 節點與權重（mpf）"""
    if order < 2:
        raise ValueError(f"積分階數必須 >= 2，當前值: {order}")
    nodes, weights = _nodes_cached(order, mp.dps)
    return list(nodes), list(weights)


def window_rule(eps, order: int) -> Tuple[List, List]:
    """[−ε, ε] 上的複合規則：兩個半區間各 order 點

    Returns:
        (相對位移 s−t, 已含 1/(2ε) 正規化的權重)；權重總和為 1
    """
    nodes, weights = gauss_legendre(order)
    eps = mp.mpf(eps)
    half = eps / 2
    offsets, scaled = [], []
    for x, w in zip(nodes, weights):
        offsets.append(half * (x - 1))
        scaled.append(w / 4)
    for x, w in zip(nodes, weights):
        offsets.append(half * (x + 1))
        scaled.append(w / 4)
    return offsets, scaled
