"""
共享數值資源模組
設置 mpmath 工作精度與 CLI 使用的執行緒池
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from mpmath import mp

from app.config import config

logger = logging.getLogger(__name__)

_initialized_dps: Optional[int] = None


def init_extensions(dps: Optional[int] = None) -> int:
    """初始化數值環境

    mpmath 的精度是全域狀態；只在啟動時設定一次，之後僅讀取，
    因此多執行緒計算可以共用。

    Args:
        dps: 十進位工作精度（預設 config.WORKING_DPS）

    Returns:
        實際設定的精度
    """
    global _initialized_dps

    dps = int(dps or config.WORKING_DPS)
    if dps < 15:
        raise ValueError(f"工作精度至少 15 位，當前值: {dps}")

    mp.dps = dps
    if _initialized_dps != dps:
        logger.info(f"✅ mpmath 工作精度: {dps} 位")
    _initialized_dps = dps
    return dps


def working_dps() -> int:
    """目前的 mpmath 精度"""
    return mp.dps


def worker_pool(max_workers: Optional[int] = None) -> ThreadPoolExecutor:
    """建立多個 t 值估計用的執行緒池"""
    workers = max(1, int(max_workers or config.WORKERS))
    return ThreadPoolExecutor(max_workers=workers, thread_name_prefix='frenet')
