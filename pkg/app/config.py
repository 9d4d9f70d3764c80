"""
配置管理模組
Configuration Management Module

從環境變數載入數值參數（精度、ε 梯度、積分階數、容差），提供預設值
"""
import os
from dotenv import load_dotenv

# 載入 .env 檔案
load_dotenv()


class Config:
    """系統配置類"""

    # ==================== Precision ====================
    # mpmath 工作精度（十進位位數），解析曲線的共變異矩陣在此精度下計算
    WORKING_DPS = int(os.getenv('FRENET_WORKING_DPS', 50))

    if WORKING_DPS < 15:
        raise ValueError(f"Invalid FRENET_WORKING_DPS: {WORKING_DPS}. Must be >= 15")

    # ==================== ε Ladder ====================
    EPS0 = float(os.getenv('FRENET_EPS0', 1e-2))
    LADDER_RUNGS = int(os.getenv('FRENET_LADDER_RUNGS', 4))
    RICHARDSON_LEVELS = int(os.getenv('FRENET_RICHARDSON_LEVELS', 1))

    if EPS0 <= 0:
        raise ValueError(f"Invalid FRENET_EPS0: {EPS0}. Must be > 0")
    if LADDER_RUNGS < 1:
        raise ValueError(f"Invalid FRENET_LADDER_RUNGS: {LADDER_RUNGS}. Must be >= 1")
    if RICHARDSON_LEVELS < 0:
        raise ValueError(f"Invalid FRENET_RICHARDSON_LEVELS: {RICHARDSON_LEVELS}. Must be >= 0")

    # ==================== Quadrature ====================
    # 每個半區間的 Gauss-Legendre 節點數
    QUAD_ORDER = int(os.getenv('FRENET_QUAD_ORDER', 24))

    if QUAD_ORDER < 2:
        raise ValueError(f"Invalid FRENET_QUAD_ORDER: {QUAD_ORDER}. Must be >= 2")

    # ==================== Tolerances ====================
    RANK_TOL = float(os.getenv('FRENET_RANK_TOL', 1e-10))
    ORTHO_TOL = float(os.getenv('FRENET_ORTHO_TOL', 1e-10))
    JACOBI_MAX_SWEEPS = int(os.getenv('FRENET_JACOBI_MAX_SWEEPS', 100))
    REORTHO_EVERY = int(os.getenv('FRENET_REORTHO_EVERY', 16))

    if REORTHO_EVERY < 1:
        raise ValueError(f"Invalid FRENET_REORTHO_EVERY: {REORTHO_EVERY}. Must be >= 1")

    # ==================== CLI ====================
    WORKERS = int(os.getenv('FRENET_WORKERS', 4))

    # ==================== Logging ====================
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()

    @classmethod
    def eps_ladder(cls) -> list:
        """預設 ε 梯度（比例 1/2）"""
        return [cls.EPS0 / 2 ** k for k in range(cls.LADDER_RUNGS)]

    @classmethod
    def summary(cls) -> dict:
        """取得目前的數值設定"""
        return {
            'working_dps': cls.WORKING_DPS,
            'eps0': cls.EPS0,
            'ladder_rungs': cls.LADDER_RUNGS,
            'richardson_levels': cls.RICHARDSON_LEVELS,
            'quad_order': cls.QUAD_ORDER,
            'workers': cls.WORKERS,
        }


# 建立全域配置實例
config = Config()


# 啟動時顯示配置資訊
if __name__ == '__main__':
    print("=" * 60)
    print("Frenet 局部 SVD 配置資訊")
    print("=" * 60)
    for key, value in config.summary().items():
        print(f"{key}: {value}")
    print(f"ε 梯度: {config.eps_ladder()}")
    print("=" * 60)
