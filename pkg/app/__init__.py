"""
Frenet 局部 SVD 曲率分析庫

- app.core.hankel     精確有理數 Hankel 行列式、Selberg 閉式、正交多項式、曲率係數 a_j
- app.core.frenet     曲線、Frenet 標架、典型曲線參數系統、Frenet ODE 積分器
- app.core.local_svd  曲線上共變異矩陣、局部奇異值與曲率估計
- app.cli             命令列介面
"""

__version__ = '1.0.0'


def init_app(dps=None):
    """初始化數值環境（精度），回傳實際精度"""
    from app.extensions import init_extensions
    return init_extensions(dps)
