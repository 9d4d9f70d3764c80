"""
例外類別
所有數值錯誤都繼承 CurveAnalysisError（本身是 ValueError），CLI 統一轉成 exit code 2
"""
from typing import Iterable, Optional


class CurveAnalysisError(ValueError):
    """曲線分析錯誤基底類別"""


# ==================== hankel ====================
class DegenerateMoments(CurveAnalysisError):
    """動差序列退化：某個 ⟨P_n, P_n⟩ 或行列式為 0"""


# ==================== frenet ====================
class RankDeficient(CurveAnalysisError):
    """導數向量線性相關，曲線在該點不是 n 階正則"""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class DomainError(CurveAnalysisError):
    """參數超出曲線定義域"""


class UnknownCurve(CurveAnalysisError):
    """未註冊的內建曲線名稱"""


class InvalidParams(CurveAnalysisError):
    """曲線參數無效"""


class NotUnitSpeed(CurveAnalysisError):
    """典型曲線參數不滿足弧長正規化"""


class DegenerateCurve(CurveAnalysisError):
    """某個 κ_i² ≤ 0，曲線在該維度退化"""


class InvalidCurvature(CurveAnalysisError):
    """曲率輸入無效"""


class InvalidFrame(CurveAnalysisError):
    """初始標架不正交"""


class NonPositiveCurvature(CurveAnalysisError):
    """積分區間內曲率函數出現非正值"""


class CsvFormatError(CurveAnalysisError):
    """曲線 CSV 格式錯誤"""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


# ==================== local_svd ====================
class PatternViolation(CurveAnalysisError):
    """矩陣不具棋盤狀零模式"""


class InsufficientLadder(CurveAnalysisError):
    """ε 梯度為空或不是比例 1/2 的幾何數列"""


class UnderResolved(CurveAnalysisError):
    """特徵值低於解析下限，對應的 κ_j 不可靠"""

    def __init__(self, indices: Iterable[int], message: Optional[str] = None):
        self.indices = sorted(indices)
        label = ', '.join(f"κ_{j}" for j in self.indices)
        super().__init__(message or f"特徵值不足以解析: {label}")


class TooFewSamples(CurveAnalysisError):
    """離散樣本不足以涵蓋 [t−ε, t+ε]"""


class DegenerateSpectrum(CurveAnalysisError):
    """特徵值重合，標架無法區分"""


class NoConvergence(CurveAnalysisError):
    """Jacobi 旋轉未在最大掃描次數內收斂"""


__all__ = [
    'CurveAnalysisError',
    'DegenerateMoments',
    'RankDeficient', 'DomainError', 'UnknownCurve', 'InvalidParams',
    'NotUnitSpeed', 'DegenerateCurve', 'InvalidCurvature', 'InvalidFrame',
    'NonPositiveCurvature', 'CsvFormatError',
    'PatternViolation', 'InsufficientLadder', 'UnderResolved', 'TooFewSamples',
    'DegenerateSpectrum', 'NoConvergence',
]
