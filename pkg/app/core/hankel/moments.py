"""
反算術動差序列 {1/(αk+β)} 與其交錯零版本 {1/(αk+β), 0}
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from app.core.errors import InvalidParams
from app.core.hankel.rational import RationalLike, as_rational


@dataclass(frozen=True)
class MomentSequence:
    """動差序列

    Attributes:
        alpha: α > 0
        beta: β > 0
        interleave_zeros: True 時奇數位置為 0（element(2k)=1/(αk+β)）
    """
    alpha: Fraction
    beta: Fraction
    interleave_zeros: bool = False

    def __post_init__(self):
        alpha = as_rational(self.alpha)
        beta = as_rational(self.beta)
        if alpha <= 0:
            raise InvalidParams(f"α 必須大於 0，當前值: {alpha}")
        if beta <= 0:
            raise InvalidParams(f"β 必須大於 0，當前值: {beta}")
        object.__setattr__(self, 'alpha', alpha)
        object.__setattr__(self, 'beta', beta)

    @classmethod
    def of(cls, alpha: RationalLike, beta: RationalLike,
           interleave_zeros: bool = False) -> 'MomentSequence':
        return cls(as_rational(alpha), as_rational(beta), interleave_zeros)

    def element(self, k: int) -> Fraction:
        """第 k 個動差（k ≥ 0）"""
        if k < 0:
            raise ValueError(f"動差索引必須 >= 0，當前值: {k}")
        if self.interleave_zeros:
            if k % 2:
                return Fraction(0)
            k //= 2
        return 1 / (self.alpha * k + self.beta)

    def take(self, count: int) -> List[Fraction]:
        """前 count 個動差 μ_0..μ_{count-1}"""
        return [self.element(k) for k in range(count)]

    def __repr__(self) -> str:
        kind = 'interleaved' if self.interleave_zeros else 'plain'
        return f"MomentSequence(α={self.alpha}, β={self.beta}, {kind})"


def moment(seq: MomentSequence, k: int) -> Fraction:
    """μ_k"""
    return seq.element(k)
