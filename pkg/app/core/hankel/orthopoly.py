"""
首一正交多項式

對單項式 {xⁿ} 做 Gram-Schmidt，內積 ⟨xⁱ, xʲ⟩ = μ_{i+j}；
係數 α_n、β_n 直接由內積求得，不經過行列式，作為行列式遞迴的獨立驗證。
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from app.core.errors import DegenerateMoments

logger = logging.getLogger(__name__)

# 係數由低次到高次
Polynomial = Tuple[Fraction, ...]


def inner_product(p: Polynomial, q: Polynomial, moments: Sequence[Fraction]) -> Fraction:
    """⟨p, q⟩ = Σ p_i q_j μ_{i+j}"""
    total = Fraction(0)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            if qj:
                total += pi * qj * moments[i + j]
    return total


def shift(p: Polynomial) -> Polynomial:
    """x·p(x)"""
    return (Fraction(0),) + tuple(p)


def format_polynomial(p: Polynomial, var: str = 'x') -> str:
    """人類可讀格式，例如 x^2 - 1/3"""
    terms = []
    for power in range(len(p) - 1, -1, -1):
        coeff = p[power]
        if coeff == 0:
            continue
        sign = '-' if coeff < 0 else '+'
        magnitude = abs(coeff)
        if power == 0:
            body = str(magnitude)
        else:
            monomial = var if power == 1 else f"{var}^{power}"
            body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
        terms.append((sign, body))
    if not terms:
        return '0'
    head_sign, head = terms[0]
    text = ('-' if head_sign == '-' else '') + head
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class OrthoPolySequence:
    """P_0..P_count，α_0..α_{count−1}，β_0..β_count（β_0 = μ_0）"""
    measure_moments: Tuple[Fraction, ...]
    polys: Tuple[Polynomial, ...]
    alphas: Tuple[Fraction, ...]
    betas: Tuple[Fraction, ...]

    @property
    def count(self) -> int:
        return len(self.polys) - 1

    def norms(self) -> List[Fraction]:
        """⟨P_n, P_n⟩"""
        return [inner_product(p, p, self.measure_moments) for p in self.polys]


def ortho_poly_generate(moments: Sequence[Fraction], count: int) -> OrthoPolySequence:
    """由動差產生首一正交多項式

    Args:
        moments: μ_0..μ_{2·count}（至少 2·count+1 個）
        count: 最高次數

    Returns:
        OrthoPolySequence

    Raises:
        DegenerateMoments: 某個 ⟨P_n, P_n⟩ = 0
    """
    if count < 0:
        raise ValueError(f"count 必須 >= 0，當前值: {count}")
    moments = tuple(Fraction(m) for m in moments)
    if len(moments) < 2 * count + 1:
        raise ValueError(f"需要至少 {2 * count + 1} 個動差，只提供 {len(moments)} 個")

    polys: List[Polynomial] = [(Fraction(1),)]
    norms = [moments[0]]
    if norms[0] == 0:
        raise DegenerateMoments("⟨P_0, P_0⟩ = μ_0 = 0")

    for n in range(1, count + 1):
        # xⁿ 減去在 P_0..P_{n−1} 上的投影
        monomial = tuple([Fraction(0)] * n + [Fraction(1)])
        coeffs = list(monomial)
        for k, pk in enumerate(polys):
            projection = inner_product(monomial, pk, moments) / norms[k]
            for i, c in enumerate(pk):
                coeffs[i] -= projection * c
        poly = tuple(coeffs)
        norm = inner_product(poly, poly, moments)
        if norm == 0:
            raise DegenerateMoments(f"⟨P_{n}, P_{n}⟩ = 0，動差序列在第 {n} 次退化")
        polys.append(poly)
        norms.append(norm)

    alphas = tuple(
        inner_product(shift(polys[n]), polys[n], moments) / norms[n]
        for n in range(count)
    )
    betas = (norms[0],) + tuple(norms[n] / norms[n - 1] for n in range(1, count + 1))

    logger.debug(f"正交多項式已產生至 P_{count}")
    return OrthoPolySequence(
        measure_moments=moments,
        polys=tuple(polys),
        alphas=alphas,
        betas=betas,
    )
