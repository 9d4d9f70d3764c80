"""
自我驗證套件

每個檢查回傳 (是否通過, 說明)；needs_ladder=True 的檢查需要 ε 梯度或 ODE 積分，--fast 時略過。
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.core.errors import CurveAnalysisError
from app.core.frenet.apparatus import frenet_apparatus, gram_schmidt_frame
from app.core.frenet.curves import twisted_cubic, twisted_cubic_curvatures
from app.core.frenet.integrator import integrate_frenet_system
from app.core.frenet.registry import builtin_curve
from app.core.hankel.coefficients import coefficient_from_determinants, curvature_coefficient
from app.core.hankel.determinants import hankel_det_exact
from app.core.hankel.moments import MomentSequence
from app.core.hankel.orthopoly import ortho_poly_generate
from app.core.hankel.selberg import b_recursion_ratio, hankel_b, selberg_f
from app.core.local_svd.estimator import CurvatureEstimator

logger = logging.getLogger(__name__)

CheckResult = Tuple[bool, str]
CoefficientFn = Callable[[int], Fraction]

PUBLISHED_COEFFICIENTS = [
    Fraction(20, 9), Fraction(105, 4), Fraction(336, 25), Fraction(825, 16), Fraction(1716, 49),
]
TWISTED_CUBIC_T = 3.0
TWISTED_CUBIC_SINGLE_EPS = (0.0026865640, 0.0036991369)
TWISTED_CUBIC_EXACT = (0.0026865644, 0.0036991368)
TWISTED_CUBIC_U1 = (0.036131465, 0.216788800, 0.975549656)


@dataclass(frozen=True)
class ValidationCheck:
    name: str
    fn: Callable[..., CheckResult]
    needs_ladder: bool = False


def _relative_errors(estimated: Sequence[float], exact: Sequence[float]) -> List[float]:
    return [abs(e - x) / abs(x) for e, x in zip(estimated, exact)]


# ==================== exact arithmetic ====================
def check_coefficients(coefficient_fn: CoefficientFn = curvature_coefficient) -> CheckResult:
    """a_1..a_5 與發表值一致，且 j ≤ 10 時與行列式重建值一致"""
    for j, expected in enumerate(PUBLISHED_COEFFICIENTS, start=1):
        if coefficient_fn(j) != expected:
            return False, f"a_{j} = {coefficient_fn(j)}，預期 {expected}"
    for j in range(1, 11):
        if coefficient_fn(j) != coefficient_from_determinants(j):
            return False, f"a_{j} 與 Hankel 行列式重建值 {coefficient_from_determinants(j)} 不符"
    return True, "a_1..a_5 = 20/9, 105/4, 336/25, 825/16, 1716/49；j ≤ 10 與行列式一致"


def check_hankel_recurrence() -> CheckResult:
    for n in range(2, 21):
        ratio = hankel_b(n) * hankel_b(n - 2) / hankel_b(n - 1) ** 2
        if ratio != b_recursion_ratio(n):
            return False, f"n={n}: B_n·B_(n−2)/B_(n−1)² = {ratio}，預期 {b_recursion_ratio(n)}"
    seq = MomentSequence.of(2, 3, interleave_zeros=True)
    for n in range(1, 13):
        if hankel_b(n) != hankel_det_exact(seq, n):
            return False, f"n={n}: 閉式 B_n 與 Bareiss 行列式不符"
    return True, "n = 2..20 遞迴成立；n ≤ 12 與 Bareiss 一致"


def check_selberg() -> CheckResult:
    for alpha, beta in [(2, 3), (1, 1), (1, 2), (3, 5)]:
        seq = MomentSequence.of(alpha, beta)
        for n in range(1, 11):
            if selberg_f(n, alpha, beta) != hankel_det_exact(seq, n):
                return False, f"F_{n}({alpha},{beta}) 與 Bareiss 行列式不符"
    if selberg_f(3, 1, 1) != Fraction(1, 2160):
        return False, f"F_3(1,1) = {selberg_f(3, 1, 1)}，預期 1/2160"
    return True, "n ≤ 10 四組 (α,β) 一致；F_3(1,1) = 1/2160"


def check_orthopoly() -> CheckResult:
    for seq in [MomentSequence.of(2, 3, interleave_zeros=True), MomentSequence.of(1, 1)]:
        family = ortho_poly_generate(seq.take(17), 8)
        for n in range(2, 9):
            dets = [hankel_det_exact(seq, k) for k in (n, n - 1, n - 2)]
            expected = dets[0] * dets[2] / dets[1] ** 2
            if family.betas[n - 1] != expected:
                return False, f"{seq}: β_{n - 1} = {family.betas[n - 1]}，預期 {expected}"
    return True, "β_(n−1) = B_n·B_(n−2)/B_(n−1)²（n ≤ 8，兩種序列）"


# ==================== twisted cubic ====================
def check_twisted_cubic_digits() -> CheckResult:
    curve = twisted_cubic()
    estimator = CurvatureEstimator(ladder=[1e-3])
    estimate = estimator.estimate_curvatures(curve, TWISTED_CUBIC_T)
    for j, (value, target) in enumerate(zip(estimate.kappas, TWISTED_CUBIC_SINGLE_EPS), start=1):
        if abs(value - target) > 5e-10:
            return False, f"ε=1e−3 的 κ_{j} = {value:.12g}，預期 {target} ± 5e−10"
    apparatus = frenet_apparatus(curve, TWISTED_CUBIC_T)
    for j, (value, target) in enumerate(zip(apparatus.curvatures, TWISTED_CUBIC_EXACT), start=1):
        if abs(value - target) > 1e-9:
            return False, f"Frenet 標架 κ_{j} = {value:.12g}，預期 {target} ± 1e−9"
    u1 = estimator.estimate_frame(curve, TWISTED_CUBIC_T)[:, 0]
    deviation = float(np.max(np.abs(u1 - np.array(TWISTED_CUBIC_U1))))
    if deviation > 5e-9:
        return False, f"u_1 與發表值最大差 {deviation:.3e} > 5e−9"
    return True, f"κ = {[f'{k:.10f}' for k in estimate.kappas]}，u_1 最大差 {deviation:.1e}"


def check_precision_scaling() -> CheckResult:
    curve = twisted_cubic()
    estimate = CurvatureEstimator(ladder=[1e-6]).estimate_curvatures(curve, TWISTED_CUBIC_T)
    errors = _relative_errors(estimate.kappas, twisted_cubic_curvatures(TWISTED_CUBIC_T))
    worst = max(errors)
    return worst <= 1e-11, f"ε=1e−6 最大相對誤差 {worst:.2e}（門檻 1e−11）"


def check_frame_agreement() -> CheckResult:
    estimator = CurvatureEstimator(ladder=[1e-4])
    worst = 0.0
    for curve, t in [(twisted_cubic(), TWISTED_CUBIC_T), (builtin_curve('helix'), 1.0)]:
        frame = estimator.estimate_frame(curve, t)
        exact = gram_schmidt_frame(curve.derivatives(t))
        alignment = np.abs(np.sum(frame * exact, axis=0))
        worst = max(worst, float(np.max(1 - alignment)))
    return worst <= 1e-6, f"max(1 − |⟨u_i, e_i⟩|) = {worst:.2e}（門檻 1e−6）"


def check_parameterization_invariance() -> CheckResult:
    curve = twisted_cubic()
    estimator = CurvatureEstimator(ladder=[1e-4])
    original = estimator.estimate_curvatures(curve, TWISTED_CUBIC_T).kappas
    scaled = estimator.estimate_curvatures(curve.reparameterize(2.0), TWISTED_CUBIC_T / 2).kappas
    worst = max(_relative_errors(scaled, original))
    return worst <= 1e-6, f"t → 2t 最大相對差 {worst:.2e}（門檻 1e−6）"


# ==================== ladder-based ====================
def check_helix_scaling() -> CheckResult:
    a, alpha, b = 1.0, 1 / math.sqrt(2), 1 / math.sqrt(2)
    spectrum = CurvatureEstimator().spectrum(builtin_curve('helix', a=a, alpha=alpha, b=b), 1.0)
    for row in spectrum.scaling_slopes():
        for i, slope in enumerate(row, start=1):
            if abs(slope - 2 * i) > 0.02 * 2 * i:
                return False, f"λ_{i} 的斜率 {slope:.4f}，預期 {2 * i} ± 2%"
    targets = {2: a ** 2 * alpha ** 4 / 20, 3: a ** 2 * alpha ** 6 * b ** 2 / 1575}
    for i, target in targets.items():
        error = abs(float(spectrum.coefficients[i - 1]) - target) / target
        if error > 1e-3:
            return False, f"c_{i} 相對誤差 {error:.2e} > 0.1%"
    return True, "斜率 2i ± 2%；c_2、c_3 與閉式差 < 0.1%"


def round_trip_errors(
    kappas: Sequence[float],
    t_range: Tuple[float, float],
    ladder: Sequence[float],
    step: float = 5e-4,
    points: Sequence[float] = (1.0, 2.0, 3.0, 4.0, 5.0),
) -> Tuple[List[List[float]], List[int]]:
    """以 Frenet 方程產生常曲率曲線，再由離散共變異估計曲率

    Returns:
        (每個 t 的相對誤差, 不可靠的 κ_j 索引)
    """
    dim = len(kappas) + 1
    samples = integrate_frenet_system(
        dim, list(kappas), np.zeros(dim), np.eye(dim), t_range, step,
    )
    estimator = CurvatureEstimator(ladder=ladder)
    errors, unreliable = [], set()
    for t in points:
        estimate = estimator.estimate_curvatures(samples, t)
        unreliable.update(estimate.unreliable_indices)
        errors.append(_relative_errors(estimate.kappas, kappas))
    return errors, sorted(unreliable)


def check_round_trip() -> CheckResult:
    errors, unreliable = round_trip_errors((0.5, 0.3, 0.2), (0.0, 6.0), (0.4, 0.2))
    worst = max(max(row) for row in errors)
    if unreliable or worst > 5e-3:
        return False, f"R⁴ 最大相對誤差 {worst:.2e}（門檻 0.5%），不可靠: {unreliable}"

    errors5, unreliable5 = round_trip_errors((0.6, 0.6, 0.6, 0.6), (0.0, 7.0), (0.8, 0.4))
    worst5 = max(max(row) for row in errors5)
    if unreliable5:
        logger.warning(f"⚠️  R⁵ 不可靠的曲率: {unreliable5}")
    detail = f"R⁴ 最大相對誤差 {worst:.2e}；R⁵ {worst5:.2e}（門檻 2%）"
    return worst5 <= 2e-2, detail


def build_checks(coefficient_fn: Optional[CoefficientFn] = None) -> List[ValidationCheck]:
    coefficient_fn = coefficient_fn or curvature_coefficient
    return [
        ValidationCheck('係數表 a_j', lambda: check_coefficients(coefficient_fn)),
        ValidationCheck('Hankel 遞迴', check_hankel_recurrence),
        ValidationCheck('Selberg 閉式', check_selberg),
        ValidationCheck('正交多項式 β_n', check_orthopoly),
        ValidationCheck('扭曲三次曲線數字', check_twisted_cubic_digits),
        ValidationCheck('精度隨 ε 提升', check_precision_scaling),
        ValidationCheck('標架一致', check_frame_agreement),
        ValidationCheck('Helix 特徵值尺度律', check_helix_scaling, needs_ladder=True),
        ValidationCheck('ODE 往返估計', check_round_trip, needs_ladder=True),
        ValidationCheck('重新參數化不變', check_parameterization_invariance),
    ]


def run_validation(fast: bool = False, coefficient_fn: Optional[CoefficientFn] = None,
                   echo: Callable[[str], None] = print) -> Dict[str, bool]:
    """執行驗證套件並逐項輸出狀態

    Args:
        fast: 略過需要 ε 梯度的檢查
        coefficient_fn: 替換 a_j 的計算（測試用）
        echo: 輸出函數

    Returns:
        {檢查名稱: 是否通過}（略過的檢查不列入）
    """
    results = {}
    for check in build_checks(coefficient_fn):
        if fast and check.needs_ladder:
            echo(f"⏭️  {check.name}: 略過（--fast）")
            continue
        try:
            passed, detail = check.fn()
        except CurveAnalysisError as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        results[check.name] = passed
        echo(f"{'✅' if passed else '❌'} {check.name}: {detail}")

    failed = [name for name, passed in results.items() if not passed]
    if failed:
        echo(f"❌ {len(failed)} 項檢查失敗: {', '.join(failed)}")
    else:
        echo(f"✅ 全部 {len(results)} 項檢查通過")
    return results
