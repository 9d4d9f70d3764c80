"""
命令列介面

子指令：
    coeffs    a_j 係數表
    hankel    B_n、主元與遞迴比值（閉式對照 Bareiss）
    estimate  局部 SVD 曲率與標架估計（內建曲線或 CSV）
    frenet    導數 oracle 的精確 Frenet 標架與曲率
    generate  解 Frenet 方程產生曲線 CSV
    validate  自我驗證套件

Exit code：0 成功，1 驗證失敗，2 使用或輸入錯誤
"""
import argparse
import logging
import math
import sys
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from app.cli.formatting import FORMATS, Report
from app.cli.validation import run_validation
from app.config import config
from app.core.errors import CurveAnalysisError, DegenerateCurve, DomainError, NotUnitSpeed
from app.core.frenet.apparatus import frenet_apparatus
from app.core.frenet.canonical import params_to_curvatures
from app.core.frenet.curves import Curve, SampledCurve, twisted_cubic_curvatures
from app.core.frenet.integrator import integrate_frenet_system
from app.core.frenet.io import read_sampled_curve, write_sampled_curve
from app.core.frenet.registry import BUILTIN_CURVES, builtin_curve
from app.core.hankel.coefficients import coefficient_table
from app.core.hankel.determinants import HankelFamily
from app.core.hankel.moments import MomentSequence
from app.core.hankel.rational import parse_rational
from app.core.hankel.selberg import hankel_b, interleaved_recursion_ratio
from app.core.local_svd.estimator import CurvatureEstimator, eps_ladder, orient_frame
from app.extensions import init_extensions, worker_pool

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_USAGE = 2


class CommandError(CurveAnalysisError):
    """指令執行錯誤（附帶出錯的 t）"""


# ==================== 參數解析 ====================
def parse_float_list(text: str) -> List[float]:
    """"1,2.5,3" → [1.0, 2.5, 3.0]（小數點固定為 '.'）"""
    try:
        return [float(item) for item in text.split(',') if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"無法解析數值列表: {text!r}") from e


def parse_range(text: str) -> Tuple[float, float]:
    values = parse_float_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"區間格式應為 a,b: {text!r}")
    return values[0], values[1]


def parse_param(text: str) -> Tuple[str, float]:
    """"key=value" → (key, float(value))"""
    key, sep, value = text.partition('=')
    if not sep or not key.strip():
        raise argparse.ArgumentTypeError(f"參數格式應為 key=value: {text!r}")
    try:
        return key.strip(), float(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"參數 {key} 的值不是數字: {value!r}") from e


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


@dataclass
class RunConfig:
    """一次 CLI 執行的設定"""
    command: str
    curve: Optional[str] = None
    params: Dict[str, float] = field(default_factory=dict)
    t_values: List[float] = field(default_factory=list)
    eps: Optional[float] = None
    ladder_rungs: Optional[int] = None
    quad_order: Optional[int] = None
    levels: Optional[int] = None
    dps: Optional[int] = None
    output_format: str = 'table'
    out: Optional[str] = None
    max_j: int = 5
    n: int = 5
    alpha: object = 2
    beta: object = 3
    dim: Optional[int] = None
    kappas: List[float] = field(default_factory=list)
    t_range: Optional[Tuple[float, float]] = None
    step: float = 1e-3
    sample_every: int = 1
    fast: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        values = {key: value for key, value in vars(args).items() if key in cls.__dataclass_fields__}
        values['params'] = dict(getattr(args, 'param', None) or [])
        return cls(**{key: value for key, value in values.items() if value is not None})

    def ladder(self) -> List[float]:
        """--eps 單獨指定時只用一個 ε；--ladder 指定梯度長度"""
        if self.eps is not None and self.ladder_rungs is None:
            return eps_ladder(self.eps, 1)
        return eps_ladder(self.eps, self.ladder_rungs)


# ==================== 輸入輸出 ====================
def load_source(run: RunConfig) -> Union[Curve, SampledCurve]:
    """--curve 為內建名稱或 CSV 路徑，兩者擇一

    Raises:
        UnknownCurve: 既不是內建名稱也不是存在的檔案
        DomainError: t 超出定義域
    """
    if not run.curve:
        raise ValueError("需要 --curve <名稱|路徑>")
    if run.curve in BUILTIN_CURVES or not Path(run.curve).exists():
        source = builtin_curve(run.curve, **run.params)
        lo, hi = source.domain
    else:
        if run.params:
            raise ValueError("CSV 輸入不接受 --param")
        source = read_sampled_curve(run.curve)
        lo, hi = source.domain

    for t in run.t_values:
        if not lo <= t <= hi:
            raise DomainError(f"t={t:g} 超出定義域 [{lo:g}, {hi:g}]")
    return source


def emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        logger.info(f"✅ 已寫出 {out}")
    else:
        sys.stdout.write(text)


def _check_dimension(run: RunConfig, source) -> None:
    if run.dim is not None and run.dim != source.dimension:
        raise ValueError(f"--dim {run.dim} 與曲線維度 {source.dimension} 不符")


def _require_t(run: RunConfig) -> None:
    if not run.t_values:
        raise ValueError("需要 --t <列表>")


def _fan_out(fn, t_values: List[float]) -> list:
    """多個 t 平行計算；結果順序與輸入一致"""
    if len(t_values) == 1:
        return [fn(t_values[0])]
    with worker_pool() as pool:
        return list(pool.map(fn, t_values))


# ==================== 指令 ====================
def build_coeffs_report(max_j: int) -> Report:
    if max_j < 0:
        raise ValueError(f"--max-j 不可為負，當前值: {max_j}")
    report = Report('coeffs', ['j', 'a_j', 'a_j_float'])
    for j, value in enumerate(coefficient_table(max_j), start=1):
        report.add_row(j, value, float(value))
    return report


def cmd_coeffs(run: RunConfig) -> int:
    emit(build_coeffs_report(run.max_j).render(run.output_format), run.out)
    return EXIT_OK


def build_hankel_report(n: int, alpha, beta) -> Report:
    """閉式 B_n 與 Bareiss 行列式、主元、遞迴比值的對照"""
    if n < 1:
        raise ValueError(f"--n 必須 >= 1，當前值: {n}")
    seq = MomentSequence.of(alpha, beta, interleave_zeros=True)
    family = HankelFamily.build(seq, n)
    report = Report(
        'hankel',
        ['n', 'B_n', 'B_n_oracle', 'pivot', 'ratio', 'ratio_oracle', 'status'],
        meta={'alpha': seq.alpha, 'beta': seq.beta},
    )
    for k in range(1, n + 1):
        closed = hankel_b(k, seq.alpha, seq.beta)
        ratio = interleaved_recursion_ratio(k, seq.alpha, seq.beta) if k >= 2 else None
        ratio_oracle = family.ratios[k] if k >= 2 else None
        passed = closed == family.dets[k] and ratio == ratio_oracle
        report.add_row(k, closed, family.dets[k], family.pivots[k], ratio, ratio_oracle,
                       'PASS' if passed else 'FAIL')
    return report


def cmd_hankel(run: RunConfig) -> int:
    emit(build_hankel_report(run.n, run.alpha, run.beta).render(run.output_format), run.out)
    return EXIT_OK


def _estimate_at(estimator: CurvatureEstimator, source, t: float):
    try:
        estimate = estimator.estimate_curvatures(source, t)
        frame = orient_frame(estimate.spectrum.eigenvectors[-1], source, t)
        reference = None
        if isinstance(source, Curve) and source.has_derivatives:
            reference = frenet_apparatus(source, t)
    except CurveAnalysisError as e:
        raise CommandError(f"t={t:g}: {e}") from e
    return estimate, frame, reference


def build_estimate_report(run: RunConfig, source) -> Report:
    _require_t(run)
    estimator = CurvatureEstimator(ladder=run.ladder(), quad_order=run.quad_order, levels=run.levels)
    results = _fan_out(partial(_estimate_at, estimator, source), run.t_values)

    report = Report(
        'estimate',
        ['t', 'i', 'kappa', 'reliable', 'kappa_ref', 'u', 'angle'],
        meta={
            'curve': source.name,
            'dimension': source.dimension,
            'ladder': estimator.ladder,
            'levels': estimator.levels,
        },
    )
    for t, (estimate, frame, reference) in zip(run.t_values, results):
        n = frame.shape[0]
        for i in range(n):
            kappa = estimate.kappas[i] if i < n - 1 else None
            reliable = bool(estimate.reliable[i]) if i < n - 1 else None
            kappa_ref, angle = None, None
            if reference is not None:
                kappa_ref = float(reference.curvatures[i]) if i < n - 1 else None
                cosine = min(1.0, abs(float(frame[:, i] @ reference.frame[:, i])))
                angle = math.acos(cosine)
            report.add_row(t, i + 1, kappa, reliable, kappa_ref, [float(x) for x in frame[:, i]], angle)
    return report


def cmd_estimate(run: RunConfig) -> int:
    source = load_source(run)
    _check_dimension(run, source)
    emit(build_estimate_report(run, source).render(run.output_format), run.out)
    return EXIT_OK


def reference_curvatures(curve: Curve) -> Optional[List[float]]:
    """典型曲線的閉式曲率"""
    if curve.params is None:
        return None
    try:
        return params_to_curvatures(curve.dimension, curve.params)
    except (NotUnitSpeed, DegenerateCurve) as e:
        logger.warning(f"⚠️  {curve.name} 沒有閉式參考曲率: {e}")
        return None


def _frenet_at(curve: Curve, t: float):
    try:
        return frenet_apparatus(curve, t)
    except CurveAnalysisError as e:
        raise CommandError(f"t={t:g}: {e}") from e


def build_frenet_report(run: RunConfig, curve: Curve) -> Report:
    _require_t(run)
    if not isinstance(curve, Curve):
        raise ValueError("frenet 指令需要內建曲線（CSV 樣本沒有導數 oracle）")
    results = _fan_out(partial(_frenet_at, curve), run.t_values)
    canonical = reference_curvatures(curve)

    report = Report(
        'frenet',
        ['t', 'i', 'kappa', 'kappa_ref', 'e', 'speed'],
        meta={'curve': curve.name, 'dimension': curve.dimension},
    )
    for t, apparatus in zip(run.t_values, results):
        n = apparatus.dimension
        if curve.name == 'twisted-cubic':
            reference = list(twisted_cubic_curvatures(t))
        else:
            reference = canonical
        for i in range(n):
            kappa = float(apparatus.curvatures[i]) if i < n - 1 else None
            kappa_ref = float(reference[i]) if reference is not None and i < n - 1 else None
            report.add_row(t, i + 1, kappa, kappa_ref, [float(x) for x in apparatus.frame[:, i]],
                           float(apparatus.speed))
    return report


def cmd_frenet(run: RunConfig) -> int:
    curve = load_source(run)
    _check_dimension(run, curve)
    emit(build_frenet_report(run, curve).render(run.output_format), run.out)
    return EXIT_OK


def generate_curve(run: RunConfig) -> SampledCurve:
    """常曲率 κ 的 Frenet 方程解（起點為原點、初始標架為單位矩陣）"""
    if not run.kappas:
        raise ValueError("需要 --kappa <列表>")
    dim = run.dim or len(run.kappas) + 1
    if run.t_range is None:
        raise ValueError("需要 --range a,b")
    return integrate_frenet_system(
        dim,
        list(run.kappas),
        np.zeros(dim),
        np.eye(dim),
        run.t_range,
        run.step,
        sample_every=run.sample_every,
    )


def cmd_generate(run: RunConfig) -> int:
    curve = generate_curve(run)
    if run.out:
        write_sampled_curve(curve, run.out)
        logger.info(f"✅ 已寫出 {run.out}（{len(curve)} 個樣本）")
    else:
        write_sampled_curve(curve, sys.stdout)
    return EXIT_OK


def cmd_validate(run: RunConfig, coefficient_fn=None) -> int:
    results = run_validation(fast=run.fast, coefficient_fn=coefficient_fn)
    return EXIT_OK if all(results.values()) else EXIT_VALIDATION_FAILED


HANDLERS = {
    'coeffs': cmd_coeffs,
    'hankel': cmd_hankel,
    'estimate': cmd_estimate,
    'frenet': cmd_frenet,
    'generate': cmd_generate,
    'validate': cmd_validate,
}


# ==================== argparse ====================
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='output_format', choices=FORMATS, default='table',
                        help='輸出格式（預設: table）')
    common.add_argument('--out', help='輸出檔案（預設: stdout）')
    common.add_argument('--dps', type=int, help=f'mpmath 工作精度（預設: {config.WORKING_DPS}）')
    common.add_argument('--levels', type=int, help=f'Romberg 深度（預設: {config.RICHARDSON_LEVELS}）')

    curve_args = argparse.ArgumentParser(add_help=False)
    curve_args.add_argument('--curve', required=True,
                            help=f"內建曲線（{', '.join(BUILTIN_CURVES)}）或 CSV 路徑")
    curve_args.add_argument('--param', type=parse_param, action='append',
                            help='內建曲線參數 key=value，可重複')
    curve_args.add_argument('--t', dest='t_values', type=parse_float_list, required=True,
                            help='參數 t 列表，例如 1,2,3')

    parser = argparse.ArgumentParser(
        prog='frenet_cli.py',
        description='Frenet-Serret 標架與局部 SVD 曲率估計',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    coeffs = sub.add_parser('coeffs', parents=[common], help='a_j 係數表')
    coeffs.add_argument('--max-j', type=int, default=5, help='最大 j（預設: 5）')

    hankel = sub.add_parser('hankel', parents=[common], help='Hankel 行列式診斷')
    hankel.add_argument('--n', type=int, default=5, help='最大維度（預設: 5）')
    hankel.add_argument('--alpha', type=_rational_arg, default=2, help='α（預設: 2）')
    hankel.add_argument('--beta', type=_rational_arg, default=3, help='β（預設: 3）')

    estimate = sub.add_parser('estimate', parents=[common, curve_args], help='局部 SVD 曲率估計')
    estimate.add_argument('--dim', type=int, help='曲線維度（檢查用）')
    estimate.add_argument('--eps', type=float, help=f'ε_0（預設: {config.EPS0}）')
    estimate.add_argument('--ladder', dest='ladder_rungs', type=int,
                          help=f'梯度長度（預設: {config.LADDER_RUNGS}；只給 --eps 時為 1）')
    estimate.add_argument('--quad-order', type=int, help=f'Gauss-Legendre 節點數（預設: {config.QUAD_ORDER}）')

    frenet = sub.add_parser('frenet', parents=[common, curve_args], help='精確 Frenet 標架')
    frenet.add_argument('--dim', type=int, help='曲線維度（檢查用）')

    generate = sub.add_parser('generate', parents=[common], help='解 Frenet 方程產生曲線 CSV')
    generate.add_argument('--dim', type=int, help='維度（預設: κ 個數 + 1）')
    generate.add_argument('--kappa', dest='kappas', type=parse_float_list, required=True,
                          help='常數曲率列表，例如 0.5,0.5')
    generate.add_argument('--range', dest='t_range', type=parse_range, required=True, help='參數區間 a,b')
    generate.add_argument('--step', type=float, default=1e-3, help='步長（預設: 1e-3）')
    generate.add_argument('--sample-every', type=int, default=1, help='每幾步輸出一個樣本（預設: 1）')

    validate = sub.add_parser('validate', parents=[common], help='自我驗證套件')
    validate.add_argument('--fast', action='store_true', help='略過需要 ε 梯度的檢查')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """CLI 入口

    Returns:
        exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE

    try:
        run = RunConfig.from_args(args)
        init_extensions(run.dps)
        return HANDLERS[run.command](run)
    except (CurveAnalysisError, ValueError, OSError) as e:
        logger.debug("指令失敗", exc_info=True)
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
