#!/usr/bin/env python
"""
範例曲線種子腳本
以 Frenet 方程產生常曲率曲線，寫成 CSV（t,x1,...,xn）供 estimate 指令使用
"""
import logging
import math
import os
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.core.frenet.integrator import integrate_frenet_system  # noqa: E402
from app.core.frenet.io import write_sampled_curve  # noqa: E402

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
)
logger = logging.getLogger(__name__)

# 名稱 → (曲率, 參數區間)
SEED_CURVES = {
    'circle': ((1.0,), (0.0, 2 * math.pi)),
    'helix': ((0.5, 0.5), (0.0, 4 * math.pi)),
    'r4-constant': ((0.5, 0.3, 0.2), (0.0, 6.0)),
    'r5-constant': ((0.6, 0.6, 0.6, 0.6), (0.0, 7.0)),
}


def seed_curves(names, output_dir: Path, step: float = 5e-4, sample_every: int = 1):
    """產生並寫出曲線

    Returns:
        {名稱: 樣本數}
    """
    output_dir.mkdir(parents=True, exist_ok=True)
    written = {}
    for name in names:
        if name not in SEED_CURVES:
            logger.error(f"❌ 未知的種子曲線: {name}（可用: {', '.join(SEED_CURVES)}）")
            continue
        kappas, t_range = SEED_CURVES[name]
        dim = len(kappas) + 1
        curve = integrate_frenet_system(
            dim, list(kappas), np.zeros(dim), np.eye(dim), t_range, step, sample_every=sample_every,
        )
        path = output_dir / f"{name}.csv"
        write_sampled_curve(curve, path)
        written[name] = len(curve)
        logger.info(f"✅ {path}: {len(curve)} 個樣本，κ = {kappas}")
    return written


def main():
    """主程序入口"""
    import argparse

    parser = argparse.ArgumentParser(description='範例曲線種子腳本')
    parser.add_argument(
        '--curves', '-c',
        nargs='+',
        default=list(SEED_CURVES),
        help=f"曲線列表（預設: {' '.join(SEED_CURVES)}）"
    )
    parser.add_argument(
        '--output', '-o',
        default='data/curves',
        help='輸出目錄（預設: data/curves）'
    )
    parser.add_argument(
        '--step', '-s',
        type=float,
        default=5e-4,
        help='積分步長（預設: 5e-4）'
    )
    parser.add_argument(
        '--sample-every', '-k',
        type=int,
        default=1,
        help='每幾步輸出一個樣本（預設: 1）'
    )

    args = parser.parse_args()

    written = seed_curves(args.curves, Path(args.output), args.step, args.sample_every)
    print(f"\n📊 已寫出 {len(written)} 條曲線:")
    for name, count in written.items():
        print(f"  {name}: {count} 個樣本")
    return 0 if len(written) == len(args.curves) else 1


if __name__ == '__main__':
    sys.exit(main())
