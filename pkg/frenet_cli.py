#!/usr/bin/env python3
"""
Frenet 局部 SVD 工具 - 命令列入口

範例：
    python frenet_cli.py coeffs --max-j 5
    python frenet_cli.py hankel --n 3
    python frenet_cli.py estimate --curve twisted-cubic --t 3 --eps 1e-3
    python frenet_cli.py generate --kappa 0.5,0.5 --range 0,12.566 --out helix.csv
    python frenet_cli.py validate --fast
"""
import logging
import sys

from app.config import config

# 日誌只寫到 stderr，stdout 保留給報表
logging.basicConfig(
    level=getattr(logging, config.LOG_LEVEL, logging.WARNING),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)

from app.cli import main  # noqa: E402

if __name__ == '__main__':
    sys.exit(main())
