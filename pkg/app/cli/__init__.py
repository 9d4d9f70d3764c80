"""
CLI package - 命令列子指令、報表格式與自我驗證
"""
from app.cli.commands import RunConfig, build_parser, main
from app.cli.formatting import Report
from app.cli.validation import run_validation

__all__ = ['RunConfig', 'Report', 'build_parser', 'main', 'run_validation']
