"""
報表格式化
表格 15 位有效數字，CSV 17 位（可精確還原），JSON 帶 schema 版本
"""
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Sequence

import pandas as pd

from app.core.hankel.rational import format_rational

SCHEMA_VERSION = 1
TABLE_DIGITS = 15
CSV_DIGITS = 17
FORMATS = ('table', 'csv', 'json')


def format_float(value: float, digits: int = TABLE_DIGITS) -> str:
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return ''
    return f"{float(value):.{digits}g}"


def format_cell(value: Any, digits: int) -> str:
    """單一儲存格轉為文字；向量以空白分隔"""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value, digits)
    if isinstance(value, (list, tuple)):
        return ' '.join(format_cell(item, digits) for item in value)
    return str(value)


def json_value(value: Any) -> Any:
    """轉為 JSON 可序列化的值；有理數保留 "p/q" 字串，NaN 轉為 null"""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, (list, tuple)):
        return [json_value(item) for item in value]
    if isinstance(value, dict):
        return {key: json_value(item) for key, item in value.items()}
    if hasattr(value, 'item'):
        return json_value(value.item())
    return value


@dataclass
class Report:
    """一個指令的輸出：欄位、列與附加資訊"""
    command: str
    columns: List[str]
    rows: List[Sequence[Any]] = field(default_factory=list)
    meta: Dict[str, Any] = field(default_factory=dict)

    def add_row(self, *cells: Any) -> None:
        if len(cells) != len(self.columns):
            raise ValueError(f"列長度 {len(cells)} 與欄位數 {len(self.columns)} 不符")
        self.rows.append(list(cells))

    def _frame(self, digits: int) -> pd.DataFrame:
        return pd.DataFrame(
            [[format_cell(cell, digits) for cell in row] for row in self.rows],
            columns=self.columns,
            dtype=str,
        )

    def to_table(self) -> str:
        lines = [f"{key}: {format_cell(value, TABLE_DIGITS)}" for key, value in self.meta.items()]
        if self.rows:
            lines.append(self._frame(TABLE_DIGITS).to_string(index=False))
        else:
            lines.append('(無資料)')
        return '\n'.join(lines) + '\n'

    def to_csv(self) -> str:
        buffer = io.StringIO()
        self._frame(CSV_DIGITS).to_csv(buffer, index=False, lineterminator='\n')
        return buffer.getvalue()

    def to_json(self) -> str:
        payload = {'schema': SCHEMA_VERSION, 'command': self.command}
        payload.update({key: json_value(value) for key, value in self.meta.items()})
        payload['rows'] = [
            {column: json_value(cell) for column, cell in zip(self.columns, row)}
            for row in self.rows
        ]
        return json.dumps(payload, indent=2, ensure_ascii=False) + '\n'

    def render(self, output_format: str) -> str:
        if output_format == 'csv':
            return self.to_csv()
        if output_format == 'json':
            return self.to_json()
        if output_format == 'table':
            return self.to_table()
        raise ValueError(f"不支援的輸出格式: {output_format}（可用: {', '.join(FORMATS)}）")
