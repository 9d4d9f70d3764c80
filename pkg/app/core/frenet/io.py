"""
SampledCurve 的 CSV 讀寫
格式：標頭 t,x1,...,xn；每列一個樣本；輸出 17 位有效數字
"""
import logging
import re
from pathlib import Path
from typing import IO, List, Union

import numpy as np
import pandas as pd

from app.core.errors import CsvFormatError
from app.core.frenet.curves import SampledCurve

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.17g'


def expected_header(dimension: int) -> List[str]:
    return ['t'] + [f"x{i}" for i in range(1, dimension + 1)]


def read_sampled_curve(source: Union[str, Path, IO]) -> SampledCurve:
    """讀取曲線 CSV

    Raises:
        CsvFormatError: 標頭、欄位數或數值錯誤（附檔案行號，1-based）
        OSError: 檔案無法開啟
    """
    try:
        frame = pd.read_csv(source, dtype=str, skipinitialspace=True, keep_default_na=False)
    except pd.errors.EmptyDataError as e:
        raise CsvFormatError("檔案是空的，預期標頭 t,x1,...,xn", line=1) from e
    except pd.errors.ParserError as e:
        match = re.search(r'line (\d+)', str(e))
        raise CsvFormatError(f"欄位數錯誤: {e}", line=int(match.group(1)) if match else None) from e

    columns = [c.strip() for c in frame.columns]
    dimension = len(columns) - 1
    if dimension < 2 or columns != expected_header(dimension):
        raise CsvFormatError(
            f"標頭應為 {','.join(expected_header(max(dimension, 2)))}，實際為 {','.join(columns)}",
            line=1,
        )
    frame.columns = columns

    numeric = frame.apply(pd.to_numeric, errors='coerce')
    bad = numeric.isna().any(axis=1) | ~np.isfinite(numeric.to_numpy(dtype=float)).all(axis=1)
    if bad.any():
        row = int(np.flatnonzero(bad.to_numpy())[0])
        raise CsvFormatError(f"非數值欄位: {','.join(map(str, frame.iloc[row].tolist()))}", line=row + 2)

    # to_numeric 只用於檢查；數值以 float() 轉換才會正確捨入
    values = frame.astype(float).to_numpy()
    if values.shape[0] < 2:
        raise CsvFormatError("至少需要兩個樣本", line=values.shape[0] + 1)
    steps = np.diff(values[:, 0])
    if not np.all(steps > 0):
        row = int(np.flatnonzero(steps <= 0)[0]) + 1
        raise CsvFormatError("參數 t 必須嚴格遞增", line=row + 2)

    name = Path(source).stem if isinstance(source, (str, Path)) else 'csv'
    curve = SampledCurve(parameters=values[:, 0], points=values[:, 1:], name=name)
    logger.info(f"讀取曲線 {curve}")
    return curve


def write_sampled_curve(curve: SampledCurve, target: Union[str, Path, IO]) -> None:
    """寫出曲線 CSV（17 位有效數字，'\\n' 換行）"""
    frame = pd.DataFrame(
        np.column_stack([curve.parameters, curve.points]),
        columns=expected_header(curve.dimension),
    )
    frame.to_csv(target, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
