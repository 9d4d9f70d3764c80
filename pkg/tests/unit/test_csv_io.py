"""
曲線 CSV 讀寫單元測試
"""
import io

import numpy as np
import pytest

from app.core.errors import CsvFormatError
from app.core.frenet import SampledCurve, read_sampled_curve, write_sampled_curve
from app.core.frenet.io import expected_header


def _read(text: str) -> SampledCurve:
    return read_sampled_curve(io.StringIO(text))


class TestCsvIo:
    """CSV 讀寫測試"""

    def test_expected_header(self):
        assert expected_header(3) == ['t', 'x1', 'x2', 'x3']

    def test_written_file_reads_back(self, tmp_path):
        """測試：17 位有效數字寫出後可完全還原"""
        t = np.linspace(0.0, 1.0, 11)
        curve = SampledCurve(parameters=t, points=np.column_stack([np.cos(t), np.sin(t), t / 3]))
        path = tmp_path / 'helix.csv'
        write_sampled_curve(curve, path)

        assert path.read_text().splitlines()[0] == 't,x1,x2,x3'
        loaded = read_sampled_curve(path)
        assert loaded.name == 'helix'
        np.testing.assert_array_equal(loaded.parameters, curve.parameters)
        np.testing.assert_array_equal(loaded.points, curve.points)

    def test_seventeen_digits_are_bit_exact(self, tmp_path):
        """測試：任意 float64（含需要 17 位才能區分的值）讀回逐位相同"""
        rng = np.random.default_rng(7)
        t = np.cumsum(rng.uniform(1e-4, 1e-2, 400))
        points = rng.normal(scale=3.0, size=(400, 4))
        points[:, 0] = np.nextafter(points[:, 0], np.inf)
        curve = SampledCurve(parameters=t, points=points)
        path = tmp_path / 'random.csv'
        write_sampled_curve(curve, path)

        loaded = read_sampled_curve(path)
        assert loaded.parameters.tobytes() == curve.parameters.tobytes()
        assert loaded.points.tobytes() == curve.points.tobytes()

    def test_whitespace_is_tolerated(self):
        curve = _read("t, x1, x2\n0, 1, 0\n1, 0, 1\n")
        assert curve.dimension == 2
        assert len(curve) == 2

    def test_bad_header(self):
        """測試：標頭錯誤 → line 1"""
        with pytest.raises(CsvFormatError) as excinfo:
            _read("t,y1,y2\n0,1,0\n1,0,1\n")
        assert excinfo.value.line == 1

    def test_too_few_coordinates(self):
        with pytest.raises(CsvFormatError) as excinfo:
            _read("t,x1\n0,1\n1,2\n")
        assert excinfo.value.line == 1

    def test_empty_file(self):
        with pytest.raises(CsvFormatError) as excinfo:
            _read("")
        assert excinfo.value.line == 1

    def test_non_numeric_field(self):
        """測試：第二筆資料（檔案第 3 行）含非數值"""
        with pytest.raises(CsvFormatError) as excinfo:
            _read("t,x1,x2\n0,1,2\n0.1,abc,3\n0.2,1,1\n")
        assert excinfo.value.line == 3
        assert 'line 3' in str(excinfo.value)

    def test_non_finite_field(self):
        with pytest.raises(CsvFormatError) as excinfo:
            _read("t,x1,x2\n0,1,2\n0.1,inf,3\n")
        assert excinfo.value.line == 3

    def test_non_increasing_parameter(self):
        """測試：第三筆資料的 t 倒退 → line 4"""
        with pytest.raises(CsvFormatError) as excinfo:
            _read("t,x1,x2\n0,1,2\n0.2,1,1\n0.1,0,0\n")
        assert excinfo.value.line == 4

    def test_extra_field(self):
        with pytest.raises(CsvFormatError) as excinfo:
            _read("t,x1,x2\n0,1,2\n0.1,1,1,7\n")
        assert isinstance(excinfo.value.line, int)

    def test_single_sample(self):
        with pytest.raises(CsvFormatError):
            _read("t,x1,x2\n0,1,2\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            read_sampled_curve(tmp_path / 'missing.csv')


class TestSeedCurves:
    """範例曲線種子腳本測試"""

    def test_writes_requested_curves(self, tmp_path):
        from scripts.seed_curves import seed_curves

        written = seed_curves(['circle', 'unknown'], tmp_path, step=0.01)
        assert list(written) == ['circle']
        curve = read_sampled_curve(tmp_path / 'circle.csv')
        assert len(curve) == written['circle']
        np.testing.assert_allclose(np.linalg.norm(curve.points - [0.0, 1.0], axis=1), 1.0, atol=1e-7)
