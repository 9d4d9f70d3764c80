"""
命令列介面單元測試
exit code：0 成功，1 驗證失敗，2 使用或輸入錯誤
"""
import json
from fractions import Fraction

import pytest

from app.cli import RunConfig, main
from app.cli.commands import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION_FAILED,
    build_coeffs_report,
    build_hankel_report,
    cmd_validate,
    parse_param,
    parse_range,
)
from app.cli.formatting import Report, format_cell, json_value
from app.core.hankel import curvature_coefficient


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    """參數解析測試"""

    def test_parse_param(self):
        assert parse_param('alpha=0.5') == ('alpha', 0.5)

    @pytest.mark.parametrize('text', ['alpha', '=1', 'alpha=x'])
    def test_parse_param_rejects(self, text):
        import argparse
        with pytest.raises(argparse.ArgumentTypeError):
            parse_param(text)

    def test_parse_range(self):
        assert parse_range('0,6.5') == (0.0, 6.5)

    def test_ladder_from_eps_alone(self):
        """測試：只給 --eps 時梯度只有一個 ε"""
        assert RunConfig(command='estimate', eps=1e-3).ladder() == [1e-3]
        assert RunConfig(command='estimate', eps=1e-2, ladder_rungs=3).ladder() == [1e-2, 5e-3, 2.5e-3]

    def test_help_and_missing_command(self, capsys):
        assert main(['--help']) == EXIT_OK
        assert main([]) == EXIT_USAGE
        capsys.readouterr()


class TestFormatting:
    """報表格式測試"""

    def test_cells(self):
        assert format_cell(Fraction(105, 4), 15) == '105/4'
        assert format_cell(True, 15) == 'true'
        assert format_cell([0.5, 0.25], 15) == '0.5 0.25'
        assert format_cell(None, 15) == ''

    def test_json_value(self):
        assert json_value(float('nan')) is None
        assert json_value([Fraction(1, 3), 2]) == ['1/3', 2]

    def test_row_length_checked(self):
        report = Report('x', ['a', 'b'])
        with pytest.raises(ValueError):
            report.add_row(1)

    def test_empty_table(self):
        assert '(無資料)' in Report('x', ['a']).to_table()

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            Report('x', ['a']).render('xml')


class TestCoeffsCommand:
    """coeffs 指令測試"""

    def test_csv_output(self, capsys):
        code, out, _ = _run(capsys, 'coeffs', '--max-j', '5', '--format', 'csv')
        assert code == EXIT_OK
        lines = out.strip().split('\n')
        assert lines[0] == 'j,a_j,a_j_float'
        assert [line.split(',')[1] for line in lines[1:]] == ['20/9', '105/4', '336/25', '825/16', '1716/49']

    def test_json_schema(self, capsys):
        code, out, _ = _run(capsys, 'coeffs', '--max-j', '2', '--format', 'json')
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload['schema'] == 1
        assert payload['command'] == 'coeffs'
        assert payload['rows'][1] == {'j': 2, 'a_j': '105/4', 'a_j_float': 26.25}

    def test_max_j_zero(self, capsys):
        code, out, _ = _run(capsys, 'coeffs', '--max-j', '0')
        assert code == EXIT_OK
        assert '(無資料)' in out

    def test_negative_max_j(self, capsys):
        code, _, err = _run(capsys, 'coeffs', '--max-j', '-1')
        assert code == EXIT_USAGE
        assert '❌' in err

    def test_report_builder(self):
        assert build_coeffs_report(3).rows[2][1] == Fraction(336, 25)


class TestHankelCommand:
    """hankel 指令測試"""

    def test_default_sequence(self, capsys):
        code, out, _ = _run(capsys, 'hankel', '--n', '3', '--format', 'csv')
        assert code == EXIT_OK
        last = out.strip().split('\n')[-1].split(',')
        assert last[0] == '3'
        assert last[1] == last[2] == '4/2625'
        assert last[4] == last[5] == '4/35'
        assert last[6] == 'PASS'

    def test_all_rows_pass_for_rational_params(self):
        report = build_hankel_report(6, Fraction(1, 2), Fraction(3, 4))
        assert all(row[-1] == 'PASS' for row in report.rows)

    def test_non_positive_alpha(self, capsys):
        code, _, err = _run(capsys, 'hankel', '--alpha', '-1')
        assert code == EXIT_USAGE
        assert '❌' in err


class TestEstimateCommand:
    """estimate 指令測試"""

    def test_twisted_cubic_json(self, capsys):
        code, out, _ = _run(
            capsys, 'estimate', '--curve', 'twisted-cubic', '--t', '3', '--eps', '1e-3', '--format', 'json',
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload['curve'] == 'twisted-cubic'
        assert payload['ladder'] == [1e-3]
        rows = payload['rows']
        assert [row['i'] for row in rows] == [1, 2, 3]
        assert rows[0]['kappa'] == pytest.approx(0.0026865640, abs=5e-10)
        assert rows[0]['reliable'] is True
        assert rows[2]['kappa'] is None
        assert rows[0]['angle'] < 1e-6

    def test_multiple_t_keep_order(self, capsys):
        code, out, _ = _run(
            capsys, 'estimate', '--curve', 'helix', '--t', '2,0.5,1', '--eps', '1e-2', '--ladder', '2',
            '--format', 'json',
        )
        assert code == EXIT_OK
        rows = json.loads(out)['rows']
        assert [row['t'] for row in rows[::3]] == [2.0, 0.5, 1.0]

    def test_builtin_params(self, capsys):
        code, out, _ = _run(
            capsys, 'estimate', '--curve', 'circle', '--param', 'a=2', '--t', '0', '--format', 'json',
        )
        assert code == EXIT_OK
        assert json.loads(out)['rows'][0]['kappa'] == pytest.approx(0.5, rel=1e-6)

    def test_unknown_curve(self, capsys):
        code, _, err = _run(capsys, 'estimate', '--curve', 'no-such-curve', '--t', '1')
        assert code == EXIT_USAGE
        assert 'no-such-curve' in err

    def test_dimension_mismatch(self, capsys):
        code, _, _ = _run(capsys, 'estimate', '--curve', 'helix', '--t', '1', '--dim', '4')
        assert code == EXIT_USAGE

    def test_malformed_csv(self, capsys, tmp_path):
        path = tmp_path / 'bad.csv'
        path.write_text("t,y1,y2\n0,1,0\n1,0,1\n")
        code, _, err = _run(capsys, 'estimate', '--curve', str(path), '--t', '0.5')
        assert code == EXIT_USAGE
        assert 'line 1' in err

    def test_t_outside_samples(self, capsys, tmp_path):
        path = tmp_path / 'curve.csv'
        assert main(['generate', '--kappa', '1', '--range', '0,1', '--step', '0.01', '--out', str(path)]) == 0
        code, _, err = _run(capsys, 'estimate', '--curve', str(path), '--t', '5')
        assert code == EXIT_USAGE
        assert 't=5' in err


class TestFrenetCommand:
    """frenet 指令測試"""

    def test_helix_reference(self, capsys):
        code, out, _ = _run(capsys, 'frenet', '--curve', 'helix', '--t', '1', '--format', 'json')
        assert code == EXIT_OK
        rows = json.loads(out)['rows']
        assert rows[0]['kappa'] == pytest.approx(0.5, abs=1e-8)
        assert rows[0]['kappa_ref'] == pytest.approx(0.5, abs=1e-12)
        assert rows[0]['speed'] == pytest.approx(1.0, abs=1e-12)
        assert len(rows[0]['e']) == 3

    def test_twisted_cubic_closed_form_reference(self, capsys):
        code, out, _ = _run(capsys, 'frenet', '--curve', 'twisted-cubic', '--t', '3', '--format', 'json')
        assert code == EXIT_OK
        rows = json.loads(out)['rows']
        assert rows[1]['kappa'] == pytest.approx(rows[1]['kappa_ref'], abs=1e-9)


class TestGenerateCommand:
    """generate 指令測試"""

    def test_writes_csv(self, tmp_path):
        path = tmp_path / 'circle.csv'
        code = main(['generate', '--kappa', '1', '--range', '0,1', '--step', '0.1', '--out', str(path)])
        assert code == EXIT_OK
        lines = path.read_text().strip().split('\n')
        assert lines[0] == 't,x1,x2'
        assert len(lines) == 12

    def test_stdout(self, capsys):
        code, out, _ = _run(capsys, 'generate', '--kappa', '0.5,0.5', '--range', '0,1', '--step', '0.5')
        assert code == EXIT_OK
        assert out.startswith('t,x1,x2,x3\n')

    def test_non_positive_curvature(self, capsys):
        code, _, err = _run(capsys, 'generate', '--kappa', '0.5,0', '--range', '0,1')
        assert code == EXIT_USAGE
        assert 'κ_2' in err


@pytest.mark.integration
class TestValidateCommand:
    """validate 指令測試"""

    def test_fast_suite_passes(self, capsys):
        code, out, _ = _run(capsys, 'validate', '--fast')
        assert code == EXIT_OK
        assert '⏭️' in out
        assert '❌' not in out

    def test_wrong_coefficient_fails(self, capsys):
        """測試：a_2 被改錯時驗證失敗，exit code 1"""
        def broken(j):
            return Fraction(26) if j == 2 else curvature_coefficient(j)

        code = cmd_validate(RunConfig(command='validate', fast=True), coefficient_fn=broken)
        assert code == EXIT_VALIDATION_FAILED
        assert 'a_2' in capsys.readouterr().out
