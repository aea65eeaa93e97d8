import json
import math

import pytest

from mocktheta import cli, qseries


def run(capsys, *argv: str):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out.splitlines()


def records(lines):
    return [json.loads(line) for line in lines if line.startswith('{')]


def value(record) -> complex:
    return complex(float(record['value_re']), float(record['value_im']))


def test_eval_at_roots(capsys) -> None:
    code, lines = run(capsys, 'eval', '--series', 'phi', '--root', '0/1')
    assert code == 0
    [record] = records(lines)
    assert record['value_re'] == '2'
    assert record['value_im'] == '0'
    assert record['status'] == 'OK'
    assert record['inputs'] == {'series': 'PHI', 'root': '0/1'}

    code, lines = run(capsys, 'eval', '--series', 'psi', '--root', '1/4')
    assert code == 0
    assert value(records(lines)[0]) == 1j

    code, lines = run(capsys, 'eval', '--series', 'psi', '--root', '-1/4')
    assert value(records(lines)[0]) == -1j


def test_eval_forms_agree(capsys) -> None:
    _, eulerian = run(capsys, 'eval', '--series', 'phi', '--alpha', '1.0', '--form', 'eulerian')
    _, sumform = run(capsys, 'eval', '--series', 'phi', '--alpha', '1.0', '--form', 'sumform')
    assert abs(value(records(eulerian)[0]) - value(records(sumform)[0])) < 1e-9


def test_eval_complex_alpha(capsys) -> None:
    code, lines = run(capsys, 'eval', '--series', 'G', '--alpha', '0.5-1.2i', '--tol', '1e-12')
    assert code == 0
    [record] = records(lines)
    assert record['inputs']['tol'] == '1e-12'
    p = qseries.AlphaPoint(0.5 - 1.2j)
    assert abs(value(record) - qseries.eval_G(p)) < 1e-10


def test_domain_errors(capsys) -> None:
    code, lines = run(capsys, 'eval', '--series', 'F', '--alpha', '1')
    assert code == 2
    [record] = records(lines)
    assert record['status'] == 'DOMAIN_ERROR'
    assert record['value_re'] is None

    code, lines = run(capsys, 'eval', '--series', 'G', '--root', '1/4')
    assert code == 2
    code, lines = run(capsys, 'expand', '--series', 'psi', '--root', '1/3', '--order', '2')
    assert code == 2
    assert records(lines)[0]['status'] == 'DOMAIN_ERROR'


def test_nonconvergence(capsys, monkeypatch) -> None:
    monkeypatch.setattr(qseries, 'TERM_CAP', 5)
    code, lines = run(capsys, 'eval', '--series', 'phi', '--alpha', '0.01')
    assert code == 3
    assert records(lines)[0]['status'] == 'NONCONVERGENT'


@pytest.mark.parametrize('argv', [
    ['eval', '--series', 'phi'],
    ['eval', '--series', 'chi', '--root', '0/1'],
    ['eval', '--series', 'phi', '--root', '1/0'],
    ['coeffs', '--kind', 'a', '--n-max', '17'],
    ['coeffs', '--kind', 'aA', '--n-max', '2'],
    ['verify', '--suite', 'nonsense'],
    ['expand', '--series', 'phi', '--order', '2'],
    ['expand', '--series', 'phi', '--asymptotic', '--order', '2'],
    [],
])
def test_usage_errors(capsys, argv) -> None:
    with pytest.raises(SystemExit) as raised:
        cli.main(argv)
    assert raised.value.code == 1
    assert capsys.readouterr().out == ''


def test_coeffs(capsys) -> None:
    code, lines = run(capsys, 'coeffs', '--kind', 'a', '--n-max', '1')
    assert code == 0
    rows = records(lines)
    assert [row['exact'] for row in rows] == ['2', '-2']
    assert [row['value_re'] for row in rows] == ['2', '-2']

    _, lines = run(capsys, 'coeffs', '--kind', 'b', '--n-max', '0')
    [row] = records(lines)
    assert value(row) == 1

    _, lines = run(capsys, 'coeffs', '--kind', 'aA', '--A', '-5/1', '--n-max', '2')
    rows = records(lines)
    assert rows[2]['inputs'] == {'kind': 'aA', 'n': '2', 'A': '-5'}
    assert rows[2]['exact'] == '(-10)*pi^2'
    assert abs(value(rows[2]) + 10 * math.pi ** 2) < 1e-12


def test_coeffs_csv(capsys) -> None:
    code, lines = run(capsys, '--format', 'csv', 'coeffs', '--kind', 'c', '--n-max', '2')
    assert code == 0
    assert lines[0] == 'command,inputs,value_re,value_im,exact,error_estimate,status'
    assert len(lines) == 4
    assert lines[1].startswith('coeffs,kind=c;n=0,1,0,1,')


def test_verify_passes(capsys) -> None:
    code, lines = run(capsys, 'verify', '--suite', 'euler', '--n-max', '6')
    assert code == 0
    assert lines[-1].startswith('PASS ')
    passed, total = lines[-1].split()[1].split('/')
    assert passed == total == str(len(records(lines)))
    assert all(row['status'] == 'OK' for row in records(lines))

    code, lines = run(capsys, 'verify', '--suite', 'special-values')
    assert code == 0
    assert lines[-1] == 'PASS 5/5'


def test_verify_reflection(capsys) -> None:
    code, lines = run(capsys, 'verify', '--suite', 'remark22', '--samples', '3')
    assert code == 0
    rows = records(lines)
    assert any(row['inputs'].get('alpha') == str(complex(math.pi)) for row in rows)


def test_verify_failure(capsys, monkeypatch) -> None:
    def broken():
        return [cli.verify.Check('broken', 'always fails', 1.0, '< 0.5', False)]

    monkeypatch.setitem(cli.verify.SUITES, 'special-values', broken)
    code, lines = run(capsys, 'verify', '--suite', 'special-values')
    assert code == 4
    assert records(lines)[0]['status'] == 'FAILED'
    assert lines[-1] == 'FAIL 0/1'


def test_verify_deterministic(capsys) -> None:
    _, first = run(capsys, 'verify', '--suite', 'dual-forms', '--samples', '5', '--seed', '3')
    _, second = run(capsys, 'verify', '--suite', 'dual-forms', '--samples', '5', '--seed', '3')
    assert first == second
    assert first[-1] == 'PASS 10/10'


def test_expand_radial(capsys) -> None:
    code, lines = run(capsys, 'expand', '--series', 'phi', '--root', '0/1', '--order', '3')
    assert code == 0
    rows = records(lines)
    assert [row['exact'] for row in rows] == ['2', '-2', '7', '-127/3']
    assert abs(value(rows[3]) + 127 / 3) < 1e-9

    _, lines = run(capsys, 'expand', '--series', 'psi', '--root', '1/4', '--order', '0')
    [row] = records(lines)
    assert abs(value(row) - 1j) < 1e-12
    assert row['exact'] is None


def test_expand_asymptotic(capsys) -> None:
    code, lines = run(capsys, 'expand', '--series', 'phi', '--asymptotic', '--k-range', '100:102', '--order', '1',
                      '--compare')
    assert code == 0
    rows = records(lines)
    assert len(rows) == 4
    assert [row['inputs']['m'] for row in rows[:3]] == ['201', '203', '205']
    assert all(float(row['error_estimate']) > 0 for row in rows[:3])
    assert rows[3]['inputs']['fit'] == 'decay exponent'
    assert math.isfinite(float(rows[3]['value_re']))


def test_debug_logging(capsys) -> None:
    code = cli.main(['--debug', 'eval', '--series', 'phi', '--root', '1/3'])
    assert code == 0
    err = capsys.readouterr().err
    assert err == '' or 'mocktheta' in err
