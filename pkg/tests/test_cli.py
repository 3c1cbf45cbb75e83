import json
from pathlib import Path

import pytest

from hyperconvex import EXIT_ERROR, EXIT_OK, main

ROOT = Path(__file__).resolve().parent.parent
SYSTEMS = ROOT / 'systems'
TABLES = ROOT / 'tables'

NON_OPEN_SEP = '(-1,1);(0,0);(0,1);(1,0);(1,1)'
RXZ_T = '((-1,0),(1,0));((1,0),(-1,0))'
RXZ_Q = '((1,0),(1,0))'


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    data = json.loads(captured.out) if captured.out.strip() else None
    error = json.loads(captured.err.strip().splitlines()[-1]) if code == EXIT_ERROR and not data else None
    return code, data, error


class TestHull:
    def test_opposite_points(self, capsys):
        code, data, _ = run(capsys, 'hull', '--hyperfield', 'S', '--points', '(+,-);(-,+)')
        assert code == EXIT_OK
        assert data['count'] == 9

    def test_oracle_agrees(self, capsys):
        _, closure, _ = run(capsys, 'hull', '--hyperfield', 'S', '--points', '(1,0);(0,1)')
        _, oracle, _ = run(capsys, 'hull', '--hyperfield', 'S', '--points', '(1,0);(0,1)', '--oracle')
        assert closure['points'] == oracle['points']
        assert closure['count'] == 3

    def test_unknown_hyperfield(self, capsys):
        code, _, error = run(capsys, 'hull', '--hyperfield', 'R', '--points', '(1)')
        assert code == EXIT_ERROR
        assert error['error'] == 'ParseError'


class TestHalfspaces:
    def test_containing(self, capsys):
        code, data, _ = run(capsys, 'halfspace', '--hyperfield', 'S', '--containing', NON_OPEN_SEP)
        assert code == EXIT_OK
        assert data['forms'] == ['X2 + 1']

    def test_point_query(self, capsys):
        _, data, _ = run(capsys, 'halfspace', '--hyperfield', 'S', '--form', 'X1 + X2', '--point', '(1,-1)',
                         '--query', 'variety')
        assert data['inside'] is True

    def test_decomposition(self, capsys):
        _, data, _ = run(capsys, 'halfspace', '--hyperfield', 'H5', '--form', 'X1 + X2', '--decomposition')
        assert data['holds'] is False

    def test_needs_form(self, capsys):
        code, _, _ = run(capsys, 'halfspace', '--hyperfield', 'S')
        assert code == EXIT_ERROR

    def test_open_separation_fails(self, capsys):
        code, _, error = run(capsys, 'separate', '--hyperfield', 'S', '--points', NON_OPEN_SEP, '--point', '(-1,0)')
        assert code == EXIT_ERROR
        assert error['error'] == 'SeparationNotFound'

    def test_closed_separation(self, capsys):
        code, data, _ = run(capsys, 'separate', '--closed', '--hyperfield', 'S', '--points', NON_OPEN_SEP,
                            '--point', '(-1,0)')
        assert code == EXIT_OK
        assert data['kind'] == 'closed'

    def test_kakutani(self, capsys):
        code, data, _ = run(capsys, 'kakutani', '--hyperfield', 'S', '--a', '(1)', '--b', '(-1)', '--d', '1')
        assert code == EXIT_OK
        assert '(1)' in data['points']
        assert '(-1)' in data['complement']


class TestCertificates:
    def test_fm_farkas_and_replay(self, capsys, tmp_path):
        out = tmp_path / 'rxz.json'
        code, data, _ = run(capsys, '--output', str(out), 'fm', str(SYSTEMS / 'rxz_sep.sys'), '--farkas')
        assert code == EXIT_OK
        assert data['certificate'] == {'certificate': 'separator', 'values': ['(-1,0)', '(-1,0)', '(1,0)']}

        code, data, _ = run(capsys, 'fm', str(SYSTEMS / 'rxz_sep.sys'), '--verify', str(out))
        assert (code, data) == (EXIT_OK, {'verified': True})

        forged = tmp_path / 'forged.json'
        forged.write_text(json.dumps({'certificate': {'certificate': 'kernel', 'values': ['(1,0)'] * 3}}))
        code, data, _ = run(capsys, 'fm', str(SYSTEMS / 'rxz_sep.sys'), '--verify', str(forged))
        assert (code, data) == (EXIT_ERROR, {'verified': False})

    def test_fm_feasible_and_eliminate(self, capsys):
        _, data, _ = run(capsys, 'fm', str(SYSTEMS / 'balanced_tr.sys'), '--feasible')
        assert data['feasible'] is True
        _, data, _ = run(capsys, 'fm', str(SYSTEMS / 'rxz_sep.sys'), '--eliminate', '1')
        assert data['eliminated'] == 1
        assert data['system'].startswith('instance QxZ\n')

    def test_member_and_replay(self, capsys, tmp_path):
        out = tmp_path / 'member.json'
        code, data, _ = run(capsys, '--output', str(out), 'member', '--hyperfield', 'QxZ', '--points', RXZ_T,
                            '--point', RXZ_Q)
        assert code == EXIT_OK
        assert data['status'] == 'not-member'
        assert data['form'] == 'X1 + X2 + (-1,0)'
        code, data, _ = run(capsys, 'member', '--hyperfield', 'QxZ', '--points', RXZ_T, '--point', RXZ_Q,
                            '--verify', str(out))
        assert (code, data) == (EXIT_OK, {'verified': True})

    def test_member_over_finite_instance(self, capsys):
        _, data, _ = run(capsys, 'member', '--hyperfield', 'S', '--points', '(1,0);(0,1)', '--point', '(1,1)')
        assert data['status'] == 'member'

    def test_missing_certificate_file(self, capsys, tmp_path):
        code, _, error = run(capsys, 'fm', str(SYSTEMS / 'rxz_sep.sys'), '--verify', str(tmp_path / 'none.json'))
        assert code == EXIT_ERROR
        assert error['error'] == 'ParseError'


class TestTablesAndSuites:
    def test_check_axioms(self, capsys):
        code, data, _ = run(capsys, 'check-axioms', str(TABLES / 'h5.hf'))
        assert code == EXIT_OK
        assert data['passed'] is True
        assert len(data['orderings']) == 2
        assert data['stringent'] is False

    def test_check_axioms_failure(self, capsys, tmp_path):
        data = json.loads((TABLES / 'sign.hf').read_text())
        data['add']['1,1'] = ['1', '-1']
        path = tmp_path / 'broken.hf'
        path.write_text(json.dumps(data))
        code, report, _ = run(capsys, 'check-axioms', str(path))
        assert code == EXIT_ERROR
        assert report['passed'] is False
        assert 'orderings' not in report

    @pytest.fixture
    def workdir(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        monkeypatch.delenv('HYPERCONVEX_SEED', raising=False)
        return tmp_path

    def test_suite(self, capsys, workdir):
        code, data, _ = run(capsys, 'suite', '--name', 'radon', '--hyperfield', 'S', '--d', '1')
        assert code == EXIT_OK
        assert data['passed'] is True
        assert 'elapsed' not in data

    def test_suite_from_config_file(self, capsys, workdir):
        config = workdir / 'suite.json'
        config.write_text(json.dumps({'hyperfield': 'TR@Q', 'd': 2, 'trials': 12, 'seed': 4}))
        code, data, _ = run(capsys, 'suite', '--name', 'farkas', '--config', str(config), '--timing')
        assert code == EXIT_OK
        assert data['instance'] == 'TR@Q'
        assert data['params']['seed'] == 4
        assert data['cases'] == 12
        assert 'elapsed' in data

    def test_suite_rejects_bad_config(self, capsys, workdir):
        code, _, error = run(capsys, 'suite', '--name', 'radon', '--trials', '0')
        assert code == EXIT_ERROR
        assert 'Invalid configuration' in error['message']

    def test_plot(self, capsys, tmp_path):
        svg = tmp_path / 'grid.svg'
        code, data, _ = run(capsys, 'plot', '--hyperfield', 'S', '--set', f'T={NON_OPEN_SEP}', '--set', 'p=(-1,0)',
                            '--hull', '--svg', str(svg))
        assert code == EXIT_OK
        assert data['sets'] == ['T', 'p', 'hull(T)']
        assert svg.exists()

    def test_plot_set_syntax(self, capsys, tmp_path):
        code, _, error = run(capsys, 'plot', '--hyperfield', 'S', '--set', '(1,0)', '--svg', str(tmp_path / 'x.svg'))
        assert code == EXIT_ERROR
        assert error['error'] == 'ParseError'
