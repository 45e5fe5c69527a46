import json

import pytest

from gatebound.cli import EXIT_BAD_INPUT, EXIT_OK, EXIT_VIOLATION, main
from gatebound.cli import app
from gatebound.cli.commands import CommandOutcome
from gatebound.utils import InvariantViolationException


def _read(path):
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def test_build_then_distance(tmp_path, capsys):
    code_path = str(tmp_path / 'toric3.code')
    report_path = str(tmp_path / 'report.json')
    assert main(['build', 'toric', '3', '-o', code_path]) == EXIT_OK
    assert main(['--report', report_path, 'distance', code_path, '--wmax', '3']) == EXIT_OK

    report = _read(report_path)
    assert report['command'] == 'distance'
    assert report['seed'] == 0
    assert report['invocation'][-1] == '3'
    assert report['result']['distance']['exact']
    assert report['result']['distance']['distance'] == 3
    assert 'distance = 3' in capsys.readouterr().out


def test_distance_lower_bound(tmp_path):
    report_path = str(tmp_path / 'report.json')
    assert main(['--report', report_path, 'distance', 'toric:4', '--wmax', '2']) == EXIT_OK
    result = _read(report_path)['result']['distance']
    assert not result['exact']
    assert result['lower_bound'] == 3


def test_clean_small_region_of_steane(tmp_path):
    report_path = str(tmp_path / 'report.json')
    assert main(['--report', report_path, 'clean', 'steane', '--region', '0,1']) == EXIT_OK
    result = _read(report_path)['result']
    assert result['region'] == [0, 1]
    assert result['cleanable']


def test_gate_level(tmp_path, capsys):
    report_path = str(tmp_path / 'report.json')
    assert main(['--report', report_path, 'gate-level', '--gates', 'CCZ@0,1,2']) == EXIT_OK
    assert _read(report_path)['result']['level']['level'] == 3
    assert 'level: 3' in capsys.readouterr().out


def test_partition_then_gate_bound(tmp_path):
    partition_path = str(tmp_path / 'partition.json')
    report_path = str(tmp_path / 'report.json')
    assert main(['partition', 'toric:12', '--scheme', 'tiling', '--tile', '6', '--widths', '1,0',
                 '-o', partition_path]) == EXIT_OK
    assert _read(partition_path)['n'] == 288
    assert main(['--report', report_path, 'gate-bound', 'toric:12', '--partition', partition_path]) == EXIT_OK
    assert _read(report_path)['result']['bound'] == 2


def test_gate_bound_rejects_a_partition_of_another_code(tmp_path):
    partition_path = str(tmp_path / 'partition.json')
    assert main(['partition', 'toric:4', '--scheme', 'tubes', '-o', partition_path]) == EXIT_OK
    assert main(['gate-bound', 'toric:3', '--partition', partition_path]) == EXIT_BAD_INPUT


def test_verify_hierarchy_suite(tmp_path):
    report_path = str(tmp_path / 'report.json')
    assert main(['--report', report_path, 'verify', '--suite', 'hierarchy', '--samples', '20']) == EXIT_OK
    result = _read(report_path)['result']
    assert result['passed']
    assert [case['name'] for case in result['cases']] == ['appendixA:standard-levels', 'appendixA:definitions']


def test_region_parse_error_exits_with_one(capsys):
    assert main(['clean', 'steane', '--region', '0..x']) == EXIT_BAD_INPUT
    assert 'position 0' in capsys.readouterr().err


def test_region_outside_the_code_exits_with_one():
    assert main(['clean', 'steane', '--region', '0,7']) == EXIT_BAD_INPUT


def test_missing_file_exits_with_one(tmp_path):
    assert main(['threshold', str(tmp_path / 'missing.json')]) == EXIT_BAD_INPUT


def test_unknown_code_exits_with_one():
    assert main(['distance', 'no-such-family:3']) == EXIT_BAD_INPUT


def test_usage_errors_exit_with_one():
    with pytest.raises(SystemExit) as ex:
        main(['verify', '--suite', 'no-such-suite'])
    assert ex.value.code == EXIT_BAD_INPUT


def test_invariant_violation_exits_with_two_after_the_report(tmp_path, monkeypatch):
    def failing(args):
        return CommandOutcome({'passed': False}, ['FAIL  fake'], InvariantViolationException('fake failed'))

    monkeypatch.setitem(app._COMMANDS, 'verify', failing)
    report_path = str(tmp_path / 'report.json')
    assert main(['--report', report_path, 'verify']) == EXIT_VIOLATION
    assert _read(report_path)['result'] == {'passed': False}
