import json

import pandas as pd
import pytest

from src.cli import main
from src.treeenum import parse_tree_dump


def test_enum(capsys):
    assert main(['--quiet', 'enum', '--n', '6']) == 0
    assert capsys.readouterr().out == "6 6\n"


def test_enum_dump(tmp_path):
    dump = tmp_path / "trees.txt"
    assert main(['enum', '--n', '7', '--dump', str(dump), '--quiet']) == 0
    lines = dump.read_text(encoding='utf-8').splitlines()
    assert len(lines) == 11
    assert all(parse_tree_dump(line).n == 7 for line in lines)


def test_invariants_csv(tmp_path):
    out = tmp_path / "n4.csv"
    assert main(['invariants', '--n', '4', '--out', str(out), '--format', 'csv', '--quiet']) == 0
    df = pd.read_csv(out)
    assert len(df) == 2
    assert sorted(df['c2']) == [9, 10]
    assert list(df.columns[:3]) == ['n', 'tree_id', 'level_sequence']


def test_invariants_json(tmp_path):
    out = tmp_path / "n5.json"
    assert main(['--format', 'json', 'invariants', '--n', '5', '--out', str(out)]) == 0
    rows = json.loads(out.read_text(encoding='utf-8'))
    assert len(rows) == 3
    assert all(row['c1'] == '8' for row in rows)


def test_verify_order(capsys):
    assert main(['verify', 'order', '--n', '6', '--slack', '1e-9', '--quiet']) == 0
    report = json.loads(capsys.readouterr().out)
    assert report['check'] == 'order'
    assert report['status'] == 'pass'


def test_verify_order_violation_exit_code(capsys):
    assert main(['verify', 'order', '--n', '4', '--slack', '-1', '--quiet']) == 1
    assert json.loads(capsys.readouterr().out)['status'] == 'fail'


def test_verify_identities_with_global_flags_after_command(capsys):
    assert main(['verify', 'identities', '--n-max', '7', '--jobs', '1', '--quiet']) == 0
    assert json.loads(capsys.readouterr().out)['cases_checked'] == 1 + 1 + 1 + 2 + 3 + 6 + 11


def test_verify_lemmas_csv(capsys):
    assert main(['verify', 'lemmas', '--n-max', '4', '--samples', '5', '--format', 'csv', '--quiet']) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith('check,status,cases_checked')


def test_hunt_lee(capsys):
    assert main(['hunt', 'lee', '--n-min', '6', '--n-max', '7', '--quiet']) == 0
    report = json.loads(capsys.readouterr().out)
    assert report['status'] == 'pass'


def test_probe_closure(capsys):
    assert main(['probe', 'closure', '--mu', '4,1,1', '--steps', '20', '--quiet']) == 0
    assert json.loads(capsys.readouterr().out)['check'] == 'closure'


def test_prufer(capsys):
    assert main(['prufer', '--n', '5', '--quiet']) == 0
    assert capsys.readouterr().out == "5 3\n"


@pytest.mark.parametrize('argv', [
    ['enum', '--n', '0'],
    ['invariants', '--n', '30'],
    ['probe', 'closure', '--mu', '1,1,2,2'],
    ['prufer', '--n', '12'],
])
def test_input_errors_exit_two(argv):
    assert main(argv + ['--quiet']) == 2


def test_usage_error():
    with pytest.raises(SystemExit) as excinfo:
        main(['verify'])
    assert excinfo.value.code == 2
