import json
import math

import numpy as np
import pandas as pd
import pytest

from src.report import CheckReport, dumps_json, frame_to_text, report_to_text


def test_floats_keep_seventeen_digits():
    text = dumps_json({'x': 0.1, 'y': 2 / 3})
    assert '"x": 0.10000000000000001' in text
    assert '"y": 0.66666666666666663' in text
    assert json.loads(text) == {'x': 0.1, 'y': 2 / 3}


def test_integral_floats_stay_floats():
    text = dumps_json({'a': 1.0, 'b': 1, 'c': 1e22, 'd': 1e-9})
    assert '"a": 1.0' in text
    assert '"b": 1,' in text
    loaded = json.loads(text)
    assert isinstance(loaded['a'], float)
    assert isinstance(loaded['b'], int)
    assert loaded['c'] == 1e22
    assert loaded['d'] == 1e-9


def test_numpy_scalars_and_arrays():
    payload = {'f': np.float64(0.1), 'i': np.int64(3), 'ok': np.bool_(True),
               'v': np.array([0.5, 1.0]), 'nested': [(np.float32(0.25), 2)]}
    loaded = json.loads(dumps_json(payload))
    assert loaded == {'f': 0.1, 'i': 3, 'ok': True, 'v': [0.5, 1.0], 'nested': [[0.25, 2]]}


def test_non_finite_values():
    text = dumps_json({'nan': float('nan'), 'inf': math.inf, 'ninf': -math.inf})
    assert '"nan": NaN' in text
    assert '"inf": Infinity' in text
    assert '"ninf": -Infinity' in text


def test_strings_that_look_like_tokens_are_left_alone():
    assert json.loads(dumps_json({'s': 'f:0.5'})) == {'s': 'f:0.5'}


def test_keys_are_sorted_and_output_is_stable():
    a = dumps_json({'b': 0.3, 'a': [0.1, 0.2]})
    b = dumps_json({'a': [0.1, 0.2], 'b': 0.3})
    assert a == b
    assert a.index('"a"') < a.index('"b"')
    assert a.endswith("\n")


def test_unknown_objects_are_refused():
    with pytest.raises(TypeError):
        dumps_json({'x': object()})


def test_report_round_trip():
    report = CheckReport('order', params={'n': 6, 'slack': 1e-9}, cases_checked=3)
    report.observations.append({'min_gap': 0.1 + 0.2})
    loaded = json.loads(report_to_text(report, 'json'))
    assert loaded['status'] == 'pass'
    assert loaded['observations'][0]['min_gap'] == 0.1 + 0.2
    assert loaded['params']['slack'] == 1e-9


def test_csv_and_json_carry_the_same_floats():
    df = pd.DataFrame({'tree_id': ['a', 'b'], 'lel': [4.027339492125848, 2 / 3]})
    csv_text = frame_to_text(df, 'csv')
    records = json.loads(frame_to_text(df, 'json'))
    for line, rec in zip(csv_text.splitlines()[1:], records):
        assert float(line.split(',')[1]) == rec['lel']


def test_unknown_format():
    with pytest.raises(ValueError):
        frame_to_text(pd.DataFrame(), 'xml')  # type: ignore[arg-type]
    with pytest.raises(ValueError):
        report_to_text(CheckReport('x'), 'xml')  # type: ignore[arg-type]
