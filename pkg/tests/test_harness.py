import math

import pytest

from src.charpoly import ExactCoeffs, laplacian_coefficients
from src.errors import InvalidOrder, OrderMismatch
from src.graph import path_graph, star_graph
from src.harness import (
    Relation,
    closure_probe,
    coefficient_table,
    dominance,
    hunt_lee_violations,
    records_frame,
    verify_bipartite,
    verify_extremal,
    verify_identities,
    verify_spectral_roundtrip,
    verify_theorem1,
    verify_zhou_gutman,
)
from src.treeenum import level_sequence_to_tree


def test_coefficient_table_order_four():
    records = coefficient_table(4)
    assert len(records) == 2
    by_coeffs = {r.coeffs.c: r for r in records}
    assert set(by_coeffs) == {(1, 6, 10, 4, 0), (1, 6, 9, 4, 0)}
    assert by_coeffs[(1, 6, 10, 4, 0)].lel == pytest.approx(4.02734, abs=1e-5)
    assert by_coeffs[(1, 6, 9, 4, 0)].lel == pytest.approx(4.0)
    assert by_coeffs[(1, 6, 10, 4, 0)].wiener == 10
    assert by_coeffs[(1, 6, 9, 4, 0)].wiener == 9
    assert [r.code for r in records] == sorted(r.code for r in records)


def test_coefficient_table_order_two():
    (rec,) = coefficient_table(2)
    assert rec.coeffs.c == (1, 2, 0)
    assert rec.lel == pytest.approx(math.sqrt(2))
    assert rec.identities_passed


def test_coefficient_table_order_ten():
    records = coefficient_table(10)
    assert len(records) == 106
    assert all(r.identities_passed for r in records)
    assert len({r.tree_id for r in records}) == 106
    for r in records:
        assert r.lel == pytest.approx(r.ie, abs=1e-8)


def test_coefficient_table_is_independent_of_jobs():
    serial = [r.tree_id for r in coefficient_table(7)]
    parallel = [r.tree_id for r in coefficient_table(7, jobs=2)]
    assert serial == parallel


def test_coefficient_table_preconditions():
    with pytest.raises(InvalidOrder):
        coefficient_table(1)


def test_records_frame():
    df = records_frame(coefficient_table(4))
    assert list(df.columns) == ['n', 'tree_id', 'level_sequence', 'c0', 'c1', 'c2', 'c3', 'c4',
                                'lel', 'lee', 'ie', 'wiener']
    assert sorted(df['c2']) == ['10', '9']
    assert set(df['n']) == {4}


def test_dominance_star_path():
    s4, p4 = laplacian_coefficients(star_graph(4)), laplacian_coefficients(path_graph(4))
    verdict = dominance(s4, p4)
    assert verdict.relation is Relation.LE
    assert verdict.witness == 2
    assert dominance(p4, s4).relation is Relation.GE
    assert dominance(s4, s4).relation is Relation.EQ
    assert dominance(s4, s4).witness is None


def test_dominance_incomparable_and_mismatch():
    a = ExactCoeffs(3, (1, 4, 2, 0))
    b = ExactCoeffs(3, (1, 3, 3, 0))
    assert dominance(a, b).relation is Relation.INCOMPARABLE
    assert dominance(a, b).witness == 1
    with pytest.raises(OrderMismatch):
        dominance(a, laplacian_coefficients(path_graph(4)))


def test_chair_sits_between_star_and_path():
    chair = laplacian_coefficients(level_sequence_to_tree([0, 1, 2, 1, 1]))
    s5, p5 = laplacian_coefficients(star_graph(5)), laplacian_coefficients(path_graph(5))
    assert dominance(s5, chair).relation is Relation.LE
    assert dominance(chair, p5).relation is Relation.LE


@pytest.mark.parametrize('n', range(2, 11))
def test_extremal_bounds(n):
    report = verify_zhou_gutman(n)
    assert report.status == 'pass'
    assert report.cases_checked == sum(1 for _ in coefficient_table(n))


def test_verify_extremal_merges_orders():
    report = verify_extremal(8)
    assert report.passed
    assert report.cases_checked == 1 + 1 + 2 + 3 + 6 + 11 + 23


def test_lel_order_scan_order_four():
    report = verify_theorem1(4)
    assert report.passed
    obs = report.observations[0]
    assert obs['star_path_relation'] == 'LE'
    assert obs['star_path_gap'] == pytest.approx(0.02734, abs=1e-5)
    assert obs['min_positive_gap'] == pytest.approx(0.02734, abs=1e-5)
    assert report.cases_checked == 1


@pytest.mark.parametrize('n', range(5, 11))
def test_lel_order_scan_has_no_violations(n):
    report = verify_theorem1(n)
    assert report.violations == []
    assert report.observations[0]['star_path_gap'] > 0


def test_lel_order_scan_negative_slack_flags_pairs():
    report = verify_theorem1(4, slack=-1.0)
    assert report.status == 'fail'


def test_hunt_lee_finds_star_path():
    report = hunt_lee_violations(4, 8, full_scan_max=7)
    assert report.passed
    summary = {o['n']: o for o in report.observations if 'star_path_flagged' in o}
    for n in range(5, 9):
        assert summary[n]['star_path_flagged']
        assert summary[n]['lee_star'] > summary[n]['lee_path']
    assert summary[6]['lee_star'] == pytest.approx(415.30, abs=0.01)
    assert summary[6]['lee_path'] == pytest.approx(74.27, abs=0.01)


def test_hunt_lee_above_full_scan():
    report = hunt_lee_violations(12, 15, full_scan_max=10)
    assert report.passed
    assert report.cases_checked == 4


def test_hunt_lee_preconditions():
    with pytest.raises(ValueError):
        hunt_lee_violations(8, 6)
    with pytest.raises(InvalidOrder):
        hunt_lee_violations(1, 6)


def test_closure_probe_star_like_limit():
    report = closure_probe([4, 1, 1], steps=20)
    assert report.passed
    steps = [o for o in report.observations if 'min_gradient' in o]
    assert len(steps) == 20
    assert all(o['min_gradient'] > 0 for o in steps)
    assert steps[-1]['delta'] == pytest.approx(2.0 ** -20)
    assert 'refused' in report.observations[-1]


def test_closure_probe_symmetric_limit():
    report = closure_probe([2, 2], steps=20)
    assert report.passed
    steps = [o for o in report.observations if 'lel' in o]
    assert steps[-1]['lel'] == pytest.approx(2 * math.sqrt(2), abs=1e-9)


def test_closure_probe_without_repeat():
    report = closure_probe([3, 1])
    assert report.passed
    assert report.cases_checked == 1


def test_closure_probe_rejects_two_pairs():
    with pytest.raises(ValueError):
        closure_probe([1, 1, 2, 2])


def test_closure_probe_too_few_steps_is_not_cauchy():
    report = closure_probe([4, 1, 1], steps=3)
    assert report.status == 'fail'
    assert 'cauchy' in report.violations[-1]


def test_verify_identities():
    report = verify_identities(8)
    assert report.passed
    assert report.cases_checked == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23


@pytest.mark.slow
def test_verify_identities_up_to_sixteen():
    report = verify_identities(16, jobs=4)
    assert report.passed


@pytest.mark.slow
def test_extremal_up_to_fourteen():
    assert verify_extremal(14, jobs=4).passed


def test_verify_bipartite():
    report = verify_bipartite(8, 1e-8)
    assert report.passed
    c3 = report.observations[0]
    assert c3['ie_minus_lel'] == pytest.approx(4 - 2 * math.sqrt(3))
    assert c3['ie_minus_lel'] > 0.5


def test_verify_bipartite_through_order_ten():
    report = verify_bipartite(10, 1e-8)
    assert report.passed, report.violations[:3]


def test_verify_spectral_roundtrip():
    assert verify_spectral_roundtrip(9, 1e-8).passed


def test_report_json_shape():
    d = verify_theorem1(5).to_dict()
    assert set(d) == {'check', 'params', 'cases_checked', 'violations', 'observations', 'status'}
    assert d['status'] == 'pass'
