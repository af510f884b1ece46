import numpy as np
import pytest
import sympy

from src.charpoly import (
    characteristic_coefficients,
    coefficients_from_spectrum,
    laplacian_coefficients,
    spanning_tree_count,
    verify_coefficient_identities,
    verify_graph_coefficient_identities,
)
from src.errors import NotATree
from src.graph import Graph, cycle_graph, laplacian_matrix, path_graph, star_graph
from src.treeenum import all_free_trees


@pytest.mark.parametrize('g, expected', [
    (path_graph(3), (1, 4, 3, 0)),
    (star_graph(4), (1, 6, 9, 4, 0)),
    (path_graph(4), (1, 6, 10, 4, 0)),
    (path_graph(2), (1, 2, 0)),
    (Graph(1), (1, 0)),
])
def test_laplacian_coefficients(g, expected):
    coeffs = laplacian_coefficients(g)
    assert coeffs.c == expected
    assert coeffs.n == g.n
    assert len(coeffs) == g.n + 1


def _sympy_coefficients(M):
    lam = sympy.Symbol('lam')
    poly = sympy.Matrix(M.tolist()).charpoly(lam).all_coeffs()
    return tuple(int((-1) ** k * p) for k, p in enumerate(poly))


@pytest.mark.parametrize('g', [
    cycle_graph(5),
    Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]),
    Graph(5, [(0, 1), (2, 3)]),
    star_graph(7),
])
def test_matches_sympy(g):
    assert laplacian_coefficients(g).c == _sympy_coefficients(laplacian_matrix(g))


def test_non_symmetric_integer_matrix():
    M = np.array([[2, 1, 0], [3, -1, 4], [0, 5, 1]])
    assert characteristic_coefficients(M).c == _sympy_coefficients(M)


def test_non_square_matrix():
    with pytest.raises(ValueError):
        characteristic_coefficients(np.zeros((2, 3), dtype=int))


def test_coefficients_are_python_ints():
    coeffs = laplacian_coefficients(star_graph(20))
    assert all(type(v) is int for v in coeffs.c)
    assert coeffs.as_strings()[1] == "38"
    assert coeffs.column_names[:3] == ['c0', 'c1', 'c2']


@pytest.mark.parametrize('g, tau', [
    (cycle_graph(4), 4),
    (cycle_graph(3), 3),
    (path_graph(6), 1),
    (Graph(1), 1),
    (Graph(3, [(0, 1)]), 0),
    (Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), 16),
])
def test_spanning_tree_count(g, tau):
    assert spanning_tree_count(g) == tau


def test_graph_identities_on_cycles():
    report = verify_graph_coefficient_identities(cycle_graph(4))
    assert report.passed
    assert report.coeffs[3] == 16
    report = verify_graph_coefficient_identities(cycle_graph(3))
    assert report.passed
    assert report.coeffs[2] == 9
    assert 'c(n-2)=W' not in [chk.name for chk in report.checks]


def test_graph_identities_on_disconnected_graph():
    report = verify_graph_coefficient_identities(Graph(4, [(0, 1), (2, 3)]))
    assert report.passed
    assert report.coeffs[3] == 0


def test_tree_identities():
    report = verify_coefficient_identities(path_graph(4))
    assert report.passed
    assert report.failures() == []
    assert {chk.name for chk in report.checks} == {'c0=1', 'c1=2m', 'c(n-1)=n*tau', 'c(n)=0', 'c(n-2)=W'}


def test_tree_identities_reject_non_trees():
    with pytest.raises(NotATree):
        verify_coefficient_identities(cycle_graph(4))
    with pytest.raises(NotATree):
        verify_coefficient_identities(Graph(4, [(0, 1), (2, 3), (1, 2), (0, 2)]))


@pytest.mark.parametrize('n', range(1, 9))
def test_identities_hold_on_all_small_trees(n):
    for t in all_free_trees(n):
        assert verify_coefficient_identities(t).passed


def test_coefficients_from_spectrum():
    assert coefficients_from_spectrum([4.0, 1.0, 1.0, 0.0]) == pytest.approx([1, 6, 9, 4, 0], abs=1e-12)
