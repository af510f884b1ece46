import math

import pytest

from src.errors import EigenvalueOverflow, InvalidOrder, NegativeEigenvalue
from src.graph import Graph, cycle_graph, path_graph, star_graph
from src.invariants import (
    compute_invariants,
    incidence_energy,
    lee,
    lee_path_closed_form,
    lee_star_closed_form,
    lel,
    lel_path_closed_form,
    lel_star_closed_form,
)
from src.spectra import Spectrum, laplacian_spectrum, signless_laplacian_spectrum
from src.treeenum import all_free_trees


def test_lel_of_small_trees():
    assert lel(laplacian_spectrum(path_graph(4))) == pytest.approx(4.02734, abs=1e-5)
    assert lel(laplacian_spectrum(star_graph(4))) == pytest.approx(4.0, abs=1e-12)
    assert lel(laplacian_spectrum(path_graph(2))) == pytest.approx(math.sqrt(2))
    assert lel(laplacian_spectrum(Graph(1))) == 0.0


def test_lee_of_six_vertex_extremes():
    assert lee(laplacian_spectrum(star_graph(6))) == pytest.approx(415.30, abs=0.01)
    assert lee(laplacian_spectrum(path_graph(6))) == pytest.approx(74.27, abs=0.01)


@pytest.mark.parametrize('n', range(2, 33))
def test_closed_forms_match_numeric(n):
    s_star = laplacian_spectrum(star_graph(n))
    s_path = laplacian_spectrum(path_graph(n))
    assert lee(s_star) == pytest.approx(lee_star_closed_form(n), rel=1e-10)
    assert lee(s_path) == pytest.approx(lee_path_closed_form(n), rel=1e-10)
    assert lel(s_star) == pytest.approx(lel_star_closed_form(n), rel=1e-10)
    assert lel(s_path) == pytest.approx(lel_path_closed_form(n), rel=1e-10)


def test_star_beats_path_on_lee_from_five_vertices():
    assert lee_star_closed_form(5) == pytest.approx(157.57, abs=0.01)
    assert lee_path_closed_form(5) == pytest.approx(57.42, abs=0.01)
    for n in range(5, 16):
        assert lee_star_closed_form(n) > lee_path_closed_form(n)


def test_incidence_energy_of_triangle():
    c3 = cycle_graph(3)
    assert incidence_energy(c3) == pytest.approx(4.0)
    assert lel(laplacian_spectrum(c3)) == pytest.approx(2 * math.sqrt(3))


def test_incidence_energy_equals_lel_on_trees():
    for g in (path_graph(7), star_graph(7)):
        assert incidence_energy(g) == pytest.approx(lel(laplacian_spectrum(g)), abs=1e-9)


def test_lel_orders_star_below_path():
    for n in range(4, 21):
        assert lel(laplacian_spectrum(star_graph(n))) < lel(laplacian_spectrum(path_graph(n)))


def test_lee_orders_path_below_star():
    for n in range(6, 21):
        assert lee(laplacian_spectrum(path_graph(n))) < lee(laplacian_spectrum(star_graph(n)))


@pytest.mark.parametrize('n', range(1, 11))
def test_incidence_energy_equals_lel_on_every_tree(n):
    for t in all_free_trees(n):
        assert incidence_energy(t) == pytest.approx(lel(laplacian_spectrum(t)), abs=1e-8)


def test_lee_overflow_is_reported():
    with pytest.raises(EigenvalueOverflow):
        lee(Spectrum((800.0, 0.0), tol=0.0))


def test_negative_eigenvalue_is_reported():
    with pytest.raises(NegativeEigenvalue):
        lel(Spectrum((1.0, -0.5), tol=0.0))


def test_lel_needs_laplacian_spectrum():
    with pytest.raises(ValueError):
        lel(signless_laplacian_spectrum(path_graph(3)))


def test_compute_invariants():
    rec = compute_invariants(path_graph(4))
    assert (rec.n, rec.m, rec.wiener) == (4, 3, 10)
    assert rec.lel == pytest.approx(rec.ie, abs=1e-9)
    assert compute_invariants(Graph(3, [(0, 1)])).wiener is None


@pytest.mark.parametrize('fn', [lee_star_closed_form, lee_path_closed_form,
                                lel_star_closed_form, lel_path_closed_form])
def test_closed_form_preconditions(fn):
    with pytest.raises(InvalidOrder):
        fn(1)
