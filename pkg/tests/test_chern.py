from fractions import Fraction
from itertools import product

import pytest

from wreathfock.chern import (
    H1Vector,
    c1_line_bundle,
    c_const,
    c_series,
    cartan_matrix,
    content_closed_form,
    content_series,
    eps_eigen,
    eps_eigen_shifted,
    gk_eigen,
    gk_tilde_eigen,
    hk_eigen,
    mckay_check,
    modified_chern_eigen,
    modified_chern_from_eps,
    modified_chern_from_g,
    n_coeff,
    ring_generation_check,
)
from wreathfock.exactnum import LaurentSeries
from wreathfock.partitions import enumerate_multipartitions, partitions

F = Fraction


def test_content_series_examples():
    assert content_series((), 4).is_zero()
    assert content_series((1,), 4) == LaurentSeries.constant(1, 4)
    s = content_series((2, 1), 4)
    assert [s.coeff(k) for k in range(5)] == [3, 0, 1, 0, F(1, 12)]


def test_closed_form_matches_cells():
    for n in range(7):
        for lam in partitions(n):
            for scale in (1, 2):
                assert content_closed_form(lam, 8, scale) == content_series(lam, 8, scale)


def test_eps_examples():
    assert eps_eigen(0, (0,), ((),), 5).is_zero()
    assert eps_eigen(0, (0,), ((1,),), 5) == LaurentSeries.constant(1, 5)
    s = eps_eigen(0, (1,), ((),), 4)
    assert s.coeff(-1) == 1
    assert s.coeff(0) == F(1, 2)


def test_eps_two_routes():
    for r in (1, 2, 3):
        for p in product(range(-2, 3), repeat=r):
            for n in range(4):
                for lam in enumerate_multipartitions(n, r):
                    for i in range(r):
                        assert eps_eigen(i, p, lam, 6) == eps_eigen_shifted(i, p, lam, 6)


def test_h_examples():
    assert hk_eigen(0, (0,), ((1,),), 4) == LaurentSeries.constant(1, 4)
    assert hk_eigen(1, (0, 0), ((1,), ()), 4) == LaurentSeries.exp_linear(-1, 4)


@pytest.mark.parametrize("p", [(1, 0), (2, -1), (-1, -1), (0, 3)])
def test_h_pole_is_charge_over_r(p):
    r = len(p)
    for k in range(r):
        for lam in enumerate_multipartitions(2, r):
            assert hk_eigen(k, p, lam, 3).coeff(-1) == F(sum(p), r)


def test_g_examples():
    assert gk_eigen(0, (0,), ((1,),), 4) == LaurentSeries.constant(1, 4)
    assert gk_eigen(0, (0, 0), ((), (1,)), 4) == LaurentSeries.constant(1, 4)


def test_c_vanishes_at_zero_charge():
    for r in (1, 2, 3):
        for k in range(r):
            assert c_series(k, (0,) * r, r, 6).is_zero()
            assert c_const((0,) * r, k, 3) == 0


def test_g_tilde_equals_h_sample():
    for r in (1, 2):
        for p in product(range(-1, 2), repeat=r):
            for lam in enumerate_multipartitions(3, r):
                for k in range(r):
                    assert hk_eigen(k, p, lam, 6) == gk_tilde_eigen(k, p, lam, 6)


def test_n_coefficients():
    assert [n_coeff(0, d, 1) for d in (-1, 0, 1)] == [1, F(1, 2), F(1, 12)]
    assert n_coeff(0, -1, 3) == F(1, 3)
    assert n_coeff(0, -2, 2) == 0


def test_modified_chern_examples():
    assert modified_chern_eigen(0, 0, (0,), ((),)) == 0
    assert modified_chern_eigen(0, 0, (0,), ((1,),)) == 1
    for m in (1, 2, 3):
        assert modified_chern_eigen(0, m, (0,), ((1,),)) == 0
    lam = ((1,), (1,))
    assert modified_chern_from_g(0, 0, (0, 0), lam) == modified_chern_from_eps(0, 0, (0, 0), lam)


def test_modified_chern_routes_agree_broadly():
    for r in (2, 3):
        for p in [(0,) * r, (1,) + (0,) * (r - 1), (-1,) * r]:
            for lam in enumerate_multipartitions(2, r):
                for k in range(r):
                    for m in range(-1, 3):
                        assert modified_chern_from_g(k, m, p, lam) == modified_chern_from_eps(k, m, p, lam)


def test_mckay_examples():
    r = 2
    assert H1Vector.sigma(2, 1) == c1_line_bundle(2, 1) * -2
    for r in range(2, 7):
        ok, report = mckay_check(r)
        assert ok, report
    assert cartan_matrix(3) == [[2, -1], [-1, 2]]


def test_first_chern_top_index():
    for r in range(2, 6):
        assert H1Vector.diamond(r, r - 1) == c1_line_bundle(r, r - 1) + H1Vector.t(r)


@pytest.mark.parametrize("r, n", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_ring_generation(r, n):
    ok, report = ring_generation_check(r, n)
    assert ok, report
