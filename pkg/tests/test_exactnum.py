import random
from fractions import Fraction

import pytest

from wreathfock.exactnum import (
    Cyclotomic,
    LaurentSeries,
    MultiSeries,
    cyclotomic_polynomial,
    rank,
    series_exp,
    series_invert,
    solve,
)

F = Fraction


def z(r, k=1):
    return Cyclotomic.zeta(r, k)


def one(r):
    return Cyclotomic.rational(r, 1)


def test_zeta_squared_order_four():
    assert z(4) * z(4) == Cyclotomic.rational(4, -1)


def test_zeta_cubed_order_three():
    assert z(3) * z(3, 2) == one(3)


def test_order_five_product():
    assert (one(5) + z(5)) * (one(5) + z(5, 4)) == one(5) * 2 + z(5) + z(5, 4)


@pytest.mark.parametrize("r, expected", [(1, (-1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)), (5, (1, 1, 1, 1, 1))])
def test_cyclotomic_polynomials(r, expected):
    assert cyclotomic_polynomial(r) == expected


def test_conjugation_examples():
    assert Cyclotomic.rational(4, F(3, 7)).conj() == Cyclotomic.rational(4, F(3, 7))
    assert z(4).conj() == -z(4)
    assert (one(3) + z(3)).conj() == one(3) + z(3, 2)


def _rand(rng, r):
    return Cyclotomic(r, [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(r)])


@pytest.mark.parametrize("r", range(1, 9))
def test_field_axioms(r):
    rng = random.Random(r)
    for _ in range(15):
        a, b, c = _rand(rng, r), _rand(rng, r), _rand(rng, r)
        assert (a + b) + c == a + (b + c)
        assert a * (b * c) == (a * b) * c
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == Cyclotomic.rational(r, 0)
        assert (a * b).conj() == a.conj() * b.conj()
        if a:
            assert a * a.inverse() == one(r)
            assert (b / a) * a == b


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.rational(3, 0).inverse()


def test_roots_of_unity_sum_to_zero():
    for r in range(2, 9):
        total = sum((z(r, k) for k in range(r)), Cyclotomic.rational(r, 0))
        assert total.is_zero()


def test_string_and_json_round_trip():
    a = one(5) * F(2, 3) - z(5, 2) * 4
    assert Cyclotomic.parse(5, str(a)) == a
    assert Cyclotomic.from_json(a.to_json()) == a
    assert str(Cyclotomic.rational(5, 0)) == "0"


def test_to_complex():
    assert abs(z(4).to_complex() - 1j) < 1e-12


def test_mixed_orders_with_rationals():
    assert z(3) + 1 == one(3) + z(3)
    assert 2 * z(3) == z(3) + z(3)


def test_rank_and_solve():
    m = [[F(1), F(2)], [F(2), F(4)]]
    assert rank(m) == 1
    x = solve([[F(2), F(1)], [F(1), F(3)]], [F(3), F(5)])
    assert x == [F(4, 5), F(7, 5)]
    w = z(3)
    x = solve([[one(3), w], [w, one(3)]], [one(3), Cyclotomic.rational(3, 0)])
    assert one(3) * x[0] + w * x[1] == one(3)
    assert w * x[0] + x[1] == Cyclotomic.rational(3, 0)


def _varsigma(trunc):
    return LaurentSeries.exp_linear(F(1, 2), trunc) - LaurentSeries.exp_linear(F(-1, 2), trunc)


def test_invert_monomial():
    inv = series_invert(LaurentSeries.monomial(1, 5))
    assert dict(inv.items()) == {-1: 1}


def test_invert_varsigma():
    inv = series_invert(_varsigma(8))
    assert inv.coeff(-1) == 1
    assert inv.coeff(0) == 0
    assert inv.coeff(1) == F(-1, 24)
    assert inv.coeff(3) == F(7, 5760)
    assert (inv * _varsigma(8)).agrees(LaurentSeries.constant(1, 6), 6)


def test_invert_one_minus_exp():
    f = LaurentSeries.constant(1, 6) - LaurentSeries.exp_linear(-1, 6)
    inv = series_invert(f)
    assert [inv.coeff(e) for e in (-1, 0, 1, 2, 3)] == [1, F(1, 2), F(1, 12), 0, F(-1, 720)]


def test_series_exp_examples():
    assert series_exp(LaurentSeries.zero(4)).coeff(0) == 1
    e = series_exp(LaurentSeries.monomial(1, 4))
    assert e == LaurentSeries.exp_linear(1, 4)
    e2 = series_exp(LaurentSeries({1: 1, 2: 1}, 4))
    assert [e2.coeff(k) for k in range(3)] == [1, 1, F(3, 2)]


def test_series_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(LaurentSeries.constant(1, 3))


def test_coefficient_beyond_truncation_is_unknown():
    with pytest.raises(IndexError):
        LaurentSeries.constant(1, 2).coeff(3)


def test_product_truncation_tracks_valuation():
    inv = series_invert(_varsigma(6))  # valuation -1, known through z^4
    assert inv.trunc == 4
    prod = inv * inv  # each factor's unknown z^5 term meets the other's z^-1
    assert prod.trunc == 3
    assert prod.coeff(-2) == 1


def test_laurent_json_round_trip():
    s = series_invert(_varsigma(6))
    assert LaurentSeries.from_json(s.to_json()) == s


def test_multiseries_exp_and_diff():
    vs = ("t", "s")
    t = MultiSeries.variable(vs, "t", 4)
    s = MultiSeries.variable(vs, "s", 4)
    e = (t * s).exp()
    assert e.coeff({"t": 2, "s": 2}) == F(1, 2)
    d = e.diff("t")
    assert d.coeff({"t": 1, "s": 2}) == 1
    assert MultiSeries.from_json(e.to_json()) == e


def test_multiseries_rejects_negative_exponents():
    with pytest.raises(ValueError):
        MultiSeries(("t",), {(-1,): 1}, 3)
