from itertools import product

import pytest

from wreathfock.correlators import (
    TODA_EPSILON,
    calibrate_toda,
    npoint_direct,
    npoint_reduced,
    tau_closed_form_x0,
    tau_defining_sum_first_order,
    tau_factorization_check,
    tau_truncated,
    toda_residual,
    var_name,
)
from wreathfock.exactnum import MultiSeries
from wreathfock.partitions import enumerate_multipartitions


def test_npoint_empty_is_zero():
    for ks in [(0,), (0, 1), (1, 1, 0)]:
        assert npoint_direct(((), ()), ((), ()), ks, 4).series.is_zero()
        assert npoint_reduced(((), ()), ((), ()), ks, 4).series.is_zero()


def test_npoint_single_box():
    res = npoint_direct([[1]], [[1]], [0], 4)
    assert res.series.to_string() == "1"


def test_npoint_color_mismatch_vanishes():
    for ks in [(0,), (1,), (0, 1)]:
        assert npoint_direct(((1,), ()), ((), (1,)), ks, 5).series.is_zero()
        assert npoint_reduced(((1,), ()), ((), (1,)), ks, 5).series.is_zero()


def test_reduction_r1_is_identity():
    for lam in enumerate_multipartitions(3, 1):
        for mu in enumerate_multipartitions(3, 1):
            assert npoint_direct(lam, mu, (0, 0), 5).series == npoint_reduced(lam, mu, (0, 0), 5).series


def test_reduction_r3_sample():
    for lam in enumerate_multipartitions(2, 3):
        for ks in product(range(3), repeat=2):
            assert npoint_direct(lam, lam, ks, 4).series == npoint_reduced(lam, lam, ks, 4).series


def test_npoint_validates_colors():
    with pytest.raises(ValueError):
        npoint_direct(((1,), ()), ((1,), ()), (2,), 3)


def test_tau_at_x_zero_is_closed_form():
    for charge in [(0,), (2,), (1, -1), (0, 0, 1)]:
        tau = tau_truncated(charge, 4).series
        xs = [v for v in tau.variables if v.startswith("x")]
        x0 = tau.substitute_zero(xs)
        closed = tau_closed_form_x0(range(len(charge)), 2, 4, tau.variables)
        assert x0 == closed


def test_tau_factorization_two_colors():
    ok, report = tau_factorization_check((1, 0), 4)
    assert ok, report


def test_tau_defining_sum_matches_operator_form():
    for r in (1, 2):
        d = tau_defining_sum_first_order(r, 2)
        full = tau_truncated((0,) * r, 5).series
        xi = [i for i, v in enumerate(full.variables) if v.startswith("x")]

        def weight(key):
            return sum(
                key[i] * int(v.split(",")[1].rstrip("}"))
                for i, v in enumerate(full.variables)
                if v.startswith("t")
            )

        kept = {k: c for k, c in full.terms.items() if sum(k[i] for i in xi) <= 1 and weight(k) <= 2}
        assert kept == {k: c for k, c in d.terms.items() if sum(k) <= 5}


def test_pinning_x_to_nonzero_rejected():
    with pytest.raises(ValueError):
        tau_truncated((1,), 3, x_values={var_name("x", 0, 0): 1})


def test_toda_calibration():
    assert calibrate_toda(0, 1) == (TODA_EPSILON, False)
    assert calibrate_toda(1, 2) == (TODA_EPSILON, False)


def test_toda_residual_vanishes():
    for r in (1, 2):
        for k in range(r):
            res = toda_residual(k, r, range(-2, 3))
            assert all(s.is_zero() for s in res.values())


def test_toda_negative_control():
    # the opposite sign must leave a residual, otherwise the check has no teeth
    res = toda_residual(0, 1, [0, 1], epsilon=-TODA_EPSILON)
    assert any(not s.is_zero() for s in res.values())


def test_tau_json_round_trip():
    t = tau_truncated((1, 0), 3)
    assert MultiSeries.from_json(t.to_json()["series"]) == t.series
