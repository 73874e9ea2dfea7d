import random
from fractions import Fraction

import pytest

from wreathfock.exactnum import Cyclotomic
from wreathfock.partitions import enumerate_multipartitions
from wreathfock.wreath import (
    ClassFunction,
    GuardError,
    WreathElement,
    check_guard,
    class_sizes,
    convolve_bruteforce,
    element_type,
    elements,
    gamma_character,
    group_order,
    jm_class_function,
    jm_element,
    ga_mul,
    representative,
)


def test_identity_type():
    assert element_type(WreathElement.identity(2, 3)) == ((1, 1, 1), ())


def test_two_cycle_with_colored_product():
    x = WreathElement(2, (1, 0), (1, 0))
    assert element_type(x) == ((), (2,))


def test_two_colored_fixed_points():
    x = WreathElement(2, (1, 1), (0, 1))
    assert element_type(x) == ((), (1, 1))


def test_group_axioms_small():
    els = list(elements(2, 2))
    assert len(els) == group_order(2, 2) == 8
    e = WreathElement.identity(2, 2)
    for a in els:
        assert a * e == a == e * a
        assert a * a.inverse() == e
        for b in els:
            for c in els:
                assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("r, n", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_class_sizes_and_representatives(r, n):
    sizes = class_sizes(r, n)
    assert sum(sizes.values()) == group_order(r, n)
    for lam in enumerate_multipartitions(n, r):
        assert element_type(representative(lam)) == lam
        assert group_order(r, n) % sizes[lam] == 0


def test_type_is_conjugation_invariant():
    rng = random.Random(3)
    els = list(elements(3, 2))
    for _ in range(50):
        x, g = rng.choice(els), rng.choice(els)
        assert element_type(g * x * g.inverse()) == element_type(x)


def test_guard():
    with pytest.raises(GuardError):
        check_guard(5, 9)
    check_guard(2, 3)


def test_identity_indicator_is_unit():
    g = ClassFunction(2, 2, {((2,), ()): 3, ((), (1, 1)): Cyclotomic.rational(2, -1)})
    assert convolve_bruteforce(ClassFunction.identity_indicator(2, 2), g) == g


def test_trivial_character_squares():
    r, n = 2, 2
    triv = ClassFunction(r, n, {lam: 1 for lam in enumerate_multipartitions(n, r)})
    assert convolve_bruteforce(triv, triv) == triv * group_order(r, n)


def test_jm_vanishes_for_n_one():
    for m in (1, 2, 3):
        assert jm_class_function(2, 1, m, gamma_character(2, 0)).is_zero()


def test_jm_m_zero():
    f = jm_class_function(1, 2, 0, gamma_character(1, 0))
    assert f.values == {((1, 1),): Cyclotomic.rational(1, 2)}


def test_jm_m_one_on_transpositions():
    f = jm_class_function(1, 2, 1, gamma_character(1, 0))
    assert set(f.values) == {((2,),)}


def test_jm_elements_commute():
    r, n = 2, 3
    ms = [jm_element(r, n, j) for j in range(1, n + 1)]
    for a in ms:
        for b in ms:
            assert ga_mul(r, a, b) == ga_mul(r, b, a)


def test_class_function_json_round_trip():
    f = ClassFunction(3, 2, {((1,), (1,), ()): Cyclotomic.zeta(3), ((), (), (2,)): Fraction(1, 2)})
    assert ClassFunction.from_json(3, 2, f.to_json()) == f
