import random
from fractions import Fraction

import pytest

from wreathfock.characters import (
    CharacterTable,
    a_minus,
    character,
    convolve_fast,
    graded_constants,
    hermitian_pairing,
    jm_spectrum,
    pairing,
    sym_char,
    wreath_char_table,
)
from wreathfock.exactnum import Cyclotomic, LaurentSeries
from wreathfock.partitions import degree, enumerate_multipartitions, identity_type, mp_hook_product
from wreathfock.wreath import ClassFunction, convolve_bruteforce, group_order


def test_symmetric_group_examples():
    for mu in [(3,), (2, 1), (1, 1, 1)]:
        assert sym_char((3,), mu) == 1
    assert sym_char((1, 1), (2,)) == -1
    assert sym_char((2,), (1, 1)) == 1


def test_r_one_is_symmetric_group():
    t = wreath_char_table(1, 4)
    for lam in t.labels:
        for rho in t.labels:
            assert t[lam, rho] == Cyclotomic.rational(1, sym_char(lam[0], rho[0]))


def test_degree_example():
    assert character(((1,), (1,)))(identity_type(2, 2)) == Cyclotomic.rational(2, 2)


@pytest.mark.parametrize("r, n", [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_orthogonality_and_degrees(r, n):
    labels = enumerate_multipartitions(n, r)
    for lam in labels:
        d = character(lam)(identity_type(n, r))
        assert d == Cyclotomic.rational(r, Fraction(group_order(r, n), r**n * mp_hook_product(lam)))
        for mu in labels:
            expected = 1 if lam == mu else 0
            assert hermitian_pairing(character(lam), character(mu)) == Cyclotomic.rational(r, expected)


def test_a_minus_values():
    rho = ((2,), (1,))
    f = a_minus(rho)
    assert f(rho) == Cyclotomic.rational(2, 8)
    assert f(((1, 1, 1), ())) == Cyclotomic.rational(2, 0)
    assert ClassFunction(2, 3)(rho).is_zero()


def test_schur_idempotents():
    r, n = 2, 2
    for lam in enumerate_multipartitions(n, r):
        for mu in enumerate_multipartitions(n, r):
            prod = convolve_fast(character(lam), character(mu))
            if lam == mu:
                assert prod == character(lam) * (r**n * mp_hook_product(lam))
            else:
                assert prod.is_zero()


def test_fast_matches_bruteforce():
    rng = random.Random(11)
    r, n = 2, 2
    labels = enumerate_multipartitions(n, r)
    for _ in range(10):
        f = ClassFunction(r, n, {lam: rng.randint(-3, 3) for lam in labels})
        g = ClassFunction(r, n, {lam: Fraction(rng.randint(-3, 3), 2) for lam in labels})
        assert convolve_fast(f, g) == convolve_bruteforce(f, g)


def test_bilinear_pairing_matches_hermitian_on_characters():
    labels = enumerate_multipartitions(2, 3)
    for lam in labels:
        for mu in labels:
            assert pairing(character(lam), character(mu)) == hermitian_pairing(character(lam), character(mu))


def test_graded_constants_r2_n2():
    g = graded_constants(2, 2)
    ident = identity_type(2, 2)
    for rho in enumerate_multipartitions(2, 2):
        assert g[(ident, rho, rho)] == 1
    for (a, b, c), v in g.full.items():
        assert isinstance(v, int) and v >= 0
        if degree(c) > degree(a) + degree(b):
            assert v == 0


def test_jm_spectrum_examples():
    assert jm_spectrum(0, 1, 0, 4)[((),)].is_zero()
    assert jm_spectrum(0, 1, 1, 4)[((1,),)] == LaurentSeries.constant(1, 4).truncate(4)


def test_character_table_round_trip():
    t = wreath_char_table(3, 2)
    assert CharacterTable.from_json(t.to_json()) == t
    rows = t.to_csv_rows()
    assert len(rows) == 1 + len(t.labels)
