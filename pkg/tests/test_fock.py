from fractions import Fraction

import pytest

from wreathfock.characters import aR_minus, b_minus, character, jm_spectrum
from wreathfock.exactnum import Cyclotomic, MultiSeries
from wreathfock.fock import (
    FockVector,
    H1Vector,
    basis_vector,
    dense_matrix,
    half_vertex,
    heis_apply,
    heis_zero,
    pairing,
    phi,
    phi_inverse,
    shift,
    star,
    t_var,
    vertex_V0,
    vertex_composite_eigen,
)
from wreathfock.partitions import enumerate_multipartitions, z_mu


def vac(r, charge=None):
    return FockVector.vacuum(r, charge)


def test_creation_on_vacuum():
    for r in (1, 2, 3):
        for i in range(r):
            lam = tuple((1,) if j == i else () for j in range(r))
            assert heis_apply(-1, H1Vector.diamond(r, i), vac(r)) == FockVector.basis(lam)


def test_commutator_on_vacuum():
    d = H1Vector.diamond(2, 0)
    v = vac(2)
    lhs = heis_apply(1, d, heis_apply(-1, d, v)) - heis_apply(-1, d, heis_apply(1, d, v))
    assert lhs == v


def test_p_minus_two_signs():
    v = heis_apply(-2, H1Vector.diamond(1, 0), vac(1))
    assert v == FockVector((0,), {((2,),): 1, ((1, 1),): -1})


def test_zero_mode():
    v = FockVector.basis(((1,), ()))
    assert heis_zero(H1Vector.diamond(2, 1), v).is_zero()
    w = shift((0, 1), v)
    assert heis_zero(H1Vector.diamond(2, 1), w) == w
    u = FockVector.basis(((1,), ()), (2, -5))
    assert heis_zero(H1Vector.rt(2), u) == u * -3


def test_shift():
    v = FockVector.basis(((2,), (1,)), (1, 0))
    assert shift((0, 0), v) == v
    assert shift((1, 2), shift((-3, 1), v)) == shift((-2, 3), v)
    assert heis_zero(H1Vector.diamond(3, 2), shift((0, 0, 1), vac(3))) == shift((0, 0, 1), vac(3))


def test_star():
    assert star(FockVector.basis(((1,),)), FockVector.basis(((1,),))) == FockVector.basis(((1,),))
    lam = ((2,), ())
    assert star(FockVector.basis(lam), FockVector.basis(lam)) == FockVector.basis(lam) * 8
    assert star(FockVector.basis(lam), FockVector.basis(((), (2,)))).is_zero()


def test_phi_on_fixed_points_and_power_sums():
    for lam in enumerate_multipartitions(2, 2):
        assert phi(FockVector.basis(lam)) == character(lam)
        assert phi(basis_vector("p_la", lam)) == aR_minus(lam)
        assert phi(basis_vector("qT_la", lam)) == b_minus(lam)
        assert phi_inverse(character(lam)) == FockVector.basis(lam)


def test_phi_of_zero_needs_degree():
    with pytest.raises(ValueError):
        phi(FockVector((0, 0)))
    assert phi(FockVector((0, 0)), 2).is_zero()


def test_empty_power_sum_is_vacuum():
    assert basis_vector("p_la", ((), (), ())) == vac(3)


def test_twisted_power_sum_pairing():
    # <a_{-m}(c^i) ..., a_{-n}(c^j) ...> pairs color i with color -i, weight r*m per part
    r, n = 3, 2
    labels = enumerate_multipartitions(n, r)
    for lam in labels:
        u = basis_vector("p'_la", lam)
        for mu in labels:
            v = basis_vector("p'_la", mu)
            dual = tuple(lam[(-i) % r] for i in range(r))
            expected = 0
            if mu == dual:
                expected = Fraction(r ** sum(len(c) for c in lam))
                for comp in lam:
                    expected *= z_mu(comp)
            assert pairing(u, v) == Cyclotomic.rational(r, expected)


def test_annihilators_are_adjoint_to_creators():
    for r in (1, 2):
        for alpha in [H1Vector.diamond(r, 0), H1Vector.sigma(r, r), H1Vector.rt(r)]:
            for m in (1, 2):
                for n in range(m, 5):
                    up = dense_matrix(-m, alpha, n - m)
                    down = dense_matrix(m, alpha, n)
                    assert down == [list(col) for col in zip(*up)]


def test_half_vertex_first_order():
    r = 2
    out = half_vertex("-", 1, vac(r), trunc=2, max_mode=2)
    name = t_var("t", 1, 1)
    lam = ((), (1,))
    coeff = out[lam]
    assert coeff.coeff({name: 1}) == 1
    assert out[((), (2,))].coeff({t_var("t", 1, 2): 1}) == Fraction(1, 2)


def test_half_vertex_adjointness():
    # <[mu], Gamma_-(t) [lam]> = <Gamma_+(t) [mu], [lam]> coefficientwise
    i, trunc = 0, 3
    variables = [t_var("t", i, m) for m in (1, 2, 3)]
    for n in range(3):
        for lam in enumerate_multipartitions(n, 1):
            minus = half_vertex("-", i, FockVector.basis(lam), trunc, 3, variables=variables)
            for mu, series in minus.items():
                plus = half_vertex("+", i, FockVector.basis(mu), trunc, 3, variables=variables)
                assert plus.get(lam, MultiSeries(variables, {}, trunc)) == series


def test_vertex_on_vacuum_and_single_box():
    assert vertex_V0(0, vac(1)) == {((),): {0: Fraction(1)}}
    assert vertex_composite_eigen(0, ((1,),), 5) == jm_spectrum(0, 1, 1, 5)[((1,),)]


def test_vertex_composite_two_colors():
    expected = jm_spectrum(1, 2, 3, 6)
    for lam, s in expected.items():
        assert vertex_composite_eigen(1, lam, 6) == s


def test_fock_json_round_trip():
    v = basis_vector("p'_la", ((1,), (1,), ()))
    assert FockVector.from_json(v.to_json()) == v
