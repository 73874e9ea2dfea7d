"""Character theory of Gamma_n computed through power sums.

Class functions are handled in two coordinates: values on conjugacy types,
and coefficients in the monomial basis a_{-rho} (the class function equal to
Z_rho on the class rho and zero elsewhere).  Irreducible characters come
from products of Schur functions in the colored power sums.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .exactnum import Cyclotomic, LaurentSeries
from .partitions import (
    MultiPartition,
    Partition,
    centralizer_order,
    contents,
    degree,
    dual,
    enumerate_multipartitions,
    identity_type,
    make_multipartition,
    make_partition,
    mp_hook_product,
    mp_to_json,
    partitions,
    remove_strips,
    z_mu,
)
from .wreath import ClassFunction, _group_table, _inv, _mul, check_guard, representative

PowerSumPoly = dict  # MultiPartition -> Cyclotomic, coefficient of the monomial a_{-rho}


@lru_cache(maxsize=None)
def sym_char(nu: Partition, mu: Partition) -> int:
    """chi^nu at cycle type mu, by Murnaghan-Nakayama."""
    nu, mu = make_partition(nu), make_partition(mu)
    if sum(nu) != sum(mu):
        raise ValueError(f"size mismatch: |{nu}| != |{mu}|")
    if not mu:
        return 1
    m, rest = mu[0], mu[1:]
    return sum(sign * sym_char(smaller, rest) for smaller, sign in remove_strips(nu, m))


def _add_part(rho: MultiPartition, j: int, m: int) -> MultiPartition:
    comps = list(rho)
    comps[j] = tuple(sorted(comps[j] + (m,), reverse=True))
    return tuple(comps)


def _poly_mul(r: int, a: PowerSumPoly, b: PowerSumPoly) -> PowerSumPoly:
    out: dict = {}
    for ra, ca in a.items():
        for rb, cb in b.items():
            rho = tuple(tuple(sorted(x + y, reverse=True)) for x, y in zip(ra, rb))
            out[rho] = out.get(rho, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def gamma_power_sum(r: int, i: int, m: int) -> PowerSumPoly:
    """p_m(gamma_i) = (1/r) sum_j zeta^{ij} p_m(c^j)."""
    empty = ((),) * r
    return {_add_part(empty, j, m): Cyclotomic.zeta(r, i * j) / r for j in range(r)}


def schur_in_power_sums(r: int, i: int, nu: Partition) -> PowerSumPoly:
    """s_nu(gamma_i) = sum_mu chi^nu_mu / z_mu p_mu(gamma_i)."""
    out: dict = {}
    for mu in partitions(sum(nu)):
        c = Fraction(sym_char(nu, mu), z_mu(mu))
        if not c:
            continue
        term: PowerSumPoly = {((),) * r: Cyclotomic.rational(r, 1)}
        for part in mu:
            term = _poly_mul(r, term, gamma_power_sum(r, i, part))
        for k, v in term.items():
            out[k] = out.get(k, 0) + v * c
    return {k: v for k, v in out.items() if v}


def poly_to_class_function(r: int, n: int, poly: PowerSumPoly) -> ClassFunction:
    return ClassFunction(r, n, {rho: c * centralizer_order(rho) for rho, c in poly.items()})


def class_function_to_poly(f: ClassFunction) -> PowerSumPoly:
    return {rho: v / centralizer_order(rho) for rho, v in f.values.items()}


class CharacterTable:
    """Rows are irreducibles s_lambda, columns are classes, both in canonical order."""

    def __init__(self, r: int, n: int, rows: Mapping[MultiPartition, Mapping[MultiPartition, Cyclotomic]]):
        self.r, self.n = r, n
        self.labels = enumerate_multipartitions(n, r)
        self.rows = {lam: {rho: rows[lam].get(rho, Cyclotomic.rational(r, 0)) for rho in self.labels} for lam in self.labels}

    def __getitem__(self, key):
        lam, rho = key
        return self.rows[lam][rho]

    def character(self, lam: MultiPartition) -> ClassFunction:
        return ClassFunction(self.r, self.n, self.rows[lam])

    def matrix(self) -> list[list[Cyclotomic]]:
        return [[self.rows[lam][rho] for rho in self.labels] for lam in self.labels]

    def degrees(self) -> dict[MultiPartition, Cyclotomic]:
        ident = identity_type(self.n, self.r)
        return {lam: self.rows[lam][ident] for lam in self.labels}

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "labels": [mp_to_json(l) for l in self.labels],
            "matrix": [[v.to_json() for v in row] for row in self.matrix()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CharacterTable":
        r, n = int(data["r"]), int(data["n"])
        labels = [make_multipartition(l) for l in data["labels"]]
        rows = {
            lam: {rho: Cyclotomic.from_json(v) for rho, v in zip(labels, row)}
            for lam, row in zip(labels, data["matrix"])
        }
        return cls(r, n, rows)

    def __eq__(self, other):
        return isinstance(other, CharacterTable) and (self.r, self.n, self.rows) == (other.r, other.n, other.rows)

    def to_csv_rows(self) -> list[list[str]]:
        header = ["irrep\\class"] + [_mp_str(rho) for rho in self.labels]
        body = [[_mp_str(lam)] + [str(self.rows[lam][rho]) for rho in self.labels] for lam in self.labels]
        return [header] + body


def _mp_str(lam: MultiPartition) -> str:
    return "|".join(",".join(map(str, c)) for c in lam)


def schur_poly(lam: MultiPartition) -> PowerSumPoly:
    r = len(lam)
    poly: PowerSumPoly = {((),) * r: Cyclotomic.rational(r, 1)}
    for i, comp in enumerate(lam):
        poly = _poly_mul(r, poly, schur_in_power_sums(r, i, comp))
    return poly


@lru_cache(maxsize=None)
def wreath_char_table(r: int, n: int) -> CharacterTable:
    rows = {}
    for lam in enumerate_multipartitions(n, r):
        rows[lam] = poly_to_class_function(r, n, schur_poly(lam)).values
    return CharacterTable(r, n, rows)


def character(lam: MultiPartition) -> ClassFunction:
    r, n = len(lam), sum(map(sum, lam))
    return wreath_char_table(r, n).character(lam)


def a_minus(rho: MultiPartition) -> ClassFunction:
    """a_{-rho}: value Z_rho on the class rho and 0 elsewhere."""
    r, n = len(rho), sum(map(sum, rho))
    return ClassFunction(r, n, {rho: centralizer_order(rho)})


def aR_minus(lam: MultiPartition) -> ClassFunction:
    """a^R_{-lam} = prod_i prod_k a_{-k}(gamma_i)^{m_k(i)} |0>."""
    r, n = len(lam), sum(map(sum, lam))
    poly: PowerSumPoly = {((),) * r: Cyclotomic.rational(r, 1)}
    for i, comp in enumerate(lam):
        for part in comp:
            poly = _poly_mul(r, poly, gamma_power_sum(r, i, part))
    return poly_to_class_function(r, n, poly)


def b_minus(lam: MultiPartition) -> ClassFunction:
    """b_{-lam}: a_{-k}(c^0) for parts of lam^0, a_{-k}(gamma_{i-1} - gamma_i) for parts of lam^i."""
    r, n = len(lam), sum(map(sum, lam))
    poly: PowerSumPoly = {((),) * r: Cyclotomic.rational(r, 1)}
    empty = ((),) * r
    for i, comp in enumerate(lam):
        for part in comp:
            if i == 0:
                factor = {_add_part(empty, 0, part): Cyclotomic.rational(r, 1)}
            else:
                a = gamma_power_sum(r, i - 1, part)
                b = gamma_power_sum(r, i, part)
                factor = {k: a.get(k, 0) - b.get(k, 0) for k in set(a) | set(b)}
                factor = {k: v for k, v in factor.items() if v}
            poly = _poly_mul(r, poly, factor)
    return poly_to_class_function(r, n, poly)


def creation(m: int, i: int, f: ClassFunction) -> ClassFunction:
    """a_{-m}(gamma_i) f computed in the monomial basis a_{-rho}."""
    r = f.r
    out: dict = {}
    for rho, c in class_function_to_poly(f).items():
        for j in range(r):
            key = _add_part(rho, j, m)
            out[key] = out.get(key, 0) + c * Cyclotomic.zeta(r, i * j) / r
    return poly_to_class_function(r, f.n + m, {k: v for k, v in out.items() if v})


# --- pairings and the class algebra --------------------------------------------


def pairing(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    """Bilinear form: (1/|G|) sum_x f(x) g(x^{-1}); irreducibles are orthonormal."""
    f._check(g)
    acc = Cyclotomic.rational(f.r, 0)
    for rho, v in f.values.items():
        w = g.values.get(dual(rho))
        if w is not None:
            acc = acc + v * w / centralizer_order(rho)
    return acc


def hermitian_pairing(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    f._check(g)
    acc = Cyclotomic.rational(f.r, 0)
    for rho, v in f.values.items():
        w = g.values.get(rho)
        if w is not None:
            acc = acc + v * w.conj() / centralizer_order(rho)
    return acc


def schur_coordinates(f: ClassFunction) -> dict[MultiPartition, Cyclotomic]:
    table = wreath_char_table(f.r, f.n)
    out = {}
    for lam in table.labels:
        c = pairing(f, table.character(lam))
        if c:
            out[lam] = c
    return out


def from_schur_coordinates(r: int, n: int, coords: Mapping[MultiPartition, object]) -> ClassFunction:
    table = wreath_char_table(r, n)
    total = ClassFunction(r, n)
    for lam, c in coords.items():
        total = total + table.character(lam) * c
    return total


def convolve_fast(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """Convolution through s_lam o s_mu = delta r^n h(lam) s_lam."""
    f._check(g)
    r, n = f.r, f.n
    cf, cg = schur_coordinates(f), schur_coordinates(g)
    prod = {lam: cf[lam] * cg[lam] * (r**n * mp_hook_product(lam)) for lam in cf if lam in cg}
    return from_schur_coordinates(r, n, prod)


def class_sum_product(rho: MultiPartition, sigma: MultiPartition) -> dict[MultiPartition, int]:
    """Structure constants of class sums: 1_rho o 1_sigma = sum_tau c^tau 1_tau,
    counted in the group (c^tau = #{(x, y): x in rho, y in sigma, xy = fixed z in tau})."""
    r, n = len(rho), sum(map(sum, rho))
    check_guard(r, n)
    keys, types = _group_table(r, n)
    rho_elems = [k for k in keys if types[k] == rho]
    sig_set = {k for k in keys if types[k] == sigma}
    out = {}
    for tau in enumerate_multipartitions(n, r):
        zk = representative(tau).key()
        count = 0
        for x in rho_elems:
            y = _mul(r, *_inv(r, *x), *zk)
            if y in sig_set:
                count += 1
        if count:
            out[tau] = count
    return out


class GradedStructureConstants:
    """Top-degree part of the class-sum structure constants."""

    def __init__(self, r: int, n: int, constants: Mapping[tuple, int], full: Mapping[tuple, int]):
        self.r, self.n = r, n
        self.constants = dict(constants)
        self.full = dict(full)

    def __getitem__(self, key) -> int:
        return self.constants.get(key, 0)

    def to_json(self) -> list:
        return [
            {"rho": mp_to_json(a), "sigma": mp_to_json(b), "tau": mp_to_json(c), "value": v}
            for (a, b, c), v in sorted(self.constants.items(), key=lambda kv: _triple_key(kv[0]))
        ]


def _triple_key(t):
    from .partitions import mp_key

    return tuple(mp_key(x) for x in t)


def graded_constants(r: int, n: int) -> GradedStructureConstants:
    check_guard(r, n)
    labels = enumerate_multipartitions(n, r)
    top, full = {}, {}
    for rho in labels:
        for sigma in labels:
            for tau, c in class_sum_product(rho, sigma).items():
                full[(rho, sigma, tau)] = c
                if degree(tau) == degree(rho) + degree(sigma):
                    top[(rho, sigma, tau)] = c
    return GradedStructureConstants(r, n, top, full)


# --- Jucys-Murphy eigenvalues ---------------------------------------------------


def content_eigen(lam: Partition, scale: int, order: int) -> LaurentSeries:
    """sum over cells of e^{scale * c * z}, truncated at z^order."""
    total = LaurentSeries.zero(order)
    for c in contents(lam):
        total = total + LaurentSeries.exp_linear(scale * c, order)
    return LaurentSeries(dict(total.items()), order, min_exp=0)


def jm_spectrum(i: int, r: int, n: int, order: int) -> dict[MultiPartition, LaurentSeries]:
    """Eigenvalue series of convolution by the JM generating function on each s_lam.

    The closed form (1/s(rz))(sum_j e^{(lam^i_j - j + 1/2) rz} - 1/s(rz)) telescopes
    to the finite content sum over lam^i at rz.
    """
    return {lam: content_eigen(lam[i], r, order) for lam in enumerate_multipartitions(n, r)}
