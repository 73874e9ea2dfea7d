"""Eigenvalue series of the diagonal Chern-character operators.

Every operator here is diagonal on [lam]^{(p)}; we only ever compute its
eigenvalue, a Laurent series in z with at most a simple pole.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactnum import LaurentSeries, series_invert
from .fock import H1Vector
from .partitions import MultiPartition, Partition, contents

DEFAULT_ORDER = 8


@lru_cache(maxsize=4096)
def _exp(a, order: int) -> LaurentSeries:
    return LaurentSeries.exp_linear(a, order)


@lru_cache(maxsize=None)
def _inv_varsigma(scale: int, order: int) -> LaurentSeries:
    """1/varsigma(scale*z) known through z^order."""
    s = _exp(Fraction(scale, 2), order + 2) - _exp(Fraction(-scale, 2), order + 2)
    return series_invert(s)


def _clip(f: LaurentSeries, order: int) -> LaurentSeries:
    return f.truncate(order).normalized() if f.trunc >= order else _fail(f, order)


def _fail(f, order):
    raise ArithmeticError(f"series only known to z^{f.trunc}, needed z^{order}")


def a_exponent(k: int, i: int, r: int) -> int:
    """a(k, i) = k - r for i < k, else k."""
    return k - r if i < k else k


# --- content sums ------------------------------------------------------------------


@lru_cache(maxsize=None)
def content_series(lam: Partition, order: int = DEFAULT_ORDER, scale: int = 1) -> LaurentSeries:
    """sum over cells of e^{scale * c * z}, by cell enumeration."""
    total = LaurentSeries.zero(order)
    for c in contents(lam):
        total = total + _exp(scale * c, order)
    return LaurentSeries(dict(total.items()), order, min_exp=0)


def content_closed_form(lam: Partition, order: int = DEFAULT_ORDER, scale: int = 1) -> LaurentSeries:
    """(1/varsigma)(sum_j e^{(lam_j - j + 1/2)z} - 1/varsigma), with the j-tail telescoped:
    the bracket equals sum_{j <= len(lam)} (e^{(lam_j-j+1/2)z} - e^{(-j+1/2)z})."""
    bracket = LaurentSeries.zero(order + 1)
    for j, part in enumerate(lam, start=1):
        bracket = bracket + _exp(scale * Fraction(2 * (part - j) + 1, 2), order + 1)
        bracket = bracket - _exp(scale * Fraction(-2 * j + 1, 2), order + 1)
    return _clip(bracket * _inv_varsigma(scale, order), order)


# --- the E^{(i)}(z) operators --------------------------------------------------------


@lru_cache(maxsize=None)
def maya_eigen(part: Partition, charge: int, r: int, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """(1/varsigma(rz)) sum_m e^{m r z} :E_{m,m}: on the charged Maya diagram of part.

    Occupied sites are lam_j - j + 1/2 + charge; the normal-ordered occupation is
    +1 for occupied m > 0 and -1 for empty m < 0.
    """
    part = tuple(part)
    ell = len(part)
    depth = max(ell, charge, 0) + 1
    occupied = {Fraction(2 * ((part[j - 1] if j <= ell else 0) - j + charge) + 1, 2) for j in range(1, depth + 1)}
    floor = Fraction(2 * (charge - depth) - 1, 2)  # every site at or below is occupied
    numerator = LaurentSeries.zero(order + 1)
    m = min(floor, Fraction(-1, 2))
    while m <= max(occupied | {Fraction(1, 2)}):
        occ = m <= floor or m in occupied
        if m > 0 and occ:
            numerator = numerator + _exp(r * m, order + 1)
        elif m < 0 and not occ:
            numerator = numerator - _exp(r * m, order + 1)
        m += 1
    return _clip(numerator * _inv_varsigma(r, order), order)


def eps_eigen(i: int, p, lam: MultiPartition, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """Eigenvalue of E^{(i)}(z) on [lam]^{(p)}."""
    r = len(lam)
    return maya_eigen(lam[i], tuple(p)[i], r, order)


def eps_eigen_shifted(i: int, p, lam: MultiPartition, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """Same eigenvalue through the shift-conjugation formula:
    e^{n r z} * (content series at rz) + (e^{n r z} - 1)/varsigma(rz)^2."""
    r = len(lam)
    n = tuple(p)[i]
    base = content_series(lam[i], order + 1, scale=r)
    inv = _inv_varsigma(r, order + 1)
    shift = _exp(n * r, order + 2)
    return _clip(shift * base + (shift - 1) * inv * inv, order)


def hk_eigen(k: int, p, lam: MultiPartition, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """H_k(z) = sum_i e^{a(k,i) z} E^{(i)}(z)."""
    r = len(lam)
    p = tuple(p)
    total = LaurentSeries.zero(order)
    for i in range(r):
        total = total + _weighted_maya(a_exponent(k, i, r), lam[i], p[i], r, order)
    return _clip(total, order)


@lru_cache(maxsize=None)
def _weighted_maya(a: int, part: Partition, charge: int, r: int, order: int) -> LaurentSeries:
    return _clip(_exp(a, order + 1) * maya_eigen(part, charge, r, order + 1), order)


# --- the G_k(z) operators ----------------------------------------------------------------


def gk_eigen(k: int, p, lam: MultiPartition, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """G_k^{(p)}(z) from the fixed-point weights n_i r + a(k,i) + r c over all cells."""
    r = len(lam)
    p = tuple(p)
    total = LaurentSeries.zero(order)
    for i in range(r):
        if lam[i]:
            total = total + _weighted_content(p[i] * r + a_exponent(k, i, r), lam[i], r, order)
    return LaurentSeries(dict(total.items()), order, min_exp=0)


@lru_cache(maxsize=None)
def _weighted_content(shift: int, part: Partition, r: int, order: int) -> LaurentSeries:
    return _exp(shift, order) * content_series(part, order, scale=r)


@lru_cache(maxsize=None)
def c_series(k: int, p, r: int, order: int = DEFAULT_ORDER) -> LaurentSeries:
    """sum_m c^{(p)}_{k;m} z^m = varsigma(rz)^{-2} sum_i e^{a(k,i)z}(e^{n_i r z} - 1)."""
    if not isinstance(p, tuple):
        return c_series(k, tuple(p), r, order)
    inv = _inv_varsigma(r, order + 1)
    num = LaurentSeries.zero(order + 2)
    for i in range(r):
        num = num + _exp(a_exponent(k, i, r), order + 2) * (_exp(p[i] * r, order + 2) - 1)
    return _clip(num * inv * inv, order)


def gk_tilde_eigen(k: int, p, lam: MultiPartition, order: int = DEFAULT_ORDER) -> LaurentSeries:
    r = len(lam)
    return _clip(gk_eigen(k, p, lam, order) + c_series(k, p, r, order), order)


def c_const(p, k: int, m: int, r: int | None = None) -> Fraction:
    p = tuple(p)
    r = len(p) if r is None else r
    if m < -1:
        return Fraction(0)
    return c_series(k, p, r, max(m, 0)).coeff(m)


@lru_cache(maxsize=None)
def _n_series(k: int, r: int, order: int) -> LaurentSeries:
    denom = 1 - _exp(-r, order + 2)
    return _clip(_exp(-k, order + 2) * series_invert(denom), order)


def n_coeff(k: int, d: int, r: int) -> Fraction:
    """n_{k;d}: coefficient of z^d in e^{-kz}/(1 - e^{-rz}); k = r is allowed."""
    if d < -1:
        return Fraction(0)
    return _n_series(k, r, max(d, 0)).coeff(d)


# --- modified Chern characters ------------------------------------------------------------


def modified_chern_from_g(k: int, m: int, p, lam: MultiPartition) -> Fraction:
    """sum_{d=-1}^{m+1} (n_{k;d} G~_{k;m-d} - n_{k+1;d} G~_{k+1;m-d}), with G~_r = G~_0."""
    r = len(lam)
    g_k = gk_tilde_eigen(k, p, lam, m + 1)
    g_next = gk_tilde_eigen((k + 1) % r, p, lam, m + 1)
    total = Fraction(0)
    for d in range(-1, m + 2):
        total += n_coeff(k, d, r) * g_k.coeff(m - d) - n_coeff(k + 1, d, r) * g_next.coeff(m - d)
    return total


def modified_chern_from_eps(k: int, m: int, p, lam: MultiPartition) -> Fraction:
    return eps_eigen(k, p, lam, max(m, 0)).coeff(m)


def modified_chern_eigen(k: int, m: int, p, lam: MultiPartition) -> Fraction:
    """Eigenvalue of the modified class ch~_{k;m} on [lam]^{(p)}, computed two ways."""
    if m < -1:
        raise ValueError("m must be >= -1")
    a = modified_chern_from_g(k, m, p, lam)
    b = modified_chern_from_eps(k, m, p, lam)
    if a != b:
        raise ArithmeticError(f"modified Chern routes disagree at k={k}, m={m}, p={p}, lam={lam}: {a} vs {b}")
    return a


# --- lattice identities -------------------------------------------------------------------------


def c1_line_bundle(r: int, k: int) -> H1Vector:
    """c_1(L_k) = (1/r)(sum_{i<k} (k - r) diamond_i + sum_{i>=k} k diamond_i)."""
    return H1Vector(r, [Fraction(a_exponent(k, i, r), r) for i in range(r)])


def cartan_matrix(r: int) -> list[list[int]]:
    """Cartan matrix of type A_{r-1}, indices 1..r-1."""
    n = r - 1
    return [[2 if a == b else (-1 if abs(a - b) == 1 else 0) for b in range(n)] for a in range(n)]


def mckay_check(r: int) -> tuple[bool, dict]:
    if r < 2:
        raise ValueError("r must be at least 2")
    C = cartan_matrix(r)
    t = H1Vector.t(r)
    report: dict = {"r": r, "failures": []}
    for j in range(1, r):
        rhs = H1Vector(r, [0] * r)
        for i in range(1, r):
            rhs = rhs - c1_line_bundle(r, i) * C[i - 1][j - 1]
        if rhs != H1Vector.sigma(r, j):
            report["failures"].append(f"[Sigma_{j}] != -(c_1 C)_{j}")
    for k in range(r):
        if k < r - 1:
            rhs = c1_line_bundle(r, k) - c1_line_bundle(r, k + 1) + t
        else:
            rhs = c1_line_bundle(r, k) + t
        if rhs != H1Vector.diamond(r, k):
            report["failures"].append(f"diamond_{k} != c_1(L_{k}) - c_1(L_{k+1}) + t")
    if t.pairing(t) != Fraction(1, r):
        report["failures"].append("<t,t> != 1/r")
    for i in range(1, r):
        if t.pairing(H1Vector.sigma(r, i)) != 0:
            report["failures"].append(f"<t,[Sigma_{i}]> != 0")
        for j in range(1, r):
            if H1Vector.sigma(r, i).pairing(H1Vector.sigma(r, j)) != C[i - 1][j - 1]:
                report["failures"].append(f"<[Sigma_{i}],[Sigma_{j}]> != C_{i}{j}")
    if H1Vector.rt(r) != sum((H1Vector.diamond(r, i) for i in range(1, r)), H1Vector.diamond(r, 0)):
        report["failures"].append("rt != sum of diamonds")
    report["ok"] = not report["failures"]
    return report["ok"], report


# --- ring generation -------------------------------------------------------------------------


def chern_class_vector(k: int, m: int, r: int, n: int):
    """The class in H_n whose star-eigenvalue on [lam] is the modified Chern eigenvalue."""
    from .fock import FockVector
    from .partitions import enumerate_multipartitions, mp_hook_product

    zero = (0,) * r
    terms = {
        lam: modified_chern_eigen(k, m, zero, lam) / (r**n * mp_hook_product(lam))
        for lam in enumerate_multipartitions(n, r)
    }
    return FockVector(zero, terms)


def ring_generation_check(r: int, n: int) -> tuple[bool, dict]:
    """Rank of the star-subalgebra generated by ch~_{k;m}, 0 <= m < n, 0 <= k < r."""
    from .exactnum import rank
    from .fock import FockVector, star
    from .partitions import enumerate_multipartitions, mp_hook_product

    labels = enumerate_multipartitions(n, r)
    zero = (0,) * r
    unit = FockVector(zero, {lam: Fraction(1, r**n * mp_hook_product(lam)) for lam in labels})
    gens = [chern_class_vector(k, m, r, n) for k in range(r) for m in range(n)]

    def coords(v):
        return [v.coeff(lam) for lam in labels]

    basis = [unit]
    current = rank([coords(unit)])
    frontier = [unit]
    for g in gens:
        if rank([coords(b) for b in basis] + [coords(g)]) > current:
            basis.append(g)
            frontier.append(g)
            current += 1
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                w = star(v, g)
                if rank([coords(b) for b in basis] + [coords(w)]) > current:
                    basis.append(w)
                    new.append(w)
                    current += 1
        frontier = new
    report = {"r": r, "n": n, "dimension": len(labels), "rank": current, "generators": len(gens)}
    return current == len(labels), report
