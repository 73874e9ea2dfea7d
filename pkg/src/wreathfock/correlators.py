"""N-point functions of Chern characters and truncated tau functions.

All computations expand creation monomials in the [nu] basis and then use
the diagonal eigenvalue data from ``chern``; nothing is materialized as a
matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Sequence

from .chern import a_exponent, eps_eigen, gk_eigen, modified_chern_from_g
from .exactnum import LaurentSeries, MultiSeries
from .fock import FockVector, basis_vector, half_vertex, pairing, star
from .partitions import MultiPartition, make_multipartition, mp_hook_product, mp_to_json, partitions, z_mu


def z_vars(N: int) -> tuple[str, ...]:
    return tuple(f"z{j}" for j in range(1, N + 1))


def var_name(kind: str, k: int, m: int) -> str:
    return f"{kind}_{{{k},{m}}}"


def _var_key(name: str):
    kind, rest = name.split("_", 1)
    k, m = rest.strip("{}").split(",")
    return (kind, int(k), int(m))


@dataclass(frozen=True)
class NPointResult:
    lam: MultiPartition
    mu: MultiPartition
    ks: tuple
    series: MultiSeries

    def to_json(self) -> dict:
        return {
            "lambda": mp_to_json(self.lam),
            "mu": mp_to_json(self.mu),
            "ks": list(self.ks),
            "order": self.series.trunc,
            "series": self.series.to_json(),
        }


@lru_cache(maxsize=None)
def _p_expansion(lam: MultiPartition) -> FockVector:
    return basis_vector("p_la", lam)


def _npoint(lam, mu, ks, variables, order, scale: int | None = None) -> MultiSeries:
    """<p_{-lam}, prod_j G_{k_j}(z_j) p_{-mu}> as a series in ``variables``."""
    lam, mu = make_multipartition(lam), make_multipartition(mu)
    if len(lam) != len(mu):
        raise ValueError("lambda and mu have different r")
    if sum(map(sum, lam)) != sum(map(sum, mu)):
        raise ValueError("lambda and mu must have the same size")
    r = len(lam)
    u, v = _p_expansion(lam), _p_expansion(mu)
    total = MultiSeries(variables, {}, order)
    zero = (0,) * r
    for nu, a in u.terms.items():
        b = v.terms.get(nu)
        if b is None:
            continue
        term = MultiSeries.constant(variables, a * b, order)
        for k, name in zip(ks, variables):
            g = gk_eigen(k, zero, nu, order)
            term = term * MultiSeries.from_univariate(g, variables, name, order)
        total = total + term
    return total


def npoint_direct(lam, mu, ks: Sequence[int], order: int = 6) -> NPointResult:
    lam, mu = make_multipartition(lam), make_multipartition(mu)
    ks = tuple(ks)
    r = len(lam)
    if any(not 0 <= k < r for k in ks):
        raise ValueError(f"colors must lie in 0..{r - 1}")
    return NPointResult(lam, mu, ks, _npoint(lam, mu, ks, z_vars(len(ks)), order))


def npoint_reduced(lam, mu, ks: Sequence[int], order: int = 6) -> NPointResult:
    """Sum over color assignments of the points, with r = 1 factors at rz."""
    lam, mu = make_multipartition(lam), make_multipartition(mu)
    ks = tuple(ks)
    r, N = len(lam), len(ks)
    if sum(map(sum, lam)) != sum(map(sum, mu)):
        raise ValueError("lambda and mu must have the same size")
    variables = z_vars(N)
    total = MultiSeries(variables, {}, order)
    if any(sum(a) != sum(b) for a, b in zip(lam, mu)):
        return NPointResult(lam, mu, ks, total)
    for colors in product(range(r), repeat=N):
        term = MultiSeries.constant(variables, 1, order)
        for j, (k, i) in enumerate(zip(ks, colors)):
            term = term * MultiSeries.from_univariate(
                LaurentSeries.exp_linear(a_exponent(k, i, r), order), variables, variables[j], order
            )
        for i in range(r):
            block = tuple(variables[j] for j in range(N) if colors[j] == i)
            g1 = _npoint(((lam[i]),), ((mu[i]),), (0,) * len(block), block, order)
            g1 = g1.rescale({name: r for name in block}).with_variables(variables)
            term = term * g1
        total = total + term
    return NPointResult(lam, mu, ks, total)


# --- tau functions ------------------------------------------------------------------------


@dataclass
class TauTruncation:
    charge: tuple
    degree: int
    max_mode: int
    x_modes: int
    colors: tuple
    series: MultiSeries = field(repr=False)

    def to_json(self) -> dict:
        return {
            "charge": list(self.charge),
            "degree": self.degree,
            "max_mode": self.max_mode,
            "x_modes": self.x_modes,
            "colors": list(self.colors),
            "series": self.series.to_json(),
        }


def tau_variables(colors: Iterable[int], max_mode: int, x_modes: int) -> tuple[str, ...]:
    names = []
    for k in colors:
        names += [var_name("t", k, m) for m in range(1, max_mode + 1)]
        names += [var_name("s", k, m) for m in range(1, max_mode + 1)]
        names += [var_name("x", k, m) for m in range(0, x_modes + 1)]
    return tuple(sorted(names, key=_var_key))


def _colored_mode_partitions(r: int, colors: Sequence[int], max_mode: int, max_len: int):
    """Multipartitions supported on ``colors`` with parts <= max_mode and total length <= max_len."""
    per_color = []
    for _ in colors:
        opts = []
        for n in range(max_mode * max_len + 1):
            for mu in partitions(n):
                if (not mu or mu[0] <= max_mode) and len(mu) <= max_len:
                    opts.append(mu)
        per_color.append(opts)
    for choice in product(*per_color):
        if sum(len(mu) for mu in choice) <= max_len:
            comps = [()] * r
            for k, mu in zip(colors, choice):
                comps[k] = mu
            yield tuple(comps)


def _eps_coefficients(k: int, charge: tuple, nu: MultiPartition, x_modes: int) -> list[Fraction]:
    series = eps_eigen(k, charge, nu, x_modes)
    return [series.coeff(m) for m in range(x_modes + 1)]


def _exp_linear_form(variables, linear: dict[str, Fraction], degree: int) -> dict[tuple, Fraction]:
    """Terms of exp(sum_v c_v v) up to total degree ``degree``."""
    names = [v for v, c in linear.items() if c]
    idx = [variables.index(v) for v in names]
    out: dict[tuple, Fraction] = {}
    for exps in product(range(degree + 1), repeat=len(names)):
        if sum(exps) > degree:
            continue
        coef = Fraction(1)
        for v, e in zip(names, exps):
            coef *= linear[v] ** e / factorial(e)
        key = [0] * len(variables)
        for i, e in zip(idx, exps):
            key[i] = e
        out[tuple(key)] = coef
    return out


def tau_truncated(
    charge: Sequence[int],
    degree: int = 4,
    max_mode: int = 2,
    x_modes: int = 1,
    colors: Sequence[int] | None = None,
    x_values: dict | None = None,
) -> TauTruncation:
    """tau = <0| S_p^{-1} prod Gamma_+(t) exp(sum x_{k,m} E_{k;m}) prod Gamma_-(s) S_p |0>.

    Only the colors in ``colors`` carry variables, modes above ``max_mode`` are
    dropped, and the series is cut at total degree ``degree`` in all variables.
    ``x_values`` pins some x-variables to rational constants (they are then
    removed from the variable list).
    """
    charge = tuple(int(c) for c in charge)
    r = len(charge)
    colors = tuple(range(r)) if colors is None else tuple(colors)
    x_values = dict(x_values or {})
    variables = tuple(v for v in tau_variables(colors, max_mode, x_modes) if v not in x_values)
    modes = list(_colored_mode_partitions(r, colors, max_mode, degree))
    expansions = {mu: _p_expansion(mu) for mu in modes}
    terms: dict[tuple, Fraction] = {}
    eig_cache: dict = {}

    def monomial(kind, mu):
        key = [0] * len(variables)
        for k, comp in enumerate(mu):
            for part in comp:
                key[variables.index(var_name(kind, k, part))] += 1
        return key

    for lam in modes:
        tl = monomial("t", lam)
        zl = 1
        for comp in lam:
            zl *= z_mu(comp)
        for mu in modes:
            deg_tsm = sum(map(len, lam)) + sum(map(len, mu))
            if deg_tsm > degree:
                continue
            if any(sum(a) != sum(b) for a, b in zip(lam, mu)):
                continue
            sm = monomial("s", mu)
            zm = 1
            for comp in mu:
                zm *= z_mu(comp)
            base = [a + b for a, b in zip(tl, sm)]
            u, v = expansions[lam], expansions[mu]
            for nu, a in u.terms.items():
                b = v.terms.get(nu)
                if b is None:
                    continue
                if nu not in eig_cache:
                    linear: dict[str, Fraction] = {}
                    const = Fraction(0)
                    for k in colors:
                        coeffs = _eps_coefficients(k, charge, nu, x_modes)
                        for m, c in enumerate(coeffs):
                            name = var_name("x", k, m)
                            if name in x_values:
                                const += Fraction(x_values[name]) * c
                            else:
                                linear[name] = c
                    if const:
                        raise ValueError("pinning x to nonzero values leaves the rationals; keep x symbolic")
                    eig_cache[nu] = linear
                expo = _exp_linear_form(variables, eig_cache[nu], degree - deg_tsm)
                scale = a * b / (zl * zm)
                for key, c in expo.items():
                    full = tuple(x + y for x, y in zip(base, key))
                    terms[full] = terms.get(full, 0) + scale * c
    series = MultiSeries(variables, terms, degree)
    return TauTruncation(charge, degree, max_mode, x_modes, colors, series)


def tau_closed_form_x0(colors: Sequence[int], max_mode: int, degree: int, variables) -> MultiSeries:
    """prod_k exp(sum_m t_{k,m} s_{k,m} / m) in the given variables."""
    total = MultiSeries.constant(variables, 1, degree)
    for k in colors:
        for m in range(1, max_mode + 1):
            t = MultiSeries.variable(variables, var_name("t", k, m), degree)
            s = MultiSeries.variable(variables, var_name("s", k, m), degree)
            total = total * (t * s * Fraction(1, m)).exp()
    return total


def tau_factorization_check(charge: Sequence[int], degree: int = 4, max_mode: int = 2, x_modes: int = 1) -> tuple[bool, dict]:
    charge = tuple(charge)
    r = len(charge)
    full = tau_truncated(charge, degree, max_mode, x_modes).series
    prod_series = MultiSeries.constant(full.variables, 1, degree)
    for k in range(r):
        single = tau_truncated(charge, degree, max_mode, x_modes, colors=(k,)).series
        prod_series = prod_series * single.with_variables(full.variables)
    diff = full - prod_series
    report = {
        "charge": list(charge),
        "degree": degree,
        "monomials": len(full.terms),
        "mismatches": len(diff.terms),
    }
    return diff.is_zero(), report


def tau_defining_sum_first_order(r: int, n_max: int, max_mode: int = 2, x_modes: int = 1) -> MultiSeries:
    """sum t_lam s_mu /(z_lam z_mu) <p_{-lam}, (1 + sum x_{k,m} ch~_{k;m}) * p_{-mu}> at charge 0,
    with the modified classes built from the G~ route and multiplied by the star product.
    Restricted to ||lam|| = ||mu|| <= n_max and first order in x."""
    from .partitions import enumerate_multipartitions

    colors = tuple(range(r))
    variables = tau_variables(colors, max_mode, x_modes)
    zero = (0,) * r
    degree = 2 * n_max + 1
    total = MultiSeries(variables, {}, degree)
    for n in range(n_max + 1):
        labels = enumerate_multipartitions(n, r)
        classes = {}
        for k in colors:
            for m in range(x_modes + 1):
                cls = {nu: modified_chern_from_g(k, m, zero, nu) / (r**n * mp_hook_product(nu)) for nu in labels}
                classes[var_name("x", k, m)] = FockVector(zero, cls)
        shapes = [mu for mu in labels if all(not c or c[0] <= max_mode for c in mu)]
        for lam in shapes:
            for mu in shapes:
                pl, pm = _p_expansion(lam), _p_expansion(mu)
                zl = zm = 1
                for c in lam:
                    zl *= z_mu(c)
                for c in mu:
                    zm *= z_mu(c)
                key = [0] * len(variables)
                for kind, nu_ in (("t", lam), ("s", mu)):
                    for k, comp in enumerate(nu_):
                        for part in comp:
                            key[variables.index(var_name(kind, k, part))] += 1
                c0 = pairing(pl, pm) / (zl * zm)
                terms = {tuple(key): c0}
                for name, cls in classes.items():
                    c1 = pairing(pl, star(cls, pm)) / (zl * zm)
                    k2 = list(key)
                    k2[variables.index(name)] += 1
                    terms[tuple(k2)] = terms.get(tuple(k2), 0) + c1
                total = total + MultiSeries(variables, terms, degree)
    return total


# --- Toda ----------------------------------------------------------------------------------------


TODA_EPSILON = 1


def single_color_tau(k: int, r: int, n: int, degree: int, max_mode: int, x_modes: int) -> MultiSeries:
    charge = tuple(n if i == k else 0 for i in range(r))
    return tau_truncated(charge, degree, max_mode, x_modes, colors=(k,)).series


def toda_residual(
    k: int,
    r: int,
    charges: Iterable[int],
    degree: int = 4,
    max_mode: int = 2,
    x_modes: int = 1,
    epsilon: int = TODA_EPSILON,
    reflect: bool = False,
) -> dict[int, MultiSeries]:
    """Residual of tau_n d_t1 d_s1 tau_n - d_t1 tau_n d_s1 tau_n - eps tau_{n+1} tau_{n-1}.

    tau is computed to degree + 2 so the residual is exact through ``degree``.
    ``reflect`` substitutes s -> -s before forming the residual.
    """
    charges = list(charges)
    needed = sorted({c + d for c in charges for d in (-1, 0, 1)})
    taus = {n: single_color_tau(k, r, n, degree + 2, max_mode, x_modes) for n in needed}
    if reflect:
        taus = {
            n: s.rescale({var_name("s", k, m): -1 for m in range(1, max_mode + 1)}) for n, s in taus.items()
        }
    t1, s1 = var_name("t", k, 1), var_name("s", k, 1)
    out = {}
    for n in charges:
        tau = taus[n]
        dt, ds = tau.diff(t1), tau.diff(s1)
        dts = dt.diff(s1)
        res = tau * dts - dt * ds - taus[n + 1] * taus[n - 1] * epsilon
        out[n] = res.truncate(degree)
    return out


def calibrate_toda(k: int, r: int, degree: int = 4, max_mode: int = 2) -> tuple[int, bool]:
    """Pick (epsilon, reflect) making the residual vanish on the x = 0 family."""
    for eps in (1, -1):
        for reflect in (False, True):
            res = toda_residual(k, r, [0], degree, max_mode, x_modes=0, epsilon=eps, reflect=reflect)
            # with x_modes=0 the x_{k,0} variable is present; restrict to x = 0 terms
            x0 = var_name("x", k, 0)
            if all(s.substitute_zero([x0]).is_zero() for s in res.values()):
                return eps, reflect
    raise ArithmeticError("no sign convention annihilates the x = 0 residual")
