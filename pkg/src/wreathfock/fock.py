"""The charged Fock space of r-colored partitions.

Basis vectors [lam]^{(p)} are multipartitions tagged with a charge vector p.
Heisenberg operators p_m(diamond_i) act colorwise by adding (m < 0) or
removing (m > 0) border strips with Murnaghan-Nakayama signs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterable, Mapping, Sequence

from .characters import (
    b_minus,
    from_schur_coordinates,
    schur_coordinates,
)
from .exactnum import Cyclotomic, LaurentSeries, MultiSeries, series_invert
from .partitions import (
    MultiPartition,
    add_strips,
    enumerate_multipartitions,
    make_multipartition,
    mp_hook_product,
    mp_key,
    mp_to_json,
    mp_from_json,
    partitions,
    remove_strips,
    z_mu,
)
from .wreath import ClassFunction

Charge = tuple


def _is_zero(c) -> bool:
    return not c


# --- H^1 vectors --------------------------------------------------------------


class H1Vector:
    """Vector sum_i coords[i] * diamond_i with <diamond_i, diamond_j> = delta_ij."""

    __slots__ = ("r", "coords")

    def __init__(self, r: int, coords: Sequence):
        if len(coords) != r:
            raise ValueError(f"need {r} coordinates")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "coords", tuple(Fraction(c) if isinstance(c, int) else c for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("H1Vector is immutable")

    @classmethod
    def diamond(cls, r: int, i: int) -> "H1Vector":
        return cls(r, [1 if j == i else 0 for j in range(r)])

    @classmethod
    def sigma(cls, r: int, i: int) -> "H1Vector":
        """[Sigma_i] = diamond_{i-1} - diamond_i, with [Sigma_0] = -diamond_0 and [Sigma_r] = diamond_{r-1}."""
        c = [0] * r
        if i > 0:
            c[i - 1] += 1
        if i < r:
            c[i] -= 1
        return cls(r, c)

    @classmethod
    def rt(cls, r: int) -> "H1Vector":
        return cls(r, [1] * r)

    @classmethod
    def t(cls, r: int) -> "H1Vector":
        return cls(r, [Fraction(1, r)] * r)

    @classmethod
    def c(cls, r: int, i: int) -> "H1Vector":
        """c^i = sum_j zeta^{-ij} diamond_j."""
        return cls(r, [Cyclotomic.zeta(r, -i * j) for j in range(r)])

    def pairing(self, other: "H1Vector"):
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def __add__(self, other):
        return H1Vector(self.r, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return H1Vector(self.r, [a - b for a, b in zip(self.coords, other.coords)])

    def __mul__(self, c):
        return H1Vector(self.r, [a * c for a in self.coords])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        return isinstance(other, H1Vector) and self.r == other.r and self.coords == other.coords

    def __hash__(self):
        return hash((self.r, self.coords))

    def __repr__(self):
        return f"H1Vector({self.r}, {[str(c) for c in self.coords]})"


# --- Fock vectors ---------------------------------------------------------------


class FockVector:
    """Finite combination of [lam]^{(p)} at a fixed charge p."""

    __slots__ = ("charge", "terms")

    def __init__(self, charge: Iterable[int], terms: Mapping[MultiPartition, object] | None = None):
        charge = tuple(int(c) for c in charge)
        clean = {}
        for lam, c in (terms or {}).items():
            if len(lam) != len(charge):
                raise ValueError("multipartition and charge have different r")
            if not _is_zero(c):
                clean[lam] = Fraction(c) if isinstance(c, int) else c
        object.__setattr__(self, "charge", charge)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FockVector is immutable")

    @property
    def r(self) -> int:
        return len(self.charge)

    @classmethod
    def vacuum(cls, r: int, charge: Iterable[int] | None = None) -> "FockVector":
        charge = tuple(charge) if charge is not None else (0,) * r
        return cls(charge, {((),) * r: 1})

    @classmethod
    def basis(cls, lam: MultiPartition, charge: Iterable[int] | None = None) -> "FockVector":
        lam = make_multipartition(lam)
        return cls(charge if charge is not None else (0,) * len(lam), {lam: 1})

    def coeff(self, lam: MultiPartition):
        return self.terms.get(lam, Fraction(0))

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.charge != other.charge:
            raise ValueError("cannot add vectors of different charge")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FockVector(self.charge, out)

    def __sub__(self, other):
        return self + other * (-1)

    def __mul__(self, c) -> "FockVector":
        return FockVector(self.charge, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * (-1)

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.charge == other.charge and self.terms == other.terms

    def __hash__(self):
        return hash((self.charge, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        for k in sorted(self.terms, key=mp_key):
            yield k, self.terms[k]

    def __repr__(self):
        body = " + ".join(f"({v})[{mp_to_json(k)}]" for k, v in self.items()) or "0"
        return f"FockVector(p={list(self.charge)}: {body})"

    def to_json(self) -> dict:
        from .exactnum import _scalar_json

        return {"charge": list(self.charge), "terms": [{"mp": mp_to_json(k), "coeff": _scalar_json(v)} for k, v in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "FockVector":
        from .exactnum import _scalar_from_json

        return cls(data["charge"], {mp_from_json(t["mp"]): _scalar_from_json(t["coeff"]) for t in data["terms"]})


def pairing(u: FockVector, v: FockVector):
    """<[lam]^{(p)}, [mu]^{(q)}> = delta_{lam,mu} delta_{p,q}, extended bilinearly."""
    if u.charge != v.charge:
        return Fraction(0)
    acc = Fraction(0)
    for lam, c in u.terms.items():
        d = v.terms.get(lam)
        if d is not None:
            acc = acc + c * d
    return acc


def _replace(lam: MultiPartition, i: int, comp) -> MultiPartition:
    return lam[:i] + (comp,) + lam[i + 1 :]


def heis_diamond(m: int, i: int, v: FockVector) -> FockVector:
    """p_m(diamond_i) for m != 0."""
    if m == 0:
        raise ValueError("use heis_zero for m = 0")
    out: dict = {}
    strips = add_strips if m < 0 else remove_strips
    for lam, c in v.terms.items():
        for new, sign in strips(lam[i], abs(m)):
            key = _replace(lam, i, new)
            out[key] = out.get(key, 0) + c * sign
    return FockVector(v.charge, out)


def heis_apply(m: int, alpha: H1Vector, v: FockVector) -> FockVector:
    """p_m(alpha) = sum_i alpha_i p_m(diamond_i)."""
    if m == 0:
        raise ValueError("m must be nonzero; use heis_zero")
    if alpha.r != v.r:
        raise ValueError("alpha and v have different r")
    out: dict = {}
    for i, a in enumerate(alpha.coords):
        if not a:
            continue
        for lam, c in heis_diamond(m, i, v).terms.items():
            out[lam] = out.get(lam, 0) + c * a
    return FockVector(v.charge, out)


def heis_zero(alpha: H1Vector, v: FockVector) -> FockVector:
    """p_0(alpha) acts on charge p by <alpha, p>."""
    p = H1Vector(v.r, v.charge)
    return v * alpha.pairing(p)


def shift(alpha: Iterable[int], v: FockVector) -> FockVector:
    alpha = tuple(alpha)
    if len(alpha) != v.r:
        raise ValueError("charge length mismatch")
    return FockVector(tuple(a + b for a, b in zip(v.charge, alpha)), v.terms)


def star(u: FockVector, v: FockVector) -> FockVector:
    """[lam] * [mu] = delta r^n h(lam) [lam]."""
    if u.charge != v.charge:
        return FockVector(u.charge)
    r = u.r
    out = {}
    for lam, c in u.terms.items():
        d = v.terms.get(lam)
        if d is not None:
            n = sum(map(sum, lam))
            out[lam] = c * d * (r**n * mp_hook_product(lam))
    return FockVector(u.charge, out)


def degree_of(v: FockVector) -> int:
    sizes = {sum(map(sum, lam)) for lam in v.terms}
    if len(sizes) > 1:
        raise ValueError("vector is not homogeneous")
    return sizes.pop() if sizes else 0


def phi(v: FockVector, n: int | None = None) -> ClassFunction:
    """[lam] -> s_lam.  Pass ``n`` when v may be zero, since then its degree is unknown."""
    if any(v.charge):
        raise ValueError("phi is defined on charge 0 only")
    if n is None:
        if v.is_zero():
            raise ValueError("degree of the zero vector is ambiguous; pass n")
        n = degree_of(v)
    elif v.terms and degree_of(v) != n:
        raise ValueError(f"vector has degree {degree_of(v)}, not {n}")
    return from_schur_coordinates(v.r, n, v.terms)


def phi_inverse(f: ClassFunction) -> FockVector:
    return FockVector((0,) * f.r, schur_coordinates(f))


BASIS_KINDS = ("p_la", "p'_la", "qT_la", "b_la_image")


def basis_vector(kind: str, lam: MultiPartition, charge: Iterable[int] | None = None):
    """Named monomials of creation operators applied to the vacuum.

    p_la: prod p_{-k}(diamond_i);  p'_la: prod p_{-k}(c^i);
    qT_la: p_{-k}(rt) for parts of lam^0, p_{-k}([Sigma_i]) for parts of lam^i;
    b_la_image: the class function b_{-lam} on the group side.
    """
    lam = make_multipartition(lam)
    r = len(lam)
    if kind == "b_la_image":
        return b_minus(lam)
    if kind not in BASIS_KINDS:
        raise ValueError(f"unknown basis kind {kind!r}; expected one of {BASIS_KINDS}")
    v = FockVector.vacuum(r, charge)
    for i, comp in enumerate(lam):
        if kind == "p_la":
            alpha = H1Vector.diamond(r, i)
        elif kind == "p'_la":
            alpha = H1Vector.c(r, i)
        else:
            alpha = H1Vector.rt(r) if i == 0 else H1Vector.sigma(r, i)
        for part in comp:
            v = heis_apply(-part, alpha, v)
    return v


# --- half vertex operators --------------------------------------------------------


def t_var(name: str, i: int, m: int) -> str:
    return f"{name}_{{{i},{m}}}"


def _mode_partitions(max_mode: int, max_len: int, max_size: int | None = None):
    """Partitions with parts <= max_mode and at most max_len parts."""
    bound = max_mode * max_len if max_size is None else max_size
    for n in range(bound + 1):
        for mu in partitions(n):
            if (not mu or mu[0] <= max_mode) and len(mu) <= max_len:
                yield mu


def half_vertex(
    sign: str,
    i: int,
    v: FockVector,
    trunc: int,
    max_mode: int,
    name: str = "t",
    variables: Sequence[str] | None = None,
) -> dict[MultiPartition, MultiSeries]:
    """Gamma^{(i)}_{+/-}(t) v = sum_mu t_mu / z_mu p_{+/-mu}(diamond_i) v.

    Modes above ``max_mode`` are dropped and the t-expansion is cut at total
    degree ``trunc``.  Returns a map basis vector -> coefficient series.
    """
    if sign not in "+-":
        raise ValueError("sign must be '+' or '-'")
    if variables is None:
        variables = [t_var(name, i, m) for m in range(1, max_mode + 1)]
    variables = tuple(variables)
    direction = 1 if sign == "+" else -1
    out: dict = {}
    for mu in _mode_partitions(max_mode, trunc):
        w = v
        for part in mu:
            w = heis_diamond(direction * part, i, w)
            if w.is_zero():
                break
        if w.is_zero():
            continue
        exps = [0] * len(variables)
        for part in mu:
            exps[variables.index(t_var(name, i, part))] += 1
        mono = MultiSeries(variables, {tuple(exps): Fraction(1, z_mu(mu))}, trunc)
        for lam, c in w.terms.items():
            term = mono * c
            out[lam] = out[lam] + term if lam in out else term
    return {lam: s for lam, s in out.items() if not s.is_zero()}


# --- the vertex operator V_0 ----------------------------------------------------------

QPoly = dict  # exponent -> Fraction, a Laurent polynomial in q


def qpoly_mul(a: QPoly, b: QPoly) -> QPoly:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def qpoly_add(a: QPoly, b: QPoly, scale=1) -> QPoly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def qpoly_divide(a: QPoly, b: QPoly) -> QPoly:
    """Exact division of Laurent polynomials; raises if b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = dict(a)
    lo_b, hi_b = min(b), max(b)
    quot: dict = {}
    while a:
        hi_a = max(a)
        if hi_a - hi_b < min(a) - lo_b:
            raise ValueError("polynomial division is not exact")
        c = a[hi_a] / b[hi_b]
        e = hi_a - hi_b
        quot[e] = c
        a = qpoly_add(a, {k + e: v for k, v in b.items()}, -c)
    return quot


def qpoly_to_series(a: QPoly, scale: int, order: int) -> LaurentSeries:
    """Substitute q = e^{scale z}."""
    total = LaurentSeries.zero(order)
    for k, v in a.items():
        total = total + LaurentSeries.exp_linear(scale * k, order) * v
    return LaurentSeries(dict(total.items()), order, min_exp=0)


def vertex_V0(i: int, v: FockVector) -> dict[MultiPartition, QPoly]:
    """The w^0 coefficient of V(gamma_i; w, q) applied to v, with exact q-coefficients.

    V = exp(sum_k (q^k - 1) w^k / k p_{-k}) exp(sum_k (1 - q^{-k}) w^{-k} / k p_k);
    the annihilation part lowers |v^i| by K and the creation part must restore it.
    """
    out: dict = {}
    for lam, c in v.terms.items():
        size_i = sum(lam[i])
        for K in range(size_i + 1):
            for beta in partitions(K):
                w = FockVector(v.charge, {lam: c})
                for part in beta:
                    w = heis_diamond(part, i, w)
                if w.is_zero():
                    continue
                cb: QPoly = {0: Fraction(1, z_mu(beta))}
                for part in beta:
                    cb = qpoly_mul(cb, {0: Fraction(1), -part: Fraction(-1)})
                for alpha in partitions(K):
                    u = w
                    for part in alpha:
                        u = heis_diamond(-part, i, u)
                    if u.is_zero():
                        continue
                    ca: QPoly = {0: Fraction(1, z_mu(alpha))}
                    for part in alpha:
                        ca = qpoly_mul(ca, {part: Fraction(1), 0: Fraction(-1)})
                    coef = qpoly_mul(ca, cb)
                    for nu, d in u.terms.items():
                        out[nu] = qpoly_add(out.get(nu, {}), {k: x * d for k, x in coef.items()})
    return {k: p for k, p in out.items() if p}


def vertex_composite(i: int, v: FockVector) -> dict[MultiPartition, QPoly]:
    """q (V_0(gamma_i; q) - 1) / (q - 1)^2 applied to v, as exact q-Laurent polynomials."""
    v0 = vertex_V0(i, v)
    diff = {k: dict(p) for k, p in v0.items()}
    for lam, c in v.terms.items():
        diff[lam] = qpoly_add(diff.get(lam, {}), {0: c}, -1)
    out = {}
    denom = {2: Fraction(1), 1: Fraction(-2), 0: Fraction(1)}
    for lam, p in diff.items():
        if p:
            out[lam] = {k + 1: x for k, x in qpoly_divide(p, denom).items()}
    return {k: p for k, p in out.items() if p}


def vertex_composite_eigen(i: int, lam: MultiPartition, order: int) -> LaurentSeries:
    """Eigenvalue series of the composite at q = e^{rz}; raises if [lam] is not an eigenvector."""
    r = len(lam)
    image = vertex_composite(i, FockVector.basis(lam))
    if any(k != lam for k in image):
        raise ValueError(f"[{mp_to_json(lam)}] is not an eigenvector of the vertex composite")
    return qpoly_to_series(image.get(lam, {}), r, order)


def dense_matrix(m: int, alpha: H1Vector, n: int) -> list[list]:
    """Matrix of p_m(alpha) from degree n to degree n - m in the canonical bases."""
    r = alpha.r
    src = enumerate_multipartitions(n, r)
    dst = enumerate_multipartitions(n - m, r)
    rows = []
    for nu in dst:
        row = []
        for lam in src:
            row.append(heis_apply(m, alpha, FockVector.basis(lam)).coeff(nu))
        rows.append(row)
    return rows
