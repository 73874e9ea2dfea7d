"""Exact scalars and truncated series.

Rationals are :class:`fractions.Fraction`.  :class:`Cyclotomic` holds an
element of Q(zeta_r) reduced modulo the r-th cyclotomic polynomial.
:class:`LaurentSeries` and :class:`MultiSeries` are truncated series with
exact coefficients; every value is immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Fraction",
    "Cyclotomic",
    "LaurentSeries",
    "MultiSeries",
    "cyclotomic_polynomial",
    "cyclo_mul",
    "cyclo_conj",
    "series_invert",
    "series_exp",
    "as_fraction",
    "parse_fraction",
    "rank",
    "solve",
]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Cyclotomic):
        if not x.is_rational():
            raise ValueError(f"{x} is not rational")
        return x.coeffs[0]
    return Fraction(x)


def parse_fraction(s: str | int) -> Fraction:
    return Fraction(s)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# cyclotomic numbers
# ---------------------------------------------------------------------------


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic; coefficient lists are low degree first
    num = list(num)
    dq = len(den) - 1
    if len(num) - 1 < dq:
        return [0], num
    quot = [0] * (len(num) - dq)
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k]
        if c:
            quot[k - dq] = c
            for j in range(dq + 1):
                num[k - dq + j] -= c * den[j]
    return quot, num[:dq]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_r, lowest degree first."""
    if r < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


def _reduce(poly: Sequence[Fraction], r: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(r)
    deg = len(phi) - 1
    work = [Fraction(c) for c in poly]
    for k in range(len(work) - 1, deg - 1, -1):
        c = work[k]
        if c:
            for j in range(deg + 1):
                work[k - deg + j] -= c * phi[j]
    work = work[:deg] + [Fraction(0)] * max(0, deg - len(work))
    return tuple(work)


class Cyclotomic:
    """Element of Q(zeta_r), stored as coefficients of 1, zeta, ..., zeta^(phi(r)-1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _reduce(list(coeffs), order))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def rational(cls, order: int, q) -> "Cyclotomic":
        return cls(order, [Fraction(q)])

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "Cyclotomic":
        k %= order
        return cls(order, [0] * k + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                if other.is_rational():
                    return Cyclotomic.rational(self.order, other.coeffs[0])
                if self.is_rational():
                    raise _Promote(other.order)
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except _Promote as p:
            return Cyclotomic.rational(p.order, self.coeffs[0]) + other
        if o is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [a * other for a in self.coeffs])
        try:
            o = self._coerce(other)
        except _Promote as p:
            return Cyclotomic.rational(p.order, self.coeffs[0]) * other
        if o is NotImplemented:
            return NotImplemented
        out = [Fraction(0)] * (2 * self.degree - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[i + j] += a * b
        return Cyclotomic(self.order, out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        d = self.degree
        # column j holds self * zeta^j
        cols = [(self * Cyclotomic.zeta(self.order, j)).coeffs if j else self.coeffs for j in range(d)]
        matrix = [[cols[j][i] for j in range(d)] for i in range(d)]
        rhs = [Fraction(1)] + [Fraction(0)] * (d - 1)
        return Cyclotomic(self.order, solve(matrix, rhs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [a / other for a in self.coeffs])
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Cyclotomic":
        r = self.order
        out = [Fraction(0)] * r
        for j, c in enumerate(self.coeffs):
            out[(-j) % r] += c
        return Cyclotomic(r, out)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.order}, {str(self)!r})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(_frac_str(c) if j == 0 else f"{_frac_str(c)}*z{self.order}^{j}")
        return "+".join(terms) if terms else "0"

    @classmethod
    def parse(cls, order: int, text: str) -> "Cyclotomic":
        coeffs = [Fraction(0)] * order
        text = text.strip()
        if text != "0":
            for term in text.split("+"):
                if "*" in term:
                    c, z = term.split("*")
                    j = int(z.split("^")[1])
                else:
                    c, j = term, 0
                coeffs[j] += Fraction(c)
        return cls(order, coeffs)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [_frac_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Cyclotomic":
        return cls(int(data["order"]), [Fraction(c) for c in data["coeffs"]])

    def to_complex(self) -> complex:
        import cmath

        w = cmath.exp(2j * cmath.pi / self.order)
        return sum(complex(float(c)) * w**j for j, c in enumerate(self.coeffs))


class _Promote(Exception):
    def __init__(self, order):
        self.order = order


def cyclo_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    return a * b


def cyclo_conj(a: Cyclotomic) -> Cyclotomic:
    return a.conj()


# ---------------------------------------------------------------------------
# exact linear algebra over Q
# ---------------------------------------------------------------------------


def _echelon(rows: list[list]) -> tuple[list[list], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    lead = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(lead, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[lead], rows[pivot] = rows[pivot], rows[lead]
        inv = 1 / rows[lead][col]
        rows[lead] = [x * inv for x in rows[lead]]
        for i in range(len(rows)):
            if i != lead and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a matrix with exact (Fraction or Cyclotomic) entries."""
    if not matrix:
        return 0
    return len(_echelon([list(map(_exact, r)) for r in matrix])[1])


def _exact(x):
    return Fraction(x) if isinstance(x, int) else x


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve a square nonsingular system exactly."""
    n = len(matrix)
    aug = [list(map(_exact, row)) + [_exact(b)] for row, b in zip(matrix, rhs)]
    rows, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [rows[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# univariate truncated Laurent series
# ---------------------------------------------------------------------------


class LaurentSeries:
    """Truncated Laurent series sum_{e=min_exp}^{trunc} c_e z^e.

    Coefficients above ``trunc`` are unknown and never reported.
    """

    __slots__ = ("min_exp", "trunc", "coeffs", "var")

    def __init__(self, coeffs: Mapping[int, object] | Sequence, trunc: int, min_exp: int | None = None, var: str = "z"):
        if isinstance(coeffs, Mapping):
            items = {e: c for e, c in coeffs.items() if e <= trunc}
            lo = min(items, default=trunc) if min_exp is None else min_exp
            lo = min(lo, trunc)
            vals = [items.get(e, Fraction(0)) for e in range(lo, trunc + 1)]
        else:
            lo = 0 if min_exp is None else min_exp
            vals = list(coeffs)[: max(0, trunc - lo + 1)]
            vals += [Fraction(0)] * (trunc - lo + 1 - len(vals))
        object.__setattr__(self, "min_exp", lo)
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "coeffs", tuple(_exact(v) for v in vals))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # constructors
    @classmethod
    def zero(cls, trunc: int) -> "LaurentSeries":
        return cls({}, trunc, min_exp=trunc)

    @classmethod
    def constant(cls, c, trunc: int) -> "LaurentSeries":
        return cls({0: c}, trunc, min_exp=min(0, trunc))

    @classmethod
    def monomial(cls, e: int, trunc: int, c=1) -> "LaurentSeries":
        return cls({e: Fraction(c)}, trunc, min_exp=min(e, trunc))

    @classmethod
    def exp_linear(cls, a, trunc: int) -> "LaurentSeries":
        """e^{a z} to order ``trunc``."""
        a = Fraction(a)
        return cls([a**k / factorial(k) for k in range(trunc + 1)], trunc, min_exp=0)

    # inspection
    def coeff(self, e: int):
        if e > self.trunc:
            raise IndexError(f"coefficient z^{e} beyond truncation {self.trunc}")
        if e < self.min_exp:
            return Fraction(0)
        return self.coeffs[e - self.min_exp]

    def items(self):
        for k, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + k, c

    def valuation(self) -> int:
        """Lowest exponent with nonzero coefficient (trunc + 1 if none)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return self.min_exp + k
        return self.trunc + 1

    def is_zero(self) -> bool:
        return self.valuation() > self.trunc

    def normalized(self) -> "LaurentSeries":
        v = self.valuation()
        return LaurentSeries(dict(self.items()), self.trunc, min_exp=min(v, self.trunc), var=self.var)

    def truncate(self, trunc: int) -> "LaurentSeries":
        if trunc > self.trunc:
            raise ValueError(f"cannot raise truncation from {self.trunc} to {trunc}")
        return LaurentSeries(dict(self.items()), trunc, min_exp=min(self.min_exp, trunc), var=self.var)

    # arithmetic
    def _lift(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return other
        return LaurentSeries.constant(other, self.trunc)

    def __add__(self, other):
        if not isinstance(other, (LaurentSeries, int, Fraction, Cyclotomic)):
            return NotImplemented
        o = self._lift(other)
        trunc = min(self.trunc, o.trunc)
        out: dict[int, object] = {}
        for e, c in list(self.items()) + list(o.items()):
            if e <= trunc:
                out[e] = out.get(e, Fraction(0)) + c
        return LaurentSeries(out, trunc, min_exp=min(self.min_exp, o.min_exp, trunc), var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries([-c for c in self.coeffs], self.trunc, self.min_exp, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return LaurentSeries([c * other for c in self.coeffs], self.trunc, self.min_exp, self.var)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        va, vb = self.valuation(), other.valuation()
        trunc = min(self.trunc + min(vb, other.trunc + 1), other.trunc + min(va, self.trunc + 1))
        out: dict[int, object] = {}
        for ea, ca in self.items():
            for eb, cb in other.items():
                e = ea + eb
                if e <= trunc:
                    out[e] = out.get(e, Fraction(0)) + ca * cb
        return LaurentSeries(out, trunc, min_exp=min(va + vb, trunc), var=self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * series_invert(other)
        return self * (1 / Fraction(other) if isinstance(other, int) else 1 / other)

    def __rtruediv__(self, other):
        return series_invert(self) * other

    def __pow__(self, k: int):
        if k < 0:
            return series_invert(self) ** (-k)
        out = LaurentSeries.constant(1, self.trunc - (self.valuation() * 0))
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by z^k."""
        return LaurentSeries(self.coeffs, self.trunc + k, self.min_exp + k, self.var)

    def rescale(self, a) -> "LaurentSeries":
        """Substitute z -> a z (a nonzero rational)."""
        a = Fraction(a)
        return LaurentSeries({e: c * a**e for e, c in self.items()}, self.trunc, self.min_exp, self.var)

    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return self.trunc == other.trunc and dict(self.items()) == dict(other.items())
        if isinstance(other, (int, Fraction)):
            return dict(self.items()) == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.trunc, tuple(self.items())))

    def agrees(self, other: "LaurentSeries", order: int | None = None) -> bool:
        """Coefficientwise equality up to ``order`` (default: common truncation)."""
        order = min(self.trunc, other.trunc) if order is None else order
        lo = min(self.min_exp, other.min_exp)
        return all(self.coeff(e) == other.coeff(e) for e in range(lo, order + 1))

    def __repr__(self):
        return f"LaurentSeries({self.to_string()})"

    def to_string(self) -> str:
        terms = []
        for e, c in self.items():
            cs = str(c)
            if e == 0:
                terms.append(cs)
            else:
                terms.append(f"{cs}*{self.var}^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.var}^{self.trunc + 1})"

    def to_json(self) -> dict:
        return {
            "min_exp": self.min_exp,
            "trunc": self.trunc,
            "coeffs": [_scalar_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: Mapping, var: str = "z") -> "LaurentSeries":
        return cls([_scalar_from_json(c) for c in data["coeffs"]], int(data["trunc"]), int(data["min_exp"]), var)


def _scalar_json(c):
    if isinstance(c, Cyclotomic):
        return c.to_json()
    return _frac_str(Fraction(c))


def _scalar_from_json(c):
    if isinstance(c, Mapping):
        return Cyclotomic.from_json(c)
    return Fraction(c)


def series_invert(f: LaurentSeries) -> LaurentSeries:
    v = f.valuation()
    if v > f.trunc:
        raise ZeroDivisionError("series is zero to its truncation")
    prec = f.trunc - v
    c = [f.coeff(v + k) for k in range(prec + 1)]
    inv0 = 1 / c[0]
    d = [inv0]
    for k in range(1, prec + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if c[j]:
                acc = acc + c[j] * d[k - j]
        d.append(-inv0 * acc)
    return LaurentSeries(d, -v + prec, -v, f.var)


def series_exp(f):
    """exp(f) for f without constant or principal part."""
    if isinstance(f, MultiSeries):
        return f.exp()
    if f.valuation() < 1:
        raise ValueError("series_exp needs a series with no constant or negative-exponent terms")
    n = f.trunc
    g = [Fraction(1)]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            fj = f.coeff(j)
            if fj:
                acc = acc + j * fj * g[k - j]
        g.append(acc / k)
    return LaurentSeries(g, n, 0, f.var)


# ---------------------------------------------------------------------------
# multivariate truncated power series
# ---------------------------------------------------------------------------


class MultiSeries:
    """Power series in ordered variables, truncated at total degree ``trunc``.

    ``terms`` maps exponent tuples (aligned with ``variables``) to nonzero scalars.
    """

    __slots__ = ("variables", "terms", "trunc")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object], trunc: int):
        variables = tuple(variables)
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError("exponent vector length does not match variables")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponents are not supported")
            if sum(exps) <= trunc and c:
                clean[exps] = _exact(c)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, name, value):
        raise AttributeError("MultiSeries is immutable")

    @classmethod
    def constant(cls, variables, c, trunc: int) -> "MultiSeries":
        return cls(variables, {(0,) * len(tuple(variables)): c}, trunc)

    @classmethod
    def variable(cls, variables, name: str, trunc: int, c=1) -> "MultiSeries":
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise KeyError(name)
        return cls(variables, {exps: c}, trunc)

    @classmethod
    def from_univariate(cls, f: LaurentSeries, variables, name: str, trunc: int | None = None) -> "MultiSeries":
        variables = tuple(variables)
        if f.valuation() < 0:
            raise ValueError("principal part cannot be embedded")
        trunc = f.trunc if trunc is None else trunc
        if trunc > f.trunc:
            raise ValueError("univariate series not known to the requested degree")
        idx = variables.index(name)
        terms = {}
        for e, c in f.items():
            exps = [0] * len(variables)
            exps[idx] = e
            terms[tuple(exps)] = c
        return cls(variables, terms, trunc)

    def with_variables(self, variables: Sequence[str]) -> "MultiSeries":
        """Re-express over a superset of variables."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.variables]
        terms = {}
        for exps, c in self.terms.items():
            e = [0] * len(variables)
            for p, x in zip(pos, exps):
                e[p] = x
            terms[tuple(e)] = c
        return MultiSeries(variables, terms, self.trunc)

    def _align(self, other: "MultiSeries") -> tuple["MultiSeries", "MultiSeries"]:
        if self.variables == other.variables:
            return self, other
        merged = tuple(sorted(set(self.variables) | set(other.variables)))
        return self.with_variables(merged), other.with_variables(merged)

    def _lift(self, other):
        if isinstance(other, MultiSeries):
            return other
        return MultiSeries.constant(self.variables, other, self.trunc)

    def __add__(self, other):
        if not isinstance(other, (MultiSeries, int, Fraction, Cyclotomic)):
            return NotImplemented
        a, b = self._align(self._lift(other))
        trunc = min(a.trunc, b.trunc)
        out = dict(a.terms)
        for k, c in b.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return MultiSeries(a.variables, out, trunc)

    __radd__ = __add__

    def __neg__(self):
        return MultiSeries(self.variables, {k: -c for k, c in self.terms.items()}, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return MultiSeries(self.variables, {k: c * other for k, c in self.terms.items()}, self.trunc)
        if not isinstance(other, MultiSeries):
            return NotImplemented
        a, b = self._align(other)
        va, vb = a.lowest_degree(), b.lowest_degree()
        trunc = min(a.trunc + min(vb, b.trunc + 1), b.trunc + min(va, a.trunc + 1))
        out: dict[tuple, object] = {}
        for ka, ca in a.terms.items():
            da = sum(ka)
            for kb, cb in b.terms.items():
                if da + sum(kb) > trunc:
                    continue
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return MultiSeries(a.variables, out, trunc)

    __rmul__ = __mul__

    def lowest_degree(self) -> int:
        return min((sum(k) for k in self.terms), default=self.trunc + 1)

    def truncate(self, trunc: int) -> "MultiSeries":
        if trunc > self.trunc:
            raise ValueError(f"cannot raise truncation from {self.trunc} to {trunc}")
        return MultiSeries(self.variables, self.terms, trunc)

    def exp(self) -> "MultiSeries":
        if any(sum(k) == 0 for k in self.terms):
            raise ValueError("exp needs a series without constant term")
        result = MultiSeries.constant(self.variables, 1, self.trunc)
        power = MultiSeries.constant(self.variables, 1, self.trunc)
        for d in range(1, self.trunc + 1):
            power = power * self * Fraction(1, d)
            if not power.terms:
                break
            result = result + power
        return result

    def diff(self, name: str) -> "MultiSeries":
        idx = self.variables.index(name)
        out = {}
        for k, c in self.terms.items():
            if k[idx]:
                nk = list(k)
                nk[idx] -= 1
                out[tuple(nk)] = c * k[idx]
        return MultiSeries(self.variables, out, self.trunc - 1)

    def rescale(self, factors: Mapping[str, object]) -> "MultiSeries":
        """Substitute v -> a_v * v for the given variables."""
        scale = [Fraction(factors.get(v, 1)) for v in self.variables]
        out = {}
        for k, c in self.terms.items():
            f = Fraction(1)
            for a, e in zip(scale, k):
                if e:
                    f *= a**e
            out[k] = c * f
        return MultiSeries(self.variables, out, self.trunc)

    def rename(self, mapping: Mapping[str, str]) -> "MultiSeries":
        return MultiSeries(tuple(mapping.get(v, v) for v in self.variables), self.terms, self.trunc)

    def substitute_zero(self, names: Iterable[str]) -> "MultiSeries":
        idx = [self.variables.index(n) for n in names]
        return MultiSeries(
            self.variables,
            {k: c for k, c in self.terms.items() if all(k[i] == 0 for i in idx)},
            self.trunc,
        )

    def coeff(self, monomial: Mapping[str, int]):
        key = tuple(monomial.get(v, 0) for v in self.variables)
        if sum(key) > self.trunc:
            raise IndexError("monomial beyond truncation")
        return self.terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MultiSeries):
            a, b = self._align(other)
            return a.trunc == b.trunc and a.terms == b.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiSeries.constant(self.variables, other, self.trunc)
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, self.trunc, frozenset(self.terms.items())))

    def agrees(self, other: "MultiSeries", trunc: int | None = None) -> bool:
        a, b = self._align(other)
        trunc = min(a.trunc, b.trunc) if trunc is None else trunc
        ta = {k: c for k, c in a.terms.items() if sum(k) <= trunc}
        tb = {k: c for k, c in b.terms.items() if sum(k) <= trunc}
        return ta == tb

    def monomial_string(self, exps: tuple) -> str:
        parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e]
        return "*".join(parts) if parts else "1"

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k in sorted(self.terms, key=lambda k: (sum(k), tuple(-x for x in k))):
            c = self.terms[k]
            m = self.monomial_string(k)
            out.append(str(c) if m == "1" else (m if c == 1 else f"{c}*{m}"))
        return " + ".join(out)

    def __repr__(self):
        return f"MultiSeries({self.to_string()}; deg<={self.trunc})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "trunc": self.trunc,
            "terms": [
                {"exponents": list(k), "coeff": _scalar_json(c)}
                for k, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiSeries":
        return cls(
            data["variables"],
            {tuple(t["exponents"]): _scalar_from_json(t["coeff"]) for t in data["terms"]},
            int(data["trunc"]),
        )
