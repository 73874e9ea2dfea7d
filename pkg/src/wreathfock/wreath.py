"""Brute-force model of the wreath product (Z/r)^n x| S_n.

This is the slow oracle: elements are enumerated explicitly and class
functions are convolved by summing over the whole group.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Callable, Iterable, Mapping

from .exactnum import Cyclotomic
from .partitions import (
    MultiPartition,
    enumerate_multipartitions,
    identity_type,
    make_multipartition,
    mp_from_json,
    mp_to_json,
)

MAX_GROUP_ORDER = 10**5


class GuardError(ValueError):
    """Raised when a brute-force computation would enumerate too many elements."""


def group_order(r: int, n: int) -> int:
    return r**n * factorial(n)


def check_guard(r: int, n: int) -> None:
    if group_order(r, n) > MAX_GROUP_ORDER:
        raise GuardError(f"|Gamma_{n}| = {group_order(r, n)} exceeds the oracle guard {MAX_GROUP_ORDER}")


class WreathElement:
    """(g, sigma) with g a color vector and sigma a permutation of 0..n-1.

    ``perm[j]`` is sigma(j).  The product is (g, s)(h, t) = (g + s(h), s t)
    where s(h)_j = h_{s^{-1}(j)}.
    """

    __slots__ = ("r", "colors", "perm")

    def __init__(self, r: int, colors: Iterable[int], perm: Iterable[int]):
        colors = tuple(c % r for c in colors)
        perm = tuple(perm)
        if len(colors) != len(perm) or sorted(perm) != list(range(len(perm))):
            raise ValueError("colors and perm must have the same length n and perm must be a bijection")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "perm", perm)

    def __setattr__(self, name, value):
        raise AttributeError("WreathElement is immutable")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, r: int, n: int) -> "WreathElement":
        return cls(r, (0,) * n, range(n))

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return WreathElement(self.r, *_mul(self.r, self.colors, self.perm, other.colors, other.perm))

    def inverse(self) -> "WreathElement":
        return WreathElement(self.r, *_inv(self.r, self.colors, self.perm))

    def __eq__(self, other):
        return isinstance(other, WreathElement) and (self.r, self.colors, self.perm) == (other.r, other.colors, other.perm)

    def __hash__(self):
        return hash((self.r, self.colors, self.perm))

    def __repr__(self):
        return f"WreathElement(r={self.r}, colors={self.colors}, perm={self.perm})"

    def key(self) -> tuple:
        return (self.colors, self.perm)


def _mul(r, g, s, h, t):
    n = len(s)
    inv_s = [0] * n
    for j, sj in enumerate(s):
        inv_s[sj] = j
    colors = tuple((g[j] + h[inv_s[j]]) % r for j in range(n))
    perm = tuple(s[t[j]] for j in range(n))
    return colors, perm


def _inv(r, g, s):
    # (g, s)^{-1} = (-s^{-1}(g), s^{-1})
    n = len(s)
    inv_s = [0] * n
    for j, sj in enumerate(s):
        inv_s[sj] = j
    colors = tuple((-g[s[j]]) % r for j in range(n))
    return colors, tuple(inv_s)


def _type(r, g, s) -> MultiPartition:
    n = len(s)
    seen = [False] * n
    comps: list[list[int]] = [[] for _ in range(r)]
    for start in range(n):
        if seen[start]:
            continue
        j, length, total = start, 0, 0
        while not seen[j]:
            seen[j] = True
            total += g[j]
            length += 1
            j = s[j]
        comps[total % r].append(length)
    return make_multipartition(comps)


def element_type(x: WreathElement) -> MultiPartition:
    """Cycle lengths of sigma sorted into components by cycle-product color."""
    return _type(x.r, x.colors, x.perm)


def elements(r: int, n: int) -> Iterable[WreathElement]:
    check_guard(r, n)
    for perm in permutations(range(n)):
        for colors in product(range(r), repeat=n):
            yield WreathElement(r, colors, perm)


@lru_cache(maxsize=32)
def _group_table(r: int, n: int):
    """Element keys with their types and inverses, cached per (r, n)."""
    check_guard(r, n)
    keys = [(c, p) for p in permutations(range(n)) for c in product(range(r), repeat=n)]
    types = {k: _type(r, *k) for k in keys}
    return keys, types


def class_sizes(r: int, n: int) -> dict[MultiPartition, int]:
    keys, types = _group_table(r, n)
    out: dict[MultiPartition, int] = {}
    for k in keys:
        out[types[k]] = out.get(types[k], 0) + 1
    return out


def representative(lam: MultiPartition) -> WreathElement:
    """A fixed element of the given type."""
    r = len(lam)
    colors: list[int] = []
    perm: list[int] = []
    pos = 0
    for i, comp in enumerate(lam):
        for part in comp:
            block = list(range(pos, pos + part))
            perm.extend(block[1:] + block[:1])
            colors.extend([i] + [0] * (part - 1))
            pos += part
    return WreathElement(r, colors, perm)


# --- class functions ---------------------------------------------------------


def _zero(r: int) -> Cyclotomic:
    return Cyclotomic.rational(r, 0)


class ClassFunction:
    """A class function on Gamma_n, stored by conjugacy type."""

    __slots__ = ("r", "n", "values")

    def __init__(self, r: int, n: int, values: Mapping[MultiPartition, object] | None = None):
        vals = {}
        for lam, v in (values or {}).items():
            lam = make_multipartition(lam, r)
            if sum(map(sum, lam)) != n:
                raise ValueError(f"{lam} is not a type of Gamma_{n}")
            v = v if isinstance(v, Cyclotomic) else Cyclotomic.rational(r, v)
            if v:
                vals[lam] = v
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("ClassFunction is immutable")

    def __call__(self, lam: MultiPartition) -> Cyclotomic:
        return self.values.get(lam, _zero(self.r))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        keys = set(self.values) | set(other.values)
        return ClassFunction(self.r, self.n, {k: self(k) + other(k) for k in keys})

    def __sub__(self, other):
        return self + other * (-1)

    def __neg__(self):
        return self * (-1)

    def __mul__(self, c) -> "ClassFunction":
        return ClassFunction(self.r, self.n, {k: v * c for k, v in self.values.items()})

    __rmul__ = __mul__

    def _check(self, other):
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError("class functions live on different groups")

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and (self.r, self.n, self.values) == (other.r, other.n, other.values)

    def __hash__(self):
        return hash((self.r, self.n, frozenset(self.values.items())))

    def is_zero(self) -> bool:
        return not self.values

    def __repr__(self):
        body = ", ".join(f"{mp_to_json(k)}: {v}" for k, v in self.items())
        return f"ClassFunction(r={self.r}, n={self.n}, {{{body}}})"

    def items(self):
        for lam in enumerate_multipartitions(self.n, self.r):
            if lam in self.values:
                yield lam, self.values[lam]

    def to_json(self) -> list:
        return [{"type": mp_to_json(lam), "value": self(lam).to_json()} for lam in enumerate_multipartitions(self.n, self.r)]

    @classmethod
    def from_json(cls, r: int, n: int, data: list) -> "ClassFunction":
        return cls(r, n, {mp_from_json(d["type"]): Cyclotomic.from_json(d["value"]) for d in data})

    @classmethod
    def indicator(cls, lam: MultiPartition) -> "ClassFunction":
        r, n = len(lam), sum(map(sum, lam))
        return cls(r, n, {lam: 1})

    @classmethod
    def identity_indicator(cls, r: int, n: int) -> "ClassFunction":
        return cls(r, n, {identity_type(n, r): 1})


def evaluate(f: ClassFunction, x: WreathElement) -> Cyclotomic:
    if (x.r, x.n) != (f.r, f.n):
        raise ValueError("element and class function live on different groups")
    return f(element_type(x))


def convolve_bruteforce(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """(f o g)(x) = sum_y f(x y^{-1}) g(y), summed over all of Gamma_n."""
    f._check(g)
    r, n = f.r, f.n
    keys, types = _group_table(r, n)
    support = [k for k in keys if types[k] in g.values]
    out = {}
    for lam in enumerate_multipartitions(n, r):
        x = representative(lam).key()
        acc = _zero(r)
        for y in support:
            fy = f.values.get(types[_mul(r, *x, *_inv(r, *y))])
            if fy is not None:
                acc = acc + fy * g.values[types[y]]
        out[lam] = acc
    return ClassFunction(r, n, out)


# --- group algebra -------------------------------------------------------------

GroupAlgebraElement = dict  # key (colors, perm) -> Fraction or Cyclotomic


def ga_mul(r: int, a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    out: dict = {}
    for x, cx in a.items():
        for y, cy in b.items():
            k = _mul(r, *x, *y)
            out[k] = out.get(k, 0) + cx * cy
    return {k: v for k, v in out.items() if v}


def ga_add(a: GroupAlgebraElement, b: GroupAlgebraElement, scale=1) -> GroupAlgebraElement:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def ga_from_class_function(f: ClassFunction) -> GroupAlgebraElement:
    keys, types = _group_table(f.r, f.n)
    return {k: f.values[types[k]] for k in keys if types[k] in f.values}


def ga_to_class_function(r: int, n: int, a: GroupAlgebraElement) -> ClassFunction:
    """Read off a central group-algebra element; raises if it is not central."""
    keys, types = _group_table(r, n)
    vals: dict = {}
    for k in keys:
        c = a.get(k, 0)
        t = types[k]
        if t in vals:
            if vals[t] != c:
                raise ValueError("group algebra element is not central")
        else:
            vals[t] = c
    return ClassFunction(r, n, vals)


def jm_element(r: int, n: int, j: int) -> GroupAlgebraElement:
    """M_j: sum over i < j and g in Gamma of ((g at i, g^{-1} at j), (i j)); j is 1-based."""
    check_guard(r, n)
    out = {}
    for i in range(j - 1):
        perm = list(range(n))
        perm[i], perm[j - 1] = perm[j - 1], perm[i]
        for g in range(r):
            colors = [0] * n
            colors[i] = g
            colors[j - 1] = (-g) % r
            out[(tuple(colors), tuple(perm))] = Fraction(1)
    return out


def local_copy(r: int, n: int, i: int, alpha: Callable[[int], object]) -> GroupAlgebraElement:
    """alpha^{(i)} = (1/r) sum_g alpha(g) g placed in the i-th factor (i 1-based).

    The 1/r makes alpha^{(i)} the central idempotent-style element for which
    gamma_k maps to the class sum of a^k; see ``jm_class_function``.
    """
    out = {}
    for g in range(r):
        colors = [0] * n
        colors[i - 1] = g
        v = alpha(g)
        if v:
            out[(tuple(colors), tuple(range(n)))] = v * Fraction(1, r)
    return out


def gamma_character(r: int, k: int) -> Callable[[int], Cyclotomic]:
    """The irreducible character gamma_k(a^g) = zeta^{k g} of Z/r."""
    return lambda g: Cyclotomic.zeta(r, k * g)


def jm_class_function(r: int, n: int, m: int, alpha: Callable[[int], object], scale=None) -> ClassFunction:
    """Xi_n^m(alpha) = 1/(r^m m!) sum_i M_i^m alpha^{(i)}, expanded in the group algebra.

    ``scale`` overrides the 1/(r^m m!) prefactor.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    check_guard(r, n)
    total: GroupAlgebraElement = {}
    ident = {((0,) * n, tuple(range(n))): Fraction(1)}
    for i in range(1, n + 1):
        mi = jm_element(r, n, i)
        power = ident
        for _ in range(m):
            power = ga_mul(r, power, mi)
        total = ga_add(total, ga_mul(r, power, local_copy(r, n, i, alpha)))
    pref = Fraction(1, r**m * factorial(m)) if scale is None else scale
    total = {k: v * pref for k, v in total.items()}
    return ga_to_class_function(r, n, total)
