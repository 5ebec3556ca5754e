"""Truncated cycle indices: power-sum series with Laurent weights in t.

A cycle index is stored in the class-function basis. For each pair
(partition lam, t-exponent j) we keep the value c with

    Z = sum c * t^j * p_lam / z_lam,

so c is the character (fixed-structure count) on the class lam and stays an
integer for every series coming from a species. Coefficients in the p basis
are c / z_lam. Values are ints, or Fractions when they are not integral.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Mapping

from .errors import DomainError
from .partitions import Partition, partitions_upto, z_lambda

Key = tuple[Partition, int]
Number = int | Fraction

DEFAULT_DEGREE = 7
T_FLOOR = -1


def _norm(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


@lru_cache(maxsize=None)
def _merge(lam: Partition, mu: Partition) -> tuple[Partition, int]:
    """lam u mu and the factor z_(lam u mu) / (z_lam z_mu)."""
    nu = tuple(sorted(lam + mu, reverse=True))
    a, b = Counter(lam), Counter(mu)
    factor = prod(comb(a[i] + b[i], a[i]) for i in a if i in b)
    return nu, factor


@lru_cache(maxsize=None)
def _z(lam: Partition) -> int:
    return z_lambda(lam)


class CycleIndex:
    """An element of the truncated ring, immutable by convention."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Mapping[Key, Number] | None = None):
        if N < 0:
            raise DomainError("truncation degree must be non-negative")
        self.N = N
        clean: dict[Key, Number] = {}
        for (lam, j), v in (coeffs or {}).items():
            lam = tuple(sorted(lam, reverse=True))
            if sum(lam) <= N and v:
                clean[(lam, j)] = _norm(v)
        self.coeffs = clean

    # ------------------------------------------------------ constructors

    @classmethod
    def zero(cls, N: int = DEFAULT_DEGREE) -> CycleIndex:
        return cls(N)

    @classmethod
    def const(cls, c: Number, N: int = DEFAULT_DEGREE, tpow: int = 0) -> CycleIndex:
        return cls(N, {((), tpow): c})

    @classmethod
    def p(cls, *parts: int, N: int = DEFAULT_DEGREE, coeff: Number = 1, tpow: int = 0) -> CycleIndex:
        """The monomial coeff * t^tpow * p_parts."""
        lam = tuple(sorted(parts, reverse=True))
        return cls(N, {(lam, tpow): Fraction(coeff) * _z(lam)})

    @classmethod
    def from_p_coeffs(cls, N: int, coeffs: Mapping[Key, Number]) -> CycleIndex:
        """Build from coefficients in the p basis."""
        out: dict[Key, Number] = {}
        for (lam, j), v in coeffs.items():
            lam = tuple(sorted(lam, reverse=True))
            key = (lam, j)
            out[key] = out.get(key, 0) + Fraction(v) * _z(lam)
        return cls(N, out)

    @classmethod
    def from_characters(cls, N: int, values: Mapping[Key, Number]) -> CycleIndex:
        """Build from class-function values (fixed-structure counts)."""
        return cls(N, values)

    # ------------------------------------------------------ accessors

    def value(self, lam: Partition, tpow: int = 0) -> Number:
        return self.coeffs.get((tuple(lam), tpow), 0)

    def p_coeff(self, lam: Partition, tpow: int = 0) -> Fraction:
        return Fraction(self.value(lam, tpow)) / _z(tuple(lam))

    def tpows(self) -> list[int]:
        return sorted({j for _, j in self.coeffs})

    def is_weighted(self) -> bool:
        return any(j != 0 for _, j in self.coeffs)

    def min_degree(self) -> int | None:
        return min((sum(lam) for lam, _ in self.coeffs), default=None)

    def degree_part(self, n: int) -> CycleIndex:
        return CycleIndex(self.N, {k: v for k, v in self.coeffs.items() if sum(k[0]) == n})

    def truncate(self, N: int) -> CycleIndex:
        return CycleIndex(min(N, self.N), self.coeffs)

    def at_t1(self) -> CycleIndex:
        out: dict[Key, Number] = {}
        for (lam, _), v in self.coeffs.items():
            out[(lam, 0)] = out.get((lam, 0), 0) + v
        return CycleIndex(self.N, out)

    # ------------------------------------------------------ ring operations

    def _check(self, other: CycleIndex) -> None:
        if not isinstance(other, CycleIndex):
            raise TypeError(f"expected a CycleIndex, got {type(other).__name__}")
        if other.N != self.N:
            raise DomainError(f"truncation degrees differ: {self.N} vs {other.N}")

    def _coerce(self, other) -> CycleIndex:
        if isinstance(other, (int, Fraction)):
            return CycleIndex.const(other, self.N)
        self._check(other)
        return other

    def __add__(self, other) -> CycleIndex:
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return CycleIndex(self.N, out)

    __radd__ = __add__

    def __neg__(self) -> CycleIndex:
        return CycleIndex(self.N, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other) -> CycleIndex:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> CycleIndex:
        return self._coerce(other) - self

    def scale(self, c: Number) -> CycleIndex:
        return CycleIndex(self.N, {k: v * c for k, v in self.coeffs.items()})

    def times_t(self, a: int = 1) -> CycleIndex:
        """Multiply by t^a."""
        return CycleIndex(self.N, {(lam, j + a): v for (lam, j), v in self.coeffs.items()})

    def __mul__(self, other) -> CycleIndex:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        N = self.N
        out: dict[Key, Number] = {}
        right = sorted(other.coeffs.items(), key=lambda kv: sum(kv[0][0]))
        for (lam, i), a in self.coeffs.items():
            room = N - sum(lam)
            for (mu, j), b in right:
                if sum(mu) > room:
                    break
                nu, f = _merge(lam, mu)
                key = (nu, i + j)
                out[key] = out.get(key, 0) + a * b * f
        return CycleIndex(N, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycleIndex:
        if e < 0:
            raise DomainError("negative powers are not defined")
        out = CycleIndex.const(1, self.N)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleIndex):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.N, frozenset(self.coeffs.items())))

    # ------------------------------------------------------ p1 calculus

    def partial_p1(self) -> CycleIndex:
        """d/dp1. In class values: value at lam equals the old value at lam + (1)."""
        out = {}
        for (lam, j), v in self.coeffs.items():
            if lam and lam[-1] == 1:
                out[(lam[:-1], j)] = v
        return CycleIndex(self.N, out)

    def mul_p1(self) -> CycleIndex:
        out = {}
        for (lam, j), v in self.coeffs.items():
            if sum(lam) < self.N:
                nu = lam + (1,)
                out[(nu, j)] = v * nu.count(1)
        return CycleIndex(self.N, out)

    def div_p1(self) -> CycleIndex:
        """Exact division by p1; every monomial must contain p1.

        The top degree is lost, so the result is only reliable to degree N - 1.
        """
        out = {}
        for (lam, j), v in self.coeffs.items():
            if not lam or lam[-1] != 1:
                raise DomainError(f"p_{lam} is not divisible by p1")
            out[(lam[:-1], j)] = Fraction(v, lam.count(1))
        return CycleIndex(self.N, out)

    # ------------------------------------------------------ plethysm

    def adams(self, k: int) -> CycleIndex:
        """p_i -> p_(k i), t -> t^k."""
        out = {}
        for (lam, j), v in self.coeffs.items():
            if k * sum(lam) <= self.N:
                out[(tuple(k * x for x in lam), k * j)] = v * k ** len(lam)
        return CycleIndex(self.N, out)

    def __call__(self, g: CycleIndex) -> CycleIndex:
        return plethysm(self, g)

    def suspension(self, weighted: bool = True) -> CycleIndex:
        """Sigma_t f = -(1/t) f(-t p1, -t^2 p2, ...); plain Sigma leaves t alone."""
        out = {}
        for (lam, j), v in self.coeffs.items():
            sign = -1 if len(lam) % 2 == 0 else 1
            tj = j + sum(lam) - 1 if weighted else j
            if weighted and tj < T_FLOOR:
                raise DomainError(f"suspension would create t^{tj}, below t^{T_FLOOR}")
            out[(lam, tj)] = sign * v
        return CycleIndex(self.N, out)

    # ------------------------------------------------------ output

    def terms(self) -> list[tuple[Partition, int, Fraction]]:
        """(lam, j, p-basis coefficient), by degree then partition then t-power."""
        keys = sorted(self.coeffs, key=lambda k: (sum(k[0]), k[0], k[1]))
        return [(lam, j, self.p_coeff(lam, j)) for lam, j in keys]

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"CycleIndex(N={self.N}, {format_series(self)})"


# ---------------------------------------------------------------- plethysm


def plethysm(f: CycleIndex, g: CycleIndex) -> CycleIndex:
    """f o g: p_k -> g with p_i -> p_(k i) and t -> t^k. Constants of f pass through."""
    f._check(g)
    if any(not lam for lam, _ in g.coeffs):
        raise DomainError("the inner series of a plethysm must have no constant term")
    N = f.N
    adams: dict[int, CycleIndex] = {}
    products: dict[Partition, CycleIndex] = {(): CycleIndex.const(1, N)}

    def product_for(lam: Partition) -> CycleIndex:
        if lam not in products:
            k = lam[-1]
            if k not in adams:
                adams[k] = g.adams(k)
            products[lam] = product_for(lam[:-1]) * adams[k]
        return products[lam]

    out: dict[Key, Number] = {}
    for (lam, j), c in sorted(f.coeffs.items(), key=lambda kv: kv[0]):
        G = product_for(lam)
        if not G.coeffs:
            continue
        w = Fraction(c, _z(lam))
        for (mu, i), v in G.coeffs.items():
            key = (mu, i + j)
            out[key] = out.get(key, 0) + w * v
    return CycleIndex(N, out)


def suspension(f: CycleIndex, weighted: bool = True) -> CycleIndex:
    return f.suspension(weighted)


def partial_p1(f: CycleIndex) -> CycleIndex:
    return f.partial_p1()


def plethystic_inverse(f: CycleIndex) -> CycleIndex:
    """g with f o g = g o f = p1, by N rounds of g <- p1 - (f - p1) o g."""
    N = f.N
    p1 = CycleIndex.p(1, N=N)
    low = [k for k in f.coeffs if sum(k[0]) <= 1]
    if {k: f.coeffs[k] for k in low} != p1.coeffs:
        raise DomainError("plethystic inverse needs a series starting with exactly p1")
    rest = f - p1
    g = p1
    for _ in range(N):
        g = p1 - plethysm(rest, g)
    return g


# ---------------------------------------------------------------- characters


def extract_character(Z: CycleIndex, lam: Partition):
    """Character value on the class lam: z_lam [p_lam] Z.

    A plain number for unweighted series, otherwise a {t-exponent: value} dict.
    """
    lam = tuple(sorted(lam, reverse=True))
    if sum(lam) > Z.N:
        raise DomainError(f"|{lam}| exceeds the truncation degree {Z.N}")
    by_t = {j: v for (mu, j), v in Z.coeffs.items() if mu == lam}
    if not Z.is_weighted():
        return by_t.get(0, 0)
    return dict(sorted(by_t.items()))


def egf(Z: CycleIndex) -> dict[int, dict[int, Fraction]]:
    """Specialize p1 = x, p_k = 0 (k >= 2): {n: {t-exponent: [x^n] coefficient}}."""
    out: dict[int, dict[int, Fraction]] = {}
    for (lam, j), v in Z.coeffs.items():
        if all(x == 1 for x in lam):
            n = len(lam)
            out.setdefault(n, {})[j] = Fraction(v, factorial(n))
    return {n: dict(sorted(d.items())) for n, d in sorted(out.items())}


def egf_plain(Z: CycleIndex) -> dict[int, Fraction]:
    """egf at t = 1 as {n: coefficient of x^n}."""
    return {n: sum(d.values(), Fraction(0)) for n, d in egf(Z).items() if sum(d.values())}


# ---------------------------------------------------------------- comparison


def first_difference(f: CycleIndex, g: CycleIndex, degree: int | None = None) -> tuple[Key, Number, Number] | None:
    """The first monomial (in print order) where f and g differ, up to ``degree``."""
    d = min(f.N, g.N) if degree is None else degree
    keys = {k for k in f.coeffs if sum(k[0]) <= d} | {k for k in g.coeffs if sum(k[0]) <= d}
    for key in sorted(keys, key=lambda k: (sum(k[0]), k[0], k[1])):
        a, b = f.coeffs.get(key, 0), g.coeffs.get(key, 0)
        if a != b:
            return key, a, b
    return None


def agree(f: CycleIndex, g: CycleIndex, degree: int | None = None) -> bool:
    return first_difference(f, g, degree) is None


# ---------------------------------------------------------------- printing


def _monomial(lam: Partition, j: int) -> list[str]:
    parts = [] if j == 0 else [f"t^{j}"]
    for i, m in sorted(Counter(lam).items()):
        parts.append(f"p{i}" if m == 1 else f"p{i}^{m}")
    return parts


def format_series(Z: CycleIndex) -> str:
    """Canonical text, e.g. ``p1 + 1/2*p1^2 + 1/2*p2 + 1/2*t^1*p1*p2``."""
    pieces = []
    for lam, j, c in Z.terms():
        factors = _monomial(lam, j)
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces) if pieces else "0"


def to_json(Z: CycleIndex) -> str:
    """JSON array of {partition, tpow, num, den} in print order (p-basis coefficients)."""
    rows = [
        {"partition": list(lam), "tpow": j, "num": c.numerator, "den": c.denominator}
        for lam, j, c in Z.terms()
    ]
    return json.dumps(rows)


def from_json(text: str, N: int = DEFAULT_DEGREE) -> CycleIndex:
    terms = [(tuple(r["partition"]), int(r["tpow"]), Fraction(r["num"], r["den"])) for r in json.loads(text)]
    return from_terms(N, terms)


def from_terms(N: int, terms: Iterable[tuple[Partition, int, Number]]) -> CycleIndex:
    """From (lam, t-exponent, p-basis coefficient) triples."""
    coeffs: dict[Key, Number] = {}
    for lam, j, c in terms:
        key = (tuple(sorted(lam, reverse=True)), j)
        coeffs[key] = coeffs.get(key, 0) + c
    return CycleIndex.from_p_coeffs(N, coeffs)


def all_partitions(N: int) -> tuple[Partition, ...]:
    return partitions_upto(N)
