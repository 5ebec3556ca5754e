"""From fixed-chain counts to cycle indices, and interpolation in the chain length k.

For fixed n, variant and class, the number of fixed large k-chains is a
polynomial in k. It is sampled at k = 1..n+1 (plus k = 0 for the plain
variant, where the empty chain is counted directly), interpolated exactly,
and checked at k = n+2. Evaluating at k = 0 or k = -1 gives the cycle
indices that the algebraic identities talk about.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cycle_index import DEFAULT_DEGREE, CycleIndex
from .errors import DomainError, StabilityError
from .partitions import Partition, partitions, representative
from .poset import HOLLOW, VARIANTS, ChainSpec, chain_counts, count_large_chains

Poly = tuple[Fraction, ...]  # ascending coefficients in k


# ---------------------------------------------------------------- polynomials


def interpolate(points: list[tuple[int, int]]) -> Poly:
    """Least-degree polynomial through the points, exact (Newton form expanded)."""
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    coef = [table[0]]
    for level in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        coef.append(table[0])
    # expand sum coef[i] * prod_{j<i} (k - x_j)
    poly = [Fraction(0)] * len(xs)
    basis = [Fraction(1)]
    for i, c in enumerate(coef):
        for d, b in enumerate(basis):
            poly[d] += c * b
        if i < len(xs) - 1:
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, b in enumerate(basis):
                nxt[d + 1] += b
                nxt[d] -= xs[i] * b
            basis = nxt
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def poly_eval(poly: Poly, k: int | Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(poly):
        out = out * k + c
    return out


def poly_degree(poly: Poly) -> int:
    return len(poly) - 1


# ---------------------------------------------------------------- counts


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise DomainError(f"unknown chain variant {variant!r}")


def _as_weighted(value, weighted: bool) -> dict[int, int]:
    return dict(value) if weighted else {0: value}


def cycle_index_from_counts(n: int, spec: ChainSpec, N: int | None = None) -> CycleIndex:
    """Degree-n slice sum_lam count(sigma_lam) t^j p_lam / z_lam of a directly counted k."""
    if spec.n != n:
        raise DomainError("spec is for a different n")
    N = max(n, DEFAULT_DEGREE) if N is None else N
    values = {}
    for lam in partitions(n):
        for j, c in _as_weighted(count_large_chains(spec, representative(lam)), spec.weighted).items():
            values[(lam, j)] = c
    return CycleIndex(N, values)


@dataclass(frozen=True)
class KPolynomial:
    """Per (class, t-exponent) polynomials in k for one (n, variant, weighting)."""

    n: int
    variant: str
    weighted: bool
    polys: dict[tuple[Partition, int], Poly]
    degree_bound: int

    def evaluate(self, lam: Partition, k: int, tpow: int = 0) -> Fraction:
        return poly_eval(self.polys.get((tuple(lam), tpow), ()), k)

    def max_degree(self) -> int:
        return max((poly_degree(p) for p in self.polys.values()), default=-1)


def degree_bound(n: int, variant: str) -> int:
    return max(n - 2, 0) if variant == "plain" else max(n - 1, 0)


@lru_cache(maxsize=None)
def character_polynomial(n: int, variant: str = "plain", weighted: bool = False) -> KPolynomial:
    """Interpolate fixed-chain counts in k, with a stability guard at k = n + 2."""
    _check_variant(variant)
    if n < 1:
        raise DomainError("n must be positive")
    kmax = n + 2
    bound = degree_bound(n, variant)
    polys: dict[tuple[Partition, int], Poly] = {}
    for lam in partitions(n):
        perm = representative(lam)
        samples = chain_counts(n, variant, perm, kmax, weighted)
        series = [_as_weighted(s, weighted) for s in samples]
        if variant == "plain":
            series.insert(0, _as_weighted(count_large_chains(ChainSpec(n, 0, variant, weighted), perm), weighted))
            ks = list(range(0, kmax + 1))
        else:
            ks = list(range(1, kmax + 1))
        for j in sorted({j for s in series for j in s}):
            ys = [s.get(j, 0) for s in series]
            poly = interpolate(list(zip(ks[:-1], ys[:-1])))
            if poly_eval(poly, ks[-1]) != ys[-1]:
                raise StabilityError(f"n={n} {variant} class {lam} t^{j}: guard at k={ks[-1]} failed")
            if poly_degree(poly) > bound:
                raise StabilityError(f"n={n} {variant} class {lam} t^{j}: degree {poly_degree(poly)} > {bound}")
            if poly:
                polys[(lam, j)] = poly
    return KPolynomial(n, variant, weighted, polys, bound)


def evaluate_at(kp: KPolynomial, k0: int, N: int | None = None) -> CycleIndex:
    """The degree-n cycle-index slice of the chains at k = k0 (any integer)."""
    N = max(kp.n, DEFAULT_DEGREE) if N is None else N
    values = {key: poly_eval(p, k0) for key, p in kp.polys.items()}
    return CycleIndex(N, values)


# ---------------------------------------------------------------- series


def max_chain_n(variant: str) -> int:
    """Largest n whose poset fits the desk-scale bound."""
    return 5 if variant in HOLLOW else 6


def chain_slice(n: int, variant: str, k: int, weighted: bool = False, N: int | None = None) -> CycleIndex:
    """Degree-n slice at chain length k; direct counts for k >= 1, interpolation otherwise."""
    N = max(n, DEFAULT_DEGREE) if N is None else N
    if k >= 1 or (k == 0 and variant == "plain"):
        return cycle_index_from_counts(n, ChainSpec(n, k, variant, weighted), N)
    return evaluate_at(character_polynomial(n, variant, weighted), k, N)


@lru_cache(maxsize=None)
def chain_series(variant: str, k: int, N: int, weighted: bool = False) -> CycleIndex:
    """sum over n = 1..N of the degree-n slices: the cycle index of k-chains truncated at N."""
    _check_variant(variant)
    if N > max_chain_n(variant):
        raise DomainError(f"{variant} chains are available up to degree {max_chain_n(variant)}")
    out = CycleIndex.zero(N)
    for n in range(1, N + 1):
        out = out + chain_slice(n, variant, k, weighted, N)
    return out
