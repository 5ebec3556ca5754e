"""Named cycle-index series: Comm, Perm, PreLie, their suspensions and inverses, M, HAL.

Every series is built directly at the requested truncation degree. Fixed
points iterate exactly N times; each round fixes one more degree because the
defining maps raise degree.
"""

from __future__ import annotations

from functools import lru_cache

from .cycle_index import DEFAULT_DEGREE, CycleIndex, plethysm, plethystic_inverse
from .errors import DomainError
from .partitions import partitions_upto

NAMED = (
    "Comm",
    "E",
    "X",
    "Perm",
    "PreLie",
    "SigmaPreLie",
    "Lie",
    "SigmaLie",
    "SigmaW",
    "SigmaW_t",
    "M",
    "HALpA",
    "HALA",
    "HALp",
    "HAL",
)
HAL_TAGS = ("HALpA", "HALA", "HALp", "HAL")
HAL_METHODS = ("fixed-point", "closed-form")


def p1(N: int) -> CycleIndex:
    return CycleIndex.p(1, N=N)


def comm(N: int) -> CycleIndex:
    """Nonempty sets: character 1 on every class of degree >= 1."""
    return CycleIndex(N, {(lam, 0): 1 for lam in partitions_upto(N) if lam})


def prelie(N: int) -> CycleIndex:
    """Labelled rooted trees: R = p1 (1 + Comm o R)."""
    x, c = p1(N), comm(N)
    r = x
    for _ in range(N):
        r = x * (1 + plethysm(c, r))
    return r


def formula_c_minus1(N: int) -> CycleIndex:
    """Comm o SigmaPreLie + p1 (SigmaPreLie + 1)."""
    spl = named_series("SigmaPreLie", N)
    return plethysm(comm(N), spl) + p1(N) * (spl + 1)


def c_minus1_series(N: int) -> CycleIndex:
    """Comm o SigmaPreLie + p1 SigmaPreLie.

    Equal to :func:`formula_c_minus1` except in degree 1, where it has p1
    (one chain on one vertex) instead of 2 p1.
    """
    spl = named_series("SigmaPreLie", N)
    return plethysm(comm(N), spl) + p1(N) * spl


def sigma_w_t(N: int) -> CycleIndex:
    x = p1(N)
    return plethystic_inverse(named_series("Perm", N).times_t(1) - x.times_t(1) + x)


@lru_cache(maxsize=None)
def named_series(tag: str, N: int = DEFAULT_DEGREE) -> CycleIndex:
    if N < 1:
        raise DomainError("truncation degree must be at least 1")
    if tag in HAL_TAGS:
        return hal_series(tag, N)
    if tag == "Comm":
        return comm(N)
    if tag == "E":
        return comm(N) + 1
    if tag == "X":
        return p1(N)
    if tag == "Perm":
        return p1(N) * (1 + comm(N))
    if tag == "PreLie":
        return prelie(N)
    if tag == "SigmaPreLie":
        return prelie(N).suspension(weighted=False)
    if tag == "SigmaLie":
        return plethystic_inverse(comm(N))
    if tag == "Lie":
        return named_series("SigmaLie", N).suspension(weighted=False)
    if tag == "SigmaW":
        return plethystic_inverse(named_series("Perm", N))
    if tag == "SigmaW_t":
        return sigma_w_t(N)
    if tag == "M":
        # Sigma M = p1 - C_{-1}; plain suspension is an involution
        return (p1(N) - c_minus1_series(N)).suspension(weighted=False)
    raise DomainError(f"unknown series {tag!r}; known: {', '.join(NAMED)}")


# ---------------------------------------------------------------- HAL family


def _alternating_geometric(N: int) -> CycleIndex:
    """p1 / (1 + t p1) = sum_m (-t)^m p1^(m+1)."""
    x = p1(N)
    out = CycleIndex.zero(N)
    term = x
    for _ in range(N):
        out = out + term
        term = (term * x).times_t(1).scale(-1)
    return out


def _hal_fixed_point(N: int) -> dict[str, CycleIndex]:
    x, c = p1(N), comm(N)
    geo = _alternating_geometric(N)
    hal_pa = CycleIndex.zero(N)
    for _ in range(N):
        inner = x - hal_pa.times_t(1)
        hal_pa = x * plethysm(geo, plethysm(c, inner))
    inner = x - hal_pa.times_t(1)
    sigma_t_lie = named_series("Lie", N).suspension(weighted=True)
    hal_p = x * plethysm(sigma_t_lie, plethysm(c, inner))
    hal_a = plethysm(c - x, inner)
    return {"HALpA": hal_pa, "HALp": hal_p, "HALA": hal_a, "HAL": hal_p + hal_a - hal_pa}


def _hal_closed_form(N: int) -> dict[str, CycleIndex]:
    x, c = p1(N), comm(N)
    sw = named_series("SigmaW_t", N)
    hal_pa = (x - sw).times_t(-1)
    hal_a = plethysm(c - x, sw)
    hal_p = (x * plethysm(named_series("SigmaLie", N), plethysm(c, sw).times_t(1))).times_t(-1)
    return {"HALpA": hal_pa, "HALp": hal_p, "HALA": hal_a, "HAL": hal_p + hal_a - hal_pa}


@lru_cache(maxsize=None)
def _hal(N: int, method: str) -> dict[str, CycleIndex]:
    if method == "fixed-point":
        return _hal_fixed_point(N)
    if method == "closed-form":
        return _hal_closed_form(N)
    raise DomainError(f"unknown HAL method {method!r}; use one of {HAL_METHODS}")


def hal_series(tag: str, N: int = DEFAULT_DEGREE, method: str = "fixed-point") -> CycleIndex:
    if tag not in HAL_TAGS:
        raise DomainError(f"unknown HAL series {tag!r}")
    if N < 1:
        raise DomainError("truncation degree must be at least 1")
    return _hal(N, method)[tag]
