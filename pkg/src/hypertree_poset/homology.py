"""Order complex of the hypertree poset: chains, boundaries, homology, characters.

The proper part of HT_n with a formal top is HT_n minus its minimum. Its
order complex has the strict chains as simplices; degree m holds chains of
m + 1 elements and degree -1 the augmentation generator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import DomainError, ResourceLimitError
from .linalg import SparseRows, column_basis, invariant_trace, nullspace, sparse_rank, to_dense
from .partitions import Partition, format_partition, partitions, representative
from .poset import count_strict_chains, hypertree_poset

MAX_HOMOLOGY_N = 5
PRIME = 2_147_483_629  # largest prime below 2**31


@dataclass
class ChainComplex:
    """Bases and boundary maps of an augmented order complex.

    ``bases[m + 1]`` lists the chains of degree m (tuples of poset indices);
    ``boundaries[m + 1]`` maps degree m to degree m - 1 and is empty for
    m = -1.
    """

    poset_n: int
    elements: tuple[int, ...]
    bases: list[list[tuple[int, ...]]]
    boundaries: list[SparseRows] = field(default_factory=list)

    @property
    def top_degree(self) -> int:
        return len(self.bases) - 2

    def dim(self, m: int) -> int:
        if m < -1 or m > self.top_degree:
            return 0
        return len(self.bases[m + 1])

    def boundary(self, m: int) -> SparseRows:
        """Rows indexed by degree-m chains, columns by degree-(m-1) chains."""
        if m <= -1 or m > self.top_degree:
            return []
        return self.boundaries[m + 1]


def _strict_chains(poset, elements: Sequence[int]) -> list[list[tuple[int, ...]]]:
    allowed = set(elements)
    above = {a: [b for b in poset.upset(a) if b != a and b in allowed] for a in elements}
    layers = [[(a,) for a in sorted(elements)]]
    while layers[-1]:
        nxt = [c + (b,) for c in layers[-1] for b in above[c[-1]]]
        layers.append(sorted(nxt))
    return layers[:-1]


def order_complex(n: int, elements: Iterable[int]) -> ChainComplex:
    """Augmented order complex of the subposet of HT_n on ``elements``."""
    poset = hypertree_poset(n)
    elements = tuple(sorted(elements))
    layers = _strict_chains(poset, elements) if elements else []
    bases = [[()]] + layers
    boundaries: list[SparseRows] = [[]]
    for m in range(len(layers)):
        lower = {c: i for i, c in enumerate(bases[m])}
        rows = []
        for chain in bases[m + 1]:
            if m == 0:
                rows.append({0: 1})
                continue
            row = {}
            for i in range(len(chain)):
                # face i of (a_0 < ... < a_m) carries sign (-1)^i
                row[lower[chain[:i] + chain[i + 1 :]]] = -1 if i % 2 else 1
            rows.append(row)
        boundaries.append(rows)
    return ChainComplex(n, elements, bases, boundaries)


def _check_n(n: int, bound: int = MAX_HOMOLOGY_N) -> None:
    if n < 2:
        raise DomainError("the chain complex needs n >= 2")
    if n > bound:
        raise ResourceLimitError(f"n = {n} exceeds the homology bound {bound}")


def build_chain_complex(n: int, bound: int = MAX_HOMOLOGY_N) -> ChainComplex:
    """Order complex of HT_n minus its minimum (the formal top is never stored)."""
    _check_n(n, bound)
    poset = hypertree_poset(n)
    return order_complex(n, range(1, poset.size))


def boundary_ranks(cc: ChainComplex, method: str = "exact") -> dict[int, int]:
    """rank of d_m for every degree m >= 0.

    ``exact`` runs fraction-free elimination over Z; ``modular`` uses the
    GF(p) kernel and is only a lower bound for the rational rank.
    """
    ranks = {}
    for m in range(0, cc.top_degree + 1):
        rows = cc.boundary(m)
        if method == "exact":
            ranks[m] = sparse_rank(rows)
        elif method == "modular":
            dense = np.array(to_dense(rows, cc.dim(m - 1)), dtype=np.int64).reshape(len(rows), cc.dim(m - 1))
            ranks[m] = _kernels.rank_mod_p(dense, PRIME) if dense.size else 0
        else:
            raise ValueError(f"unknown rank method {method!r}")
    return ranks


def homology_dimensions(cc: ChainComplex, method: str = "exact") -> dict[int, int]:
    """Reduced homology over Q as {degree: dimension}, zero degrees omitted."""
    ranks = boundary_ranks(cc, method)
    profile = {}
    for m in range(-1, cc.top_degree + 1):
        dim = cc.dim(m) - ranks.get(m, 0) - ranks.get(m + 1, 0)
        if dim:
            profile[m] = dim
    return profile


def _sign(m: int) -> int:
    return -1 if m % 2 else 1


def euler_characteristic(cc: ChainComplex) -> int:
    return sum(_sign(m) * cc.dim(m) for m in range(-1, cc.top_degree + 1))


def concentrated_degree(profile: dict[int, int]) -> int:
    if len(profile) != 1:
        raise ValueError(f"homology is not concentrated in one degree: {profile}")
    return next(iter(profile))


def homology_profile(n: int) -> dict[int, int]:
    return homology_dimensions(build_chain_complex(n))


def profile_json(profile: dict[int, int]) -> str:
    return json.dumps({str(k): v for k, v in sorted(profile.items())})


# ------------------------------------------------------------- characters


def alternating_trace(n: int, perm) -> int:
    """sum over m >= -1 of (-1)^m times the trace of perm on C_m.

    The action permutes the basis chains, so each trace is a fixed-chain
    count. Chains of the proper part have at most n - 2 elements.
    """
    return sum(_sign(m) * count_strict_chains(n, m, perm) for m in range(-1, n - 2))


def lefschetz_character(n: int, lam: Partition, degree: int | None = None) -> int:
    """Character of S_n on the single nonzero reduced homology group at class lam.

    By the Hopf trace formula the character on the group in degree d is
    (-1)^d times the alternating trace on chains. ``degree`` defaults to the
    computed concentrated degree.
    """
    if sum(lam) != n:
        raise DomainError(f"{lam} is not a partition of {n}")
    if degree is None:
        degree = concentrated_degree(homology_profile(n))
    return _sign(degree) * alternating_trace(n, representative(tuple(lam)))


def character_table(n: int) -> dict[Partition, int]:
    degree = concentrated_degree(homology_profile(n))
    table = {lam: lefschetz_character(n, lam, degree) for lam in sorted(partitions(n))}
    if table[(1,) * n] <= 0:
        raise AssertionError("homology character must be positive on the identity")
    return table


def character_csv(table: dict[Partition, int]) -> str:
    lines = ["class,value"]
    lines += [f"{format_partition(lam)},{v}" for lam, v in table.items()]
    return "\n".join(lines) + "\n"


def _permutation_on_basis(cc: ChainComplex, perm, m: int) -> list[int]:
    poset = hypertree_poset(cc.poset_n)
    image = poset.permute_index(perm)
    pos = {c: i for i, c in enumerate(cc.bases[m + 1])}
    return [pos[tuple(sorted(int(image[a]) for a in c))] if c else 0 for c in cc.bases[m + 1]]


def homology_trace(cc: ChainComplex, perm, m: int) -> Fraction:
    """Trace of perm on H_m computed from explicit cycle and boundary spaces.

    tr(H_m) = tr(ker d_m) - tr(im d_{m+1}); both subspaces are invariant.
    """
    dim = cc.dim(m)
    if dim == 0:
        return Fraction(0)
    act = _permutation_on_basis(cc, perm, m)

    def apply(v):
        w = [Fraction(0)] * dim
        for i, x in enumerate(v):
            w[act[i]] += x
        return w

    d_m = cc.boundary(m)
    kernel = nullspace([list(col) for col in zip(*to_dense(d_m, cc.dim(m - 1)))], dim) if d_m else nullspace([], dim)
    d_up = cc.boundary(m + 1)
    image = column_basis(to_dense(d_up, dim)) if d_up else []
    return invariant_trace(kernel, [apply(v) for v in kernel]) - invariant_trace(image, [apply(v) for v in image])


# -------------------------------------------------------------- Whitney


def interval_homology(n: int, x: int) -> dict[int, int]:
    """Reduced homology of the open interval (0, x) of HT_n."""
    poset = hypertree_poset(n)
    below = [y for y in range(1, poset.size) if y != x and poset.leq_index(y, x)]
    return homology_dimensions(order_complex(n, below))


def whitney_dimensions(n: int, bound: int = MAX_HOMOLOGY_N) -> dict[int, int]:
    """{rank r: sum over x of rank r of dim H~_{r-2}(0, x)} for r >= 1.

    The empty interval below a rank-1 element contributes H~_{-1} = 1.
    """
    _check_n(n, bound)
    poset = hypertree_poset(n)
    out: dict[int, int] = {}
    for x in range(1, poset.size):
        r = int(poset.rank[x])
        out[r] = out.get(r, 0) + interval_homology(n, x).get(r - 2, 0)
    return dict(sorted(out.items()))
