"""The hypertree poset and chain counting.

S <= T when every edge of S is a union of edges of T. Since both are
hypertrees on the same vertices this is equivalent to every edge of T being
contained in some edge of S, and the up-set of S is the product, over the
edges e of S, of the hypertrees on the vertices of e. That is how the zeta
relation is generated here.

Large k-chains are counted with powers of the zeta matrix restricted to the
elements fixed by a permutation; pointings enter as weights on the start or
end vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import DomainError, ResourceLimitError
from .hypertree import GAP, Hypertree, format_structure, hypertrees_on
from .partitions import Permutation, check_permutation, identity

VARIANTS = (
    "plain",
    "min-rooted",
    "min-edge-pointed",
    "min-edge-pointed-rooted",
    "max-edge-pointed",
    "max-edge-pointed-rooted",
    "hollow-min",
    "hollow-min-single-edge",
)
MIN_POINTED = ("min-rooted", "min-edge-pointed", "min-edge-pointed-rooted")
MAX_POINTED = ("max-edge-pointed", "max-edge-pointed-rooted")
HOLLOW = ("hollow-min", "hollow-min-single-edge")

MAX_POSET_VERTICES = 6


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


@lru_cache(maxsize=None)
def _trees_on_mask(mask: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(_mask(e) for e in t.edges) for t in hypertrees_on(_bits(mask)))


class HypertreePoset:
    """HT(V) for V = {1..n}, or {0 (gap), 1..n} when ``gap`` is set.

    Elements are indexed 0..size-1 in (edge count, canonical edges) order, so
    index 0 is the single-edge minimum whenever |V| >= 2.
    """

    def __init__(self, n: int, gap: bool = False):
        if n < 1:
            raise DomainError("the poset needs at least one numbered vertex")
        self.n = n
        self.gap = gap
        vertices = tuple(range(n + 1)) if gap else tuple(range(1, n + 1))
        if len(vertices) > MAX_POSET_VERTICES:
            raise ResourceLimitError(f"posets on more than {MAX_POSET_VERTICES} vertices are disabled")
        self.vertices = vertices
        self.trees = hypertrees_on(vertices)
        self.masks = [tuple(_mask(e) for e in t.edges) for t in self.trees]
        self.index = {tuple(sorted(m)): i for i, m in enumerate(self.masks)}  # keyed by sorted masks
        self.size = len(self.trees)
        self.rank = np.array([len(m) - 1 for m in self.masks], dtype=np.int64)
        self.n_edges = self.rank + 1
        self._build_zeta()

    def _build_zeta(self) -> None:
        indptr = [0]
        indices: list[int] = []
        for masks in self.masks:
            ups = []
            for combo in product(*(_trees_on_mask(e) for e in masks)):
                key = tuple(sorted(e for part in combo for e in part))
                ups.append(self.index[key])
            ups.sort()
            indices.extend(ups)
            indptr.append(len(indices))
        self.up_indptr = np.array(indptr, dtype=np.int64)
        self.up_indices = np.array(indices, dtype=np.int64)

    def upset(self, i: int) -> np.ndarray:
        return self.up_indices[self.up_indptr[i] : self.up_indptr[i + 1]]

    def leq_index(self, i: int, j: int) -> bool:
        up = self.upset(i)
        pos = np.searchsorted(up, j)
        return bool(pos < len(up) and up[pos] == j)

    # ------------------------------------------------------ group action

    def _vertex_map(self, perm: Permutation) -> list[int]:
        perm = check_permutation(perm, self.n)
        images = list(range(max(self.vertices) + 1))
        for v in range(1, self.n + 1):
            images[v] = perm[v - 1]
        return images

    def permute_index(self, perm: Permutation) -> np.ndarray:
        """Index of the image of every element under perm (gap fixed)."""
        return _permuted(self, tuple(perm))

    def fixed(self, perm: Permutation) -> np.ndarray:
        image = self.permute_index(perm)
        return image == np.arange(self.size)

    def fixed_edge_weights(self, perm: Permutation) -> tuple[np.ndarray, np.ndarray]:
        """Per element: number of perm-stable edges, and of (stable edge, fixed vertex in it) pairs."""
        images = self._vertex_map(perm)
        fixed_vertices = _mask(v for v in self.vertices if images[v] == v)
        edges = np.zeros(self.size, dtype=np.int64)
        rooted = np.zeros(self.size, dtype=np.int64)
        cache: dict[int, bool] = {}
        for i, masks in enumerate(self.masks):
            for e in masks:
                if e not in cache:
                    cache[e] = _mask(images[v] for v in _bits(e)) == e
                if cache[e]:
                    edges[i] += 1
                    rooted[i] += bin(e & fixed_vertices).count("1")
        return edges, rooted

    def gap_degree(self) -> np.ndarray:
        bit = 1 << GAP
        return np.array([sum(1 for e in m if e & bit) for m in self.masks], dtype=np.int64)


@lru_cache(maxsize=32)
def _permuted(poset: HypertreePoset, perm: Permutation) -> np.ndarray:
    images = poset._vertex_map(perm)
    out = np.empty(poset.size, dtype=np.int64)
    for i, masks in enumerate(poset.masks):
        key = tuple(sorted(_mask(images[v] for v in _bits(e)) for e in masks))
        out[i] = poset.index[key]
    return out


@lru_cache(maxsize=None)
def hypertree_poset(n: int, gap: bool = False) -> HypertreePoset:
    return HypertreePoset(n, gap)


# ------------------------------------------------------------ order relation


def leq(s: Hypertree, t: Hypertree) -> bool:
    """S <= T iff every edge of S is the union of the edges of T inside it."""
    if s.vertices != t.vertices:
        raise DomainError("hypertrees live on different vertex sets")
    s_edges = [set(e) for e in s.edges]
    inside: list[set[int]] = [set() for _ in s_edges]
    for f in t.edges:
        fs = set(f)
        hosts = [i for i, e in enumerate(s_edges) if fs <= e]
        if not hosts:
            return False
        for i in hosts:
            inside[i] |= fs
    return all(inside[i] == e for i, e in enumerate(s_edges))


def cover_relations(n: int) -> list[tuple[Hypertree, Hypertree]]:
    """All pairs (x, y) with y covering x in HT_n."""
    poset = hypertree_poset(n)
    out = []
    for i in range(poset.size):
        above = [j for j in poset.upset(i) if j != i]
        for j in above:
            if not any(poset.leq_index(z, j) for z in above if z != j):
                out.append((poset.trees[i], poset.trees[j]))
    return out


def hasse_csv(n: int) -> tuple[str, str]:
    """Hasse diagram as ``child,parent`` lines plus an ``index,encoding`` file."""
    poset = hypertree_poset(n)
    pos = {t: i for i, t in enumerate(poset.trees)}
    edges = sorted((pos[x], pos[y]) for x, y in cover_relations(n))
    hasse = "".join(f"{a},{b}\n" for a, b in edges)
    index = "".join(f"{i},{format_structure(t)}\n" for i, t in enumerate(poset.trees))
    return hasse, index


# ------------------------------------------------------------- chain specs


@dataclass(frozen=True)
class ChainSpec:
    """Which chains to count.

    For the hollow variants ``n`` is the number of numbered vertices and the
    chains live in the poset on {gap, 1..n}.
    """

    n: int
    k: int
    variant: str = "plain"
    weighted: bool = False

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise DomainError(f"unknown chain variant {self.variant!r}")
        if self.n < 1:
            raise DomainError("n must be positive")
        if self.k < 0:
            raise DomainError("chain length must be non-negative")
        if self.k == 0 and self.variant != "plain":
            raise DomainError(f"variant {self.variant} needs k >= 1; its k = 0 value comes from interpolation")


WeightedCount = dict[int, int]


def _weights(poset: HypertreePoset, variant: str, perm: Permutation, keep: np.ndarray):
    ones = keep.astype(np.int64)
    start, end = ones, ones
    if variant == "min-rooted":
        start = ones * sum(1 for i, v in enumerate(perm, 1) if i == v)
    elif variant in ("min-edge-pointed", "max-edge-pointed"):
        w = poset.fixed_edge_weights(perm)[0] * ones
        start, end = (w, ones) if variant.startswith("min") else (ones, w)
    elif variant in ("min-edge-pointed-rooted", "max-edge-pointed-rooted"):
        w = poset.fixed_edge_weights(perm)[1] * ones
        start, end = (w, ones) if variant.startswith("min") else (ones, w)
    elif variant == "hollow-min":
        start = ones * (poset.gap_degree() == 1)
    elif variant == "hollow-min-single-edge":
        start = ones * (poset.n_edges == 1)
    return start, end


def chain_counts(n: int, variant: str, perm: Permutation | None, kmax: int, weighted: bool = False):
    """Counts of perm-fixed large k-chains for k = 1..kmax, as a list.

    Each entry is an int, or a {rank of the maximum: count} dict when
    ``weighted``.
    """
    ChainSpec(n, max(kmax, 1), variant, weighted)
    poset = hypertree_poset(n, gap=variant in HOLLOW)
    perm = identity(n) if perm is None else check_permutation(perm, n)
    keep = poset.fixed(perm)
    start, end = _weights(poset, variant, perm, keep)
    vec = start.copy()
    out = []
    for k in range(1, kmax + 1):
        if k > 1:
            vec = _kernels.zeta_step(poset.up_indptr, poset.up_indices, keep, vec, False)
            _kernels.check_overflow(vec)
        contrib = vec * end
        if weighted:
            counts = {}
            for r in np.unique(poset.rank[contrib != 0]):
                counts[int(r)] = int(contrib[poset.rank == r].sum())
            out.append(counts)
        else:
            out.append(int(contrib.sum()))
    return out


def count_large_chains(spec: ChainSpec, perm: Sequence[int] | None = None):
    """Number of perm-fixed large chains of ``spec`` (a rank -> count dict if weighted)."""
    if spec.k == 0:
        exponent = -1 if spec.n == 1 else 0
        return {exponent: 1} if spec.weighted else 1
    perm = identity(spec.n) if perm is None else tuple(perm)
    return chain_counts(spec.n, spec.variant, perm, spec.k, spec.weighted)[-1]


def count_strict_chains(n: int, m: int, perm: Sequence[int] | None = None) -> int:
    """perm-fixed strictly increasing (m+1)-tuples of non-minimum elements of HT_n."""
    if m < -1:
        raise DomainError("m must be >= -1")
    if m == -1:
        return 1
    poset = hypertree_poset(n)
    perm = identity(n) if perm is None else check_permutation(perm, n)
    keep = poset.fixed(perm) & (poset.rank > poset.rank.min())
    vec = keep.astype(np.int64)
    for _ in range(m):
        vec = _kernels.zeta_step(poset.up_indptr, poset.up_indices, keep, vec, True)
    return int(vec.sum())


def mobius_top(n: int) -> int:
    """mu(0, 1) in HT_n with a formal top adjoined."""
    if n < 2:
        raise DomainError("mobius_top needs n >= 2")
    poset = hypertree_poset(n)
    mu = np.zeros(poset.size, dtype=object)
    # elements are sorted by rank, so every predecessor is settled first
    mu[0] = 1
    down: list[list[int]] = [[] for _ in range(poset.size)]
    for i in range(poset.size):
        for j in poset.upset(i):
            if j != i:
                down[j].append(i)
    for j in range(1, poset.size):
        mu[j] = -sum(mu[i] for i in down[j])
    return int(-sum(mu))
