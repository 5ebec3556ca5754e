from itertools import product

import numpy as np
import pytest

from hypertree_poset import _kernels
from hypertree_poset.errors import DomainError, ResourceLimitError
from hypertree_poset.hypertree import GAP, Hypertree, apply_permutation, hypertrees_on
from hypertree_poset.partitions import identity, partitions, representative
from hypertree_poset.poset import (
    VARIANTS,
    ChainSpec,
    HypertreePoset,
    chain_counts,
    count_large_chains,
    count_strict_chains,
    cover_relations,
    hasse_csv,
    hypertree_poset,
    leq,
    mobius_top,
)

from oracles import brute_large_chains, leq_by_unions


def test_leq_matches_union_definition():
    trees = hypertrees_on(range(1, 5))
    for s in trees:
        for t in trees:
            assert leq(s, t) == leq_by_unions(s, t)


def test_index_relation_matches_leq():
    poset = hypertree_poset(4)
    for i, s in enumerate(poset.trees):
        for j, t in enumerate(poset.trees):
            assert poset.leq_index(i, j) == leq(s, t)


def test_minimum_and_rank():
    poset = hypertree_poset(5)
    assert poset.trees[0].edges == ((1, 2, 3, 4, 5),)
    assert poset.rank.min() == 0 and poset.rank.max() == 3
    assert len(poset.upset(0)) == poset.size


def test_covers_raise_rank_by_one():
    poset = hypertree_poset(4)
    for x, y in cover_relations(4):
        assert y.rank == x.rank + 1


def test_hasse_csv_shape():
    hasse, index = hasse_csv(3)
    assert hasse.splitlines() == ["0,1", "0,2", "0,3"]
    assert index.splitlines()[0] == "0,{1,2,3}"


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_plain_chains_against_brute_force(n, k):
    trees = hypertrees_on(range(1, n + 1))
    for lam in partitions(n):
        perm = representative(lam)
        act = lambda t: apply_permutation(t, perm)
        assert count_large_chains(ChainSpec(n, k), perm) == brute_large_chains(trees, leq, k, act)


def _brute_pointed(n, k, variant, perm):
    """Enumerate chains together with their pointing, count the fixed ones."""
    gap = variant.startswith("hollow")
    vertices = range(0, n + 1) if gap else range(1, n + 1)
    trees = hypertrees_on(vertices)
    sigma = lambda v: v if v == GAP else perm[v - 1]
    total = 0
    for chain in product(trees, repeat=k):
        if not all(leq(chain[i], chain[i + 1]) for i in range(k - 1)):
            continue
        if any(apply_permutation(t, perm) != t for t in chain):
            continue
        lo, hi = chain[0], chain[-1]
        stable = lambda e: tuple(sorted(map(sigma, e))) == e
        if variant == "min-rooted":
            total += sum(1 for v in vertices if sigma(v) == v)
        elif variant == "min-edge-pointed":
            total += sum(1 for e in lo.edges if stable(e))
        elif variant == "max-edge-pointed":
            total += sum(1 for e in hi.edges if stable(e))
        elif variant == "min-edge-pointed-rooted":
            total += sum(1 for e in lo.edges if stable(e) for v in e if sigma(v) == v)
        elif variant == "max-edge-pointed-rooted":
            total += sum(1 for e in hi.edges if stable(e) for v in e if sigma(v) == v)
        elif variant == "hollow-min":
            total += len(lo.edges_at(GAP)) == 1
        elif variant == "hollow-min-single-edge":
            total += len(lo.edges) == 1
    return total


@pytest.mark.parametrize("variant", [v for v in VARIANTS if v != "plain"])
@pytest.mark.parametrize("n", [2, 3])
def test_pointed_chains_against_brute_force(variant, n):
    for k in (1, 2):
        for lam in partitions(n):
            perm = representative(lam)
            assert count_large_chains(ChainSpec(n, k, variant), perm) == _brute_pointed(n, k, variant, perm)


def test_pointed_chains_n4_identity():
    for variant in ("min-edge-pointed-rooted", "max-edge-pointed", "hollow-min"):
        assert count_large_chains(ChainSpec(4, 2, variant)) == _brute_pointed(4, 2, variant, identity(4))


def test_known_counts():
    assert [count_large_chains(ChainSpec(3, k)) for k in range(4)] == [1, 4, 7, 10]
    assert count_large_chains(ChainSpec(3, 1), (2, 3, 1)) == 1
    assert count_large_chains(ChainSpec(1, 0, weighted=True)) == {-1: 1}
    assert count_large_chains(ChainSpec(4, 2, weighted=True)) == {0: 1, 1: 24, 2: 68}


def test_weighted_sums_to_plain():
    for k in (1, 2, 3):
        for lam in partitions(4):
            perm = representative(lam)
            w = count_large_chains(ChainSpec(4, k, weighted=True), perm)
            assert sum(w.values()) == count_large_chains(ChainSpec(4, k), perm)


def test_strict_chains():
    assert [count_strict_chains(4, m) for m in range(-1, 3)] == [1, 28, 36, 0]
    assert [count_strict_chains(5, m) for m in range(0, 3)] == [310, 1235, 990]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_mobius(n):
    assert mobius_top(n) == (-1) ** (n - 1) * (n - 1) ** (n - 2)


def test_mobius_brute_force_n4():
    trees = hypertrees_on(range(1, 5))
    mu = {0: 1}
    order = sorted(range(len(trees)), key=lambda i: trees[i].rank)
    for j in order[1:]:
        mu[j] = -sum(mu[i] for i in order if i != j and i in mu and leq(trees[i], trees[j]))
    assert mobius_top(4) == -sum(mu.values())


def test_chain_spec_errors():
    with pytest.raises(DomainError):
        ChainSpec(3, 1, "bogus")
    with pytest.raises(DomainError):
        ChainSpec(3, 0, "min-rooted")
    with pytest.raises(DomainError):
        ChainSpec(3, -1)
    with pytest.raises(ResourceLimitError):
        HypertreePoset(7)


def test_kernels_agree():
    for n, gap in ((4, False), (5, False), (4, True)):
        poset = hypertree_poset(n, gap)
        rng = np.random.default_rng(n)
        keep = rng.random(poset.size) < 0.7
        vec = rng.integers(0, 50, poset.size).astype(np.int64)
        for strict in (False, True):
            a = _kernels.zeta_step_numpy(poset.up_indptr, poset.up_indices, keep, vec, strict)
            b = _kernels._zeta_step_loop(poset.up_indptr, poset.up_indices, keep, vec, strict)
            c = _kernels.zeta_step(poset.up_indptr, poset.up_indices, keep, vec, strict)
            assert np.array_equal(a, b) and np.array_equal(a, c)


def test_rank_kernels_agree():
    rng = np.random.default_rng(0)
    for shape in ((5, 7), (9, 4), (12, 12)):
        mat = rng.integers(-3, 4, shape).astype(np.int64)
        mat[-1] = mat[0] + mat[1]
        p = 2_147_483_629
        assert _kernels.rank_mod_p_numpy(mat, p) == _kernels._rank_mod_p_loop(mat, p) == _kernels.rank_mod_p(mat, p)


def test_overflow_guard():
    with pytest.raises(OverflowError):
        _kernels.check_overflow(np.array([_kernels.OVERFLOW_GUARD + 1], dtype=np.int64))


def test_chain_counts_list():
    assert chain_counts(3, "plain", None, 3) == [4, 7, 10]
    with pytest.raises(ValueError):
        chain_counts(3, "plain", (1, 1, 2), 2)
