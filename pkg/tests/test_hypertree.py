import pytest

from hypertree_poset.errors import DomainError, ResourceLimitError, ValidationError
from hypertree_poset.hypertree import (
    Hypergraph,
    Hypertree,
    PointedHypertree,
    apply_permutation,
    center,
    dissymmetry_phi,
    dissymmetry_psi,
    eccentricity,
    enumerate_hypertrees,
    enumerate_pointed,
    format_structure,
    minimal_walk,
    parse_structure,
    validate_hypertree,
)
from hypertree_poset.partitions import partitions, representative

from oracles import all_hypergraphs, distinct_edge_walks, is_hypertree_by_walks


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 4), (4, 29), (5, 311), (6, 4447)])
def test_counts(n, count):
    trees = enumerate_hypertrees(n)
    assert len(trees) == count
    assert len(set(trees)) == count


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exhaustive_oracle(n):
    expected = sorted(hg.edges for hg in all_hypergraphs(n) if is_hypertree_by_walks(hg))
    assert sorted(t.edges for t in enumerate_hypertrees(n)) == expected


def test_validator_agrees_with_walk_definition():
    for hg in all_hypergraphs(4):
        assert validate_hypertree(hg) == is_hypertree_by_walks(hg)


def test_validation_errors():
    with pytest.raises(ValidationError):
        Hypergraph((1, 2, 3), ((1,),))
    with pytest.raises(ValidationError):
        Hypergraph((1, 2, 3), ((1, 4),))
    with pytest.raises(ValidationError):
        Hypergraph((1, 2, 3), ((1, 2), (2, 1)))
    with pytest.raises(DomainError):
        Hypertree((1, 2, 3), ((1, 2), (2, 3), (1, 3)))
    with pytest.raises(DomainError):
        Hypertree((1, 2, 3, 4), ((1, 2), (3, 4)))
    with pytest.raises(ResourceLimitError):
        enumerate_hypertrees(8)


def test_codec_round_trip():
    for n in range(1, 5):
        for t in enumerate_hypertrees(n):
            assert parse_structure(format_structure(t)) == t
        for variant in ("rooted", "edge-pointed", "edge-pointed-rooted", "hollow"):
            if n == 1 and variant in ("edge-pointed-rooted", "hollow"):
                continue
            for x in enumerate_pointed(n, variant):
                assert parse_structure(format_structure(x)) == x
    assert format_structure(Hypertree.on_range(4, [(1, 2, 4), (2, 3)])) == "{1,2,4};{2,3}"


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_pointed_counts(n):
    trees = enumerate_hypertrees(n)
    assert len(enumerate_pointed(n, "rooted")) == n * len(trees)
    assert len(enumerate_pointed(n, "edge-pointed")) == sum(len(t.edges) for t in trees)
    assert len(enumerate_pointed(n, "edge-pointed-rooted")) == sum(len(e) for t in trees for e in t.edges)


def test_hollow_structures():
    # hollow on 3 vertices: the gap 0 lies in exactly one edge
    got = {format_structure(x) for x in enumerate_pointed(3, "hollow")}
    assert got == {"{0,1,2}@gap=0", "{0,1};{1,2}@gap=0", "{0,2};{1,2}@gap=0"}
    with pytest.raises(DomainError):
        PointedHypertree(Hypertree.on_range(3, [(0, 1), (0, 2)], gap=True), gap=True)


def test_minimal_walk_matches_brute_force():
    for t in enumerate_hypertrees(5):
        for a in t.vertices:
            for b in t.vertices:
                if a == b:
                    continue
                (walk,) = distinct_edge_walks(t, a, b)
                assert minimal_walk(t, a, b) == walk


def test_center_is_unique_and_minimal():
    for n in range(1, 6):
        for t in enumerate_hypertrees(n):
            c = center(t)
            best = eccentricity(t, c)
            nodes = list(t.vertices) + list(t.edges)
            assert sum(eccentricity(t, x) == best for x in nodes) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dissymmetry_bijection(n):
    left = list(enumerate_hypertrees(n)) + enumerate_pointed(n, "edge-pointed-rooted")
    right = enumerate_pointed(n, "rooted") + enumerate_pointed(n, "edge-pointed")
    images = [dissymmetry_phi(x) for x in left]
    assert sorted(map(format_structure, images)) == sorted(map(format_structure, right))
    for x in left:
        assert dissymmetry_psi(dissymmetry_phi(x)) == x


def test_dissymmetry_is_equivariant():
    for lam in partitions(4):
        perm = representative(lam)
        for x in list(enumerate_hypertrees(4)) + enumerate_pointed(4, "edge-pointed-rooted"):
            assert dissymmetry_phi(apply_permutation(x, perm)) == apply_permutation(dissymmetry_phi(x), perm)


def test_apply_permutation_keeps_gap():
    x = enumerate_pointed(4, "hollow")[0]
    y = apply_permutation(x, (2, 3, 1))
    assert y.gap and 0 in y.tree.vertices
