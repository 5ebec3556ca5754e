from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertree_poset.errors import DomainError, ResourceLimitError
from hypertree_poset.homology import (
    ChainComplex,
    alternating_trace,
    boundary_ranks,
    build_chain_complex,
    character_csv,
    character_table,
    concentrated_degree,
    euler_characteristic,
    homology_dimensions,
    homology_trace,
    interval_homology,
    lefschetz_character,
    order_complex,
    profile_json,
    whitney_dimensions,
)
from hypertree_poset.linalg import invariant_trace, nullspace, sparse_rank, to_dense
from hypertree_poset.partitions import partitions, representative, z_lambda

from oracles import fraction_rank


@pytest.mark.parametrize("n,profile", [(2, {-1: 1}), (3, {0: 2}), (4, {1: 9}), (5, {2: 64})])
def test_profiles(n, profile):
    cc = build_chain_complex(n)
    assert homology_dimensions(cc) == profile
    assert homology_dimensions(cc, "modular") == profile
    assert euler_characteristic(cc) == (-1) ** concentrated_degree(profile) * (n - 1) ** (n - 2)


def test_boundary_squares_to_zero():
    cc = build_chain_complex(4)
    d1, d2 = to_dense(cc.boundary(1), cc.dim(0)), to_dense(cc.boundary(2), cc.dim(1))
    for row in d2:
        image = [sum(row[j] * d1[j][c] for j in range(len(d1))) for c in range(cc.dim(0))]
        assert not any(image)


def _reversed_boundaries(cc):
    out = [[]]
    for m in range(1, len(cc.bases)):
        lower = {c: i for i, c in enumerate(cc.bases[m - 1])}
        rows = []
        for chain in cc.bases[m]:
            top = len(chain) - 1
            # face i carries (-1)^(top - i) instead of (-1)^i
            rows.append({lower[chain[:i] + chain[i + 1 :]]: (-1) ** (top - i) for i in range(len(chain))})
        out.append(rows)
    return out


@pytest.mark.parametrize("n", [3, 4])
def test_reversed_sign_convention_gives_same_ranks(n):
    cc = build_chain_complex(n)
    flipped = ChainComplex(cc.poset_n, cc.elements, cc.bases, _reversed_boundaries(cc))
    assert boundary_ranks(flipped) == boundary_ranks(cc)
    assert homology_dimensions(flipped) == homology_dimensions(cc)


def test_empty_complex_convention():
    cc = order_complex(3, [])
    assert homology_dimensions(cc) == {-1: 1}


@given(st.lists(st.lists(st.integers(-3, 3), min_size=6, max_size=6), min_size=1, max_size=7))
@settings(max_examples=60, deadline=None)
def test_sparse_rank_matches_fraction_oracle(rows):
    sparse = [{c: v for c, v in enumerate(r) if v} for r in rows]
    assert sparse_rank(sparse) == fraction_rank(rows)


def test_nullspace_and_invariant_trace():
    mat = [[1, 1, 0], [0, 0, 0]]
    basis = nullspace(mat, 3)
    assert len(basis) == 2
    for v in basis:
        assert v[0] + v[1] == 0
    swap = lambda v: [v[1], v[0], v[2]]
    # on ker: spanned by (1,-1,0) -> eigenvalue -1 and (0,0,1) -> +1
    assert invariant_trace(basis, [swap(v) for v in basis]) == 0
    with pytest.raises(ValueError):
        invariant_trace([[Fraction(1), Fraction(0), Fraction(0)]], [[Fraction(0), Fraction(1), Fraction(0)]])


def test_lefschetz_n3_standard_representation():
    assert character_table(3) == {(1, 1, 1): 2, (2, 1): 0, (3,): -1}


@pytest.mark.parametrize("n", [3, 4])
def test_homology_trace_matches_lefschetz(n):
    cc = build_chain_complex(n)
    d = concentrated_degree(homology_dimensions(cc))
    for lam in partitions(n):
        assert homology_trace(cc, representative(lam), d) == lefschetz_character(n, lam)
        # other degrees carry no homology
        for m in range(-1, cc.top_degree + 1):
            if m != d:
                assert homology_trace(cc, representative(lam), m) == 0


def test_character_table_is_a_character():
    # inner product with itself is a positive integer
    for n in (3, 4, 5):
        table = character_table(n)
        norm = sum(Fraction(v * v, z_lambda(lam)) for lam, v in table.items())
        assert norm.denominator == 1 and norm >= 1
        assert table[(1,) * n] == (n - 1) ** (n - 2)


def test_alternating_trace_sign():
    assert alternating_trace(4, representative((1, 1, 1, 1))) == -9
    assert alternating_trace(3, representative((1, 1, 1))) == 2


@pytest.mark.parametrize("n,expected", [(3, {1: 3}), (4, {1: 12, 2: 20})])
def test_whitney(n, expected):
    assert whitney_dimensions(n) == expected


def test_interval_homology_of_rank1_element():
    # below a rank-1 element the open interval is empty
    assert interval_homology(3, 1) == {-1: 1}


def test_output_formats():
    assert profile_json({2: 64}) == '{"2": 64}'
    assert character_csv({(1, 1, 1): 2, (2, 1): 0, (3,): -1}).splitlines() == ["class,value", "1+1+1,2", "2+1,0", "3,-1"]


def test_errors():
    with pytest.raises(ResourceLimitError):
        build_chain_complex(6)
    with pytest.raises(DomainError):
        build_chain_complex(1)
    with pytest.raises(DomainError):
        lefschetz_character(3, (2, 1, 1))
    with pytest.raises(ValueError):
        concentrated_degree({0: 1, 1: 1})
