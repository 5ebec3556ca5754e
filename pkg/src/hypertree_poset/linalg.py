"""Exact linear algebra over Z and Q.

Sparse matrices are lists of rows, each row a dict column -> int. Ranks use
fraction-free elimination: rows stay integral and are divided by their
content after every update so entries stay small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

SparseRows = list[dict[int, int]]


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()} if g > 1 else row


def sparse_rank(rows: SparseRows) -> int:
    """Rank over Q of an integer matrix given by sparse rows."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = _primitive(row)
                rank += 1
                break
            prow = pivots[col]
            a, b = prow[col], row[col]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {c: fa * v for c, v in row.items()}
            for c, v in prow.items():
                x = new.get(c, 0) - fb * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            row = _primitive(new) if new else new
    return rank


def to_dense(rows: SparseRows, ncols: int) -> list[list[int]]:
    out = [[0] * ncols for _ in rows]
    for i, row in enumerate(rows):
        for c, v in row.items():
            out[i][c] = v
    return out


def rref(mat: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = [[Fraction(x) for x in row] for row in mat]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def nullspace(mat: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis (as column vectors) of {x : mat x = 0}."""
    if not mat:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def column_basis(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """A maximal independent subset of the given vectors."""
    if not vectors:
        return []
    # vectors as columns of a matrix: pivots of its rref pick independent ones
    mat = [list(col) for col in zip(*vectors)]
    _, pivots = rref(mat)
    return [[Fraction(x) for x in vectors[p]] for p in pivots]


def invariant_trace(basis: Sequence[Sequence[Fraction]], image: Sequence[Sequence[Fraction]]) -> Fraction:
    """Trace of a linear map on span(basis), given the images of the basis vectors.

    The span must be invariant: each image is solved exactly in the basis.
    """
    if not basis:
        return Fraction(0)
    k = len(basis)
    dim = len(basis[0])
    # augmented system [B | images], B has the basis vectors as columns
    aug = [[basis[j][i] for j in range(k)] + [image[j][i] for j in range(k)] for i in range(dim)]
    red, pivots = rref(aug)
    if any(p >= k for p in pivots):
        raise ValueError("subspace is not invariant under the map")
    # row i of the reduced system holds the coordinates of every image on basis vector pivots[i]
    return sum((red[i][k + i] for i in range(k)), Fraction(0))
