"""Integer kernels with a numba path and a pure-numpy path.

The backend is chosen once at import time from ``HYPERTREE_POSET_BACKEND``
(``numba`` or ``numpy``). With the variable unset numba is used when it
imports, numpy otherwise. Both paths compute identical int64 results; the
benchmark in ``benchmarks/bench_kernels.py`` compares them.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional speedup
    numba = None

_requested = os.environ.get("HYPERTREE_POSET_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ImportError(f"HYPERTREE_POSET_BACKEND must be numba or numpy, got {_requested!r}")
BACKEND = "numpy" if _requested == "numpy" or numba is None else "numba"

# Chain counts stay far below this at desk scale; crossing it means int64 is no longer safe.
OVERFLOW_GUARD = 1 << 60


# ------------------------------------------------------------ zeta steps


def zeta_step_numpy(indptr, indices, keep, vec, strict):
    """out[b] = sum of vec[a] over kept a <= b (a < b when strict), b kept."""
    counts = np.diff(indptr)
    rows = np.repeat(np.arange(len(counts)), counts)
    sel = keep[rows] & keep[indices]
    if strict:
        sel &= rows != indices
    out = np.zeros_like(vec)
    np.add.at(out, indices[sel], vec[rows[sel]])
    return out


def _zeta_step_loop(indptr, indices, keep, vec, strict):
    n = indptr.shape[0] - 1
    out = np.zeros_like(vec)
    for a in range(n):
        if not keep[a] or vec[a] == 0:
            continue
        va = vec[a]
        for p in range(indptr[a], indptr[a + 1]):
            b = indices[p]
            if keep[b] and not (strict and b == a):
                out[b] += va
    return out


# ------------------------------------------------------------ modular rank


def rank_mod_p_numpy(mat, p):
    """Rank of an int64 matrix over GF(p), p < 2**31."""
    a = np.mod(np.array(mat, dtype=np.int64), p)
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = np.nonzero(a[rank + 1 :, c])[0] + rank + 1
        if below.size:
            factors = a[below, c][:, None]
            a[below] = (a[below] - factors * a[rank][None, :]) % p
        rank += 1
    return rank


def _rank_mod_p_loop(mat, p):
    a = mat.copy()
    rows, cols = a.shape
    for i in range(rows):
        for j in range(cols):
            a[i, j] %= p
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = -1
        for r in range(rank, rows):
            if a[r, c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(cols):
                tmp = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = tmp
        # modular inverse by exponentiation
        base = a[rank, c]
        e = p - 2
        inv = 1
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for j in range(c, cols):
            a[rank, j] = (a[rank, j] * inv) % p
        for r in range(rank + 1, rows):
            f = a[r, c]
            if f != 0:
                for j in range(c, cols):
                    a[r, j] = (a[r, j] - f * a[rank, j]) % p
        rank += 1
    return rank


if BACKEND == "numba":
    _zeta_step_jit = numba.njit(cache=True)(_zeta_step_loop)
    _rank_mod_p_jit = numba.njit(cache=True)(_rank_mod_p_loop)

    def zeta_step(indptr, indices, keep, vec, strict=False):
        return _zeta_step_jit(indptr, indices, keep, vec, strict)

    def rank_mod_p(mat, p):
        return int(_rank_mod_p_jit(np.ascontiguousarray(mat, dtype=np.int64), np.int64(p)))

else:

    def zeta_step(indptr, indices, keep, vec, strict=False):
        return zeta_step_numpy(indptr, indices, keep, vec, strict)

    def rank_mod_p(mat, p):
        return rank_mod_p_numpy(mat, p)


def check_overflow(vec) -> None:
    if vec.size and int(np.abs(vec).max()) > OVERFLOW_GUARD:
        raise OverflowError("chain count exceeds the int64 safety margin")
