"""Compare the numba and numpy kernels on the hypertree posets.

Run: python benchmarks/bench_kernels.py [--repeat 5]

Both kernel paths are imported from the same module, so one process can
time them side by side regardless of HYPERTREE_POSET_BACKEND. Results are
also checked for equality.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hypertree_poset import _kernels
from hypertree_poset.homology import PRIME, build_chain_complex
from hypertree_poset.linalg import to_dense
from hypertree_poset.partitions import identity
from hypertree_poset.poset import hypertree_poset


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_zeta(repeat: int) -> None:
    for n, gap in ((5, False), (6, False), (5, True)):
        poset = hypertree_poset(n, gap)
        keep = poset.fixed(identity(n))
        vec = np.ones(poset.size, dtype=np.int64)
        args = (poset.up_indptr, poset.up_indices, keep, vec, False)
        ref = _kernels.zeta_step_numpy(*args)
        timings = {"numpy": _best(lambda: _kernels.zeta_step_numpy(*args), repeat)}
        if _kernels.numba is not None:
            jit = _kernels.numba.njit(cache=True)(_kernels._zeta_step_loop)
            assert np.array_equal(jit(*args), ref)
            timings["numba"] = _best(lambda: jit(*args), repeat)
        label = f"zeta_step  n={n}{' +gap' if gap else ''}  size={poset.size}"
        print(label.ljust(40), "  ".join(f"{k}={v * 1e3:8.3f} ms" for k, v in timings.items()))


def bench_rank(repeat: int) -> None:
    cc = build_chain_complex(5)
    for m in (1, 2):
        rows = cc.boundary(m)
        mat = np.array(to_dense(rows, cc.dim(m - 1)), dtype=np.int64)
        ref = _kernels.rank_mod_p_numpy(mat, PRIME)
        timings = {"numpy": _best(lambda: _kernels.rank_mod_p_numpy(mat, PRIME), repeat)}
        if _kernels.numba is not None:
            jit = _kernels.numba.njit(cache=True)(_kernels._rank_mod_p_loop)
            assert jit(mat, np.int64(PRIME)) == ref
            timings["numba"] = _best(lambda: jit(mat, np.int64(PRIME)), repeat)
        label = f"rank_mod_p d_{m} shape={mat.shape}"
        print(label.ljust(40), "  ".join(f"{k}={v * 1e3:8.3f} ms" for k, v in timings.items()))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    print(f"active backend: {_kernels.BACKEND}")
    bench_zeta(args.repeat)
    bench_rank(args.repeat)


if __name__ == "__main__":
    main()
