"""Integer partitions, cycle types and permutations of {1..n}.

Partitions are tuples sorted in decreasing order. A permutation of
{1..n} is stored as the tuple of images ``(s(1), ..., s(n))``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Permutation = tuple[int, ...]


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_upto(n: int) -> tuple[Partition, ...]:
    """All partitions of 0..n, ordered by size then reverse lex."""
    return tuple(lam for d in range(n + 1) for lam in partitions(d))


def z_lambda(lam: Sequence[int]) -> int:
    """Centralizer order z = prod i^m_i m_i! of a permutation of cycle type lam."""
    counts = Counter(lam)
    return prod(i**m * factorial(m) for i, m in counts.items())


def class_size(lam: Sequence[int]) -> int:
    return factorial(sum(lam)) // z_lambda(lam)


def merge(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


def format_partition(lam: Partition) -> str:
    """``(3, 1, 1)`` -> ``"3+1+1"``; the empty partition prints as ``"0"``."""
    return "+".join(map(str, lam)) if lam else "0"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text == "0":
        return ()
    parts = [int(x) for x in text.split("+")]
    if any(p <= 0 for p in parts):
        raise ValueError(f"bad partition {text!r}")
    return tuple(sorted(parts, reverse=True))


def representative(lam: Partition) -> Permutation:
    """A permutation of {1..|lam|} of cycle type lam: consecutive cycles."""
    images = []
    start = 1
    for length in lam:
        images.extend(range(start + 1, start + length))
        images.append(start)
        start += length
    return tuple(images)


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def cycle_type(perm: Permutation) -> Partition:
    n = len(perm)
    seen = [False] * (n + 1)
    lengths = []
    for i in range(1, n + 1):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(sigma o tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t - 1] for t in tau)


def inverse(perm: Permutation) -> Permutation:
    inv = [0] * len(perm)
    for i, image in enumerate(perm, start=1):
        inv[image - 1] = i
    return tuple(inv)


def from_cycles(n: int, *cycles: Sequence[int]) -> Permutation:
    """Build a permutation of {1..n} from disjoint cycles, e.g. ``from_cycles(3, (1, 3))``."""
    images = list(range(1, n + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + tuple(cyc[:1])):
            images[a - 1] = b
    return tuple(images)


def fixed_points(perm: Permutation) -> int:
    return sum(1 for i, image in enumerate(perm, start=1) if i == image)


def check_permutation(perm: Sequence[int], n: int) -> Permutation:
    perm = tuple(perm)
    if len(perm) != n or sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {perm}")
    return perm
