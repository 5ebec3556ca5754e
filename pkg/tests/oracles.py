"""Brute-force reference implementations used only by the tests.

Each oracle follows a definition literally and shares no code with the
package beyond the basic data types.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from hypertree_poset.hypertree import Hypergraph


def all_hypergraphs(n: int):
    """Every set of edges (subsets of size >= 2) on {1..n}."""
    vertices = tuple(range(1, n + 1))
    candidates = [c for size in range(2, n + 1) for c in combinations(vertices, size)]
    for mask in range(1 << len(candidates)):
        yield Hypergraph(vertices, tuple(c for i, c in enumerate(candidates) if mask >> i & 1))


def distinct_edge_walks(hg: Hypergraph, a: int, b: int) -> list[tuple]:
    """All walks a = v0, e1, v1, ..., ek, vk = b with distinct edges and distinct vertices."""
    out = []

    def extend(v, used_edges, used_vertices, path):
        if v == b:
            out.append(tuple(path))
            return
        for e in hg.edges:
            if e in used_edges or v not in e:
                continue
            for w in e:
                if w != v and w not in used_vertices:
                    extend(w, used_edges | {e}, used_vertices | {w}, path + [e, w])

    extend(a, frozenset(), frozenset({a}), [a])
    return out


def is_hypertree_by_walks(hg: Hypergraph) -> bool:
    """Connected, and exactly one walk between any two vertices (the glossary definition)."""
    if hg.n == 1:
        return not hg.edges
    return all(len(distinct_edge_walks(hg, a, b)) == 1 for a, b in combinations(hg.vertices, 2))


def leq_by_unions(s, t) -> bool:
    """Each edge of s is a union of edges of t."""
    for e in s.edges:
        inside = [set(f) for f in t.edges if set(f) <= set(e)]
        if set().union(*inside) != set(e):
            return False
    return True


def brute_large_chains(trees, leq, k: int, act=None) -> int:
    """Weakly increasing k-tuples, optionally only those fixed by ``act`` (a map on trees)."""
    count = 0
    for chain in product(range(len(trees)), repeat=k):
        if all(leq(trees[chain[i]], trees[chain[i + 1]]) for i in range(k - 1)):
            if act is None or all(act(trees[c]) == trees[c] for c in chain):
                count += 1
    return count


def fraction_rank(mat) -> int:
    """Rank by plain Gaussian elimination over Q."""
    a = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(a)) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][c] != 0:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def rooted_trees_fixed(n: int, perm) -> int:
    """Labelled rooted trees on {1..n} (as parent maps) fixed by perm."""
    count = 0
    for root in range(1, n + 1):
        others = [v for v in range(1, n + 1) if v != root]
        for parents in product(range(1, n + 1), repeat=len(others)):
            parent = dict(zip(others, parents))
            if any(v == p for v, p in parent.items()):
                continue
            ok = True
            for v in others:
                seen, w = set(), v
                while w != root:
                    if w in seen:
                        ok = False
                        break
                    seen.add(w)
                    w = parent[w]
                if not ok:
                    break
            if not ok:
                continue
            s = lambda v: perm[v - 1]
            if s(root) == root and all(parent[s(v)] == s(p) for v, p in parent.items()):
                count += 1
    return count
