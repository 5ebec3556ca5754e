"""Hypergraphs, hypertrees and their pointed variants.

A hypertree on a vertex set V is a hypergraph whose edges have at least two
vertices, which is connected, and in which the walk with distinct edges
between any two vertices is unique. Equivalently its vertex/edge incidence
graph is a tree.

Vertices are positive integers. Hollow structures additionally carry the
gap vertex, always labelled 0; permutations never move it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence, Union

from .errors import DomainError, ResourceLimitError, ValidationError
from .partitions import Permutation

Edge = tuple[int, ...]
Node = Union[int, Edge]  # a vertex or an edge; walks alternate between them
Walk = tuple[Node, ...]

GAP = 0
MAX_ENUMERATION_N = 7


def _canonical_edges(edges: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    return tuple(sorted(tuple(sorted(e)) for e in edges))


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph with canonically ordered edges.

    ``vertices`` is either ``(1, ..., n)`` or, for structures carrying the
    gap, ``(0, 1, ..., n - 1)``.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        vertices = tuple(sorted(self.vertices))
        edges = _canonical_edges(self.edges)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        if len(set(vertices)) != len(vertices):
            raise ValidationError(f"repeated vertices in {vertices}")
        vset = set(vertices)
        for e in edges:
            if len(e) < 2:
                raise ValidationError(f"edge {e} has fewer than two vertices")
            if len(set(e)) != len(e):
                raise ValidationError(f"edge {e} repeats a vertex")
            if not set(e) <= vset:
                raise ValidationError(f"edge {e} is not a subset of {vertices}")
        if len(set(edges)) != len(edges):
            raise ValidationError("duplicate edges")

    @classmethod
    def on_range(cls, n: int, edges: Iterable[Iterable[int]], gap: bool = False):
        """Hypergraph on {1..n}, or on {0 (gap), 1..n-1} when ``gap`` is set."""
        vertices = tuple(range(n)) if gap else tuple(range(1, n + 1))
        return cls(vertices, tuple(tuple(e) for e in edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def has_gap(self) -> bool:
        return GAP in self.vertices

    @property
    def labels(self) -> tuple[int, ...]:
        """Vertices acted on by permutations (everything but the gap)."""
        return tuple(v for v in self.vertices if v != GAP)

    def edges_at(self, v: int) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if v in e)

    def __str__(self) -> str:
        return format_structure(self)


def _incidence_is_tree(hg: Hypergraph) -> bool:
    if not hg.vertices:
        return False
    # a tree on |V| + |E| nodes has exactly |V| + |E| - 1 incidences
    if sum(len(e) for e in hg.edges) != hg.n + len(hg.edges) - 1:
        return False
    seen = {hg.vertices[0]}
    queue = deque([hg.vertices[0]])
    adjacency = {v: [] for v in hg.vertices}
    for i, e in enumerate(hg.edges):
        for v in e:
            adjacency[v].append(i)
    seen_edges: set[int] = set()
    while queue:
        v = queue.popleft()
        for i in adjacency[v]:
            if i in seen_edges:
                continue
            seen_edges.add(i)
            for w in hg.edges[i]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return len(seen) == hg.n


def validate_hypertree(hg: Hypergraph) -> bool:
    """True iff ``hg`` is connected and has no cycles.

    Structural problems are reported by constructing the Hypergraph, which
    raises ValidationError; they never come back as ``False``.
    """
    if not isinstance(hg, Hypergraph):
        raise ValidationError(f"expected a Hypergraph, got {type(hg).__name__}")
    return _incidence_is_tree(hg)


@dataclass(frozen=True)
class Hypertree(Hypergraph):
    """A validated hypertree."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not _incidence_is_tree(self):
            raise DomainError(f"not a hypertree: {format_edges(self.edges)}")

    @property
    def rank(self) -> int:
        return len(self.edges) - 1


_KINDS = ("rooted", "edge-pointed", "edge-pointed-rooted", "hollow")


@dataclass(frozen=True)
class PointedHypertree:
    """A hypertree with a pointing.

    Exactly one of the following shapes:
      rooted               root set, edge None
      edge-pointed         edge set, root None
      edge-pointed-rooted  both set, root in edge
      hollow               ``tree`` contains the gap 0, lying in exactly one edge
    """

    tree: Hypertree
    root: int | None = None
    edge: Edge | None = None
    gap: bool = field(default=False)

    def __post_init__(self) -> None:
        if self.edge is not None:
            object.__setattr__(self, "edge", tuple(sorted(self.edge)))
        tree = self.tree
        if self.gap:
            if self.root is not None or self.edge is not None:
                raise DomainError("hollow structures carry no other pointing")
            if not tree.has_gap or len(tree.edges_at(GAP)) != 1:
                raise DomainError("the gap must lie in exactly one edge")
            return
        if tree.has_gap:
            raise DomainError("only hollow structures may contain the gap vertex")
        if self.root is None and self.edge is None:
            raise DomainError("a pointed hypertree needs a root or an edge")
        if self.root is not None and self.root not in tree.vertices:
            raise DomainError(f"root {self.root} is not a vertex")
        if self.edge is not None:
            if self.edge not in tree.edges:
                raise DomainError(f"{self.edge} is not an edge")
            if self.root is not None and self.root not in self.edge:
                raise DomainError("the root must belong to the pointed edge")

    @property
    def kind(self) -> str:
        if self.gap:
            return "hollow"
        if self.edge is None:
            return "rooted"
        if self.root is None:
            return "edge-pointed"
        return "edge-pointed-rooted"

    @property
    def n(self) -> int:
        return self.tree.n

    def __str__(self) -> str:
        return format_structure(self)


Structure = Union[Hypertree, PointedHypertree]


# ---------------------------------------------------------------- text codec


def format_edges(edges: Sequence[Edge]) -> str:
    return ";".join("{" + ",".join(map(str, e)) + "}" for e in edges)


def format_structure(x: Structure | Hypergraph) -> str:
    """Text encoding, e.g. ``{1,2,4};{2,3}@edge=0@root=2``.

    The edge pointing is the index into the canonical edge list. The n = 1
    hypertree has no edges and encodes as the empty string.
    """
    if isinstance(x, PointedHypertree):
        text = format_edges(x.tree.edges)
        if x.edge is not None:
            text += f"@edge={x.tree.edges.index(x.edge)}"
        if x.root is not None:
            text += f"@root={x.root}"
        if x.gap:
            text += f"@gap={GAP}"
        return text
    return format_edges(x.edges)


def parse_structure(text: str) -> Structure:
    """Inverse of :func:`format_structure`."""
    body, *pointings = text.strip().split("@")
    edges = []
    if body:
        for chunk in body.split(";"):
            chunk = chunk.strip()
            if not (chunk.startswith("{") and chunk.endswith("}")):
                raise ValidationError(f"malformed edge {chunk!r}")
            edges.append(tuple(int(v) for v in chunk[1:-1].split(",")))
    labels = {v for e in edges for v in e}
    opts: dict[str, int] = {}
    for p in pointings:
        key, _, value = p.partition("=")
        if key not in ("edge", "root", "gap") or key in opts:
            raise ValidationError(f"bad pointing {p!r}")
        opts[key] = int(value)
    if not labels:
        labels = {1}
    if "root" in opts:
        labels.add(opts["root"])
    has_gap = GAP in labels
    n = len(labels)
    expected = set(range(n)) if has_gap else set(range(1, n + 1))
    if labels != expected:
        raise ValidationError(f"vertex labels {sorted(labels)} are not contiguous")
    tree = Hypertree.on_range(n, edges, gap=has_gap)
    if not opts:
        return tree
    if "gap" in opts:
        if opts["gap"] != GAP:
            raise ValidationError("the gap is always printed as vertex 0")
        return PointedHypertree(tree, gap=True)
    edge = None
    if "edge" in opts:
        if not 0 <= opts["edge"] < len(tree.edges):
            raise ValidationError(f"edge index {opts['edge']} out of range")
        edge = tree.edges[opts["edge"]]
    return PointedHypertree(tree, root=opts.get("root"), edge=edge)


# -------------------------------------------------------------- enumeration


def _set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


@lru_cache(maxsize=None)
def _rooted(vertices: frozenset, root: int) -> tuple[tuple[frozenset, ...], ...]:
    # A hypertree seen from a root: a set of edges through the root, each
    # carrying a nonempty set of rooted sub-hypertrees on its other vertices.
    rest = sorted(vertices - {root})
    if not rest:
        return ((),)
    out = []
    for blocks in _set_partitions(rest):
        options = [_branches(frozenset(b), root) for b in blocks]
        for combo in product(*options):
            out.append(tuple(e for branch in combo for e in branch))
    return tuple(out)


@lru_cache(maxsize=None)
def _branches(block: frozenset, root: int) -> tuple[tuple[frozenset, ...], ...]:
    items = sorted(block)
    out = []
    for size in range(1, len(items) + 1):
        for children in combinations(items, size):
            remaining = [v for v in items if v not in children]
            for owners in product(children, repeat=len(remaining)):
                groups = {c: {c} for c in children}
                for v, c in zip(remaining, owners):
                    groups[c].add(v)
                subtrees = [_rooted(frozenset(groups[c]), c) for c in children]
                edge = frozenset((root,) + children)
                for combo in product(*subtrees):
                    out.append((edge,) + tuple(e for sub in combo for e in sub))
    return tuple(out)


def _sort_key(t: Hypergraph) -> tuple:
    return (len(t.edges), t.edges)


def hypertrees_on(vertices: Sequence[int]) -> list[Hypertree]:
    """All hypertrees on the given vertex set, sorted by (edge count, edges)."""
    vertices = tuple(sorted(vertices))
    if not vertices:
        raise DomainError("a hypertree needs at least one vertex")
    raw = _rooted(frozenset(vertices), vertices[0])
    trees = [Hypertree(vertices, tuple(tuple(e) for e in edges)) for edges in raw]
    trees.sort(key=_sort_key)
    return trees


def _check_n(n: int, bound: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n > bound:
        raise ResourceLimitError(f"n = {n} exceeds the enumeration bound {bound}")


def enumerate_hypertrees(n: int, bound: int = MAX_ENUMERATION_N) -> list[Hypertree]:
    """All hypertrees on {1..n}, canonical, in deterministic order."""
    _check_n(n, bound)
    return hypertrees_on(range(1, n + 1))


def enumerate_pointed(n: int, variant: str, bound: int = MAX_ENUMERATION_N) -> list[PointedHypertree]:
    """All pointed hypertrees of a variant.

    ``hollow`` structures on n vertices live on {0 (gap), 1..n-1}, so
    they need n >= 2; ``edge-pointed-rooted`` also needs n >= 2. The
    edge-pointed variant is empty for n = 1.
    """
    if variant not in _KINDS:
        raise DomainError(f"unknown variant {variant!r}")
    _check_n(n, bound)
    if variant == "hollow":
        if n < 2:
            raise DomainError("hollow hypertrees need n >= 2")
        return [
            PointedHypertree(t, gap=True)
            for t in hypertrees_on(range(n))
            if len(t.edges_at(GAP)) == 1
        ]
    if variant == "edge-pointed-rooted" and n < 2:
        raise DomainError("edge-pointed rooted hypertrees need n >= 2")
    out = []
    for t in enumerate_hypertrees(n, bound):
        if variant == "rooted":
            out.extend(PointedHypertree(t, root=v) for v in t.vertices)
        elif variant == "edge-pointed":
            out.extend(PointedHypertree(t, edge=e) for e in t.edges)
        else:
            out.extend(PointedHypertree(t, root=v, edge=e) for e in t.edges for v in e)
    return out


# ----------------------------------------------------------- walks, centers


def _adjacency(t: Hypergraph) -> dict[Node, list[Node]]:
    adj: dict[Node, list[Node]] = {v: [] for v in t.vertices}
    for e in t.edges:
        adj[e] = list(e)
        for v in e:
            adj[v].append(e)
    return adj


def _bfs(t: Hypergraph, start: Node) -> dict[Node, Node | None]:
    adj = _adjacency(t)
    if start not in adj:
        raise DomainError(f"{start!r} is not a vertex or edge of the hypertree")
    parent: dict[Node, Node | None] = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    return parent


def _normalize_node(x: Node | Iterable[int]) -> Node:
    return x if isinstance(x, int) else tuple(sorted(x))


def minimal_walk(t: Hypertree, start: Node, end: int) -> Walk:
    """The unique minimal walk from a vertex or edge to a vertex."""
    start = _normalize_node(start)
    if not isinstance(end, int) or end not in t.vertices:
        raise DomainError(f"walk end {end!r} must be a vertex")
    parent = _bfs(t, end)
    if start not in parent:
        raise DomainError(f"{start!r} is not a vertex or edge of the hypertree")
    walk = [start]
    while walk[-1] != end:
        walk.append(parent[walk[-1]])
    return tuple(walk)


def distances(t: Hypergraph, start: Node) -> dict[Node, int]:
    """Incidence-graph distance from ``start`` to every vertex and edge."""
    start = _normalize_node(start)
    adj = _adjacency(t)
    if start not in adj:
        raise DomainError(f"{start!r} is not a vertex or edge of the hypertree")
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def eccentricity(t: Hypertree, x: Node) -> int:
    """Largest number of vertices and edges on a minimal walk from x to a vertex."""
    dist = distances(t, x)
    return max(dist[v] for v in t.vertices) + 1


def center(t: Structure) -> Node:
    """The vertex or edge of minimal eccentricity; pointings are ignored."""
    tree = t.tree if isinstance(t, PointedHypertree) else t
    nodes: list[Node] = list(tree.vertices) + list(tree.edges)
    ecc = {x: eccentricity(tree, x) for x in nodes}
    best = min(ecc.values())
    winners = [x for x in nodes if ecc[x] == best]
    if len(winners) != 1:
        raise AssertionError(f"center not unique in {tree}: {winners}")
    return winners[0]


# ------------------------------------------------------- dissymmetry maps


def dissymmetry_phi(x: Structure) -> PointedHypertree:
    """Bijection from plain + edge-pointed-rooted to rooted + edge-pointed."""
    if isinstance(x, Hypertree):
        c = center(x)
        if isinstance(c, int):
            return PointedHypertree(x, root=c)
        return PointedHypertree(x, edge=c)
    if not isinstance(x, PointedHypertree) or x.kind != "edge-pointed-rooted":
        raise DomainError("phi is defined on plain and edge-pointed rooted hypertrees")
    t = x.tree
    c = center(t)
    if c == x.root:
        return PointedHypertree(t, edge=x.edge)
    if c == x.edge:
        return PointedHypertree(t, root=x.root)
    dist = distances(t, c)
    # root and pointed edge are adjacent, so exactly one of them is nearer
    if dist[x.root] < dist[x.edge]:
        return PointedHypertree(t, edge=x.edge)
    return PointedHypertree(t, root=x.root)


def dissymmetry_psi(x: PointedHypertree) -> Structure:
    """Inverse of :func:`dissymmetry_phi`."""
    if not isinstance(x, PointedHypertree) or x.kind not in ("rooted", "edge-pointed"):
        raise DomainError("psi is defined on rooted and edge-pointed hypertrees")
    t = x.tree
    c = center(t)
    if x.kind == "edge-pointed":
        if c == x.edge:
            return t
        if isinstance(c, int) and c in x.edge:
            return PointedHypertree(t, root=c, edge=x.edge)
        dist = distances(t, c)
        nearest = min(x.edge, key=dist.__getitem__)
        return PointedHypertree(t, root=nearest, edge=x.edge)
    if c == x.root:
        return t
    if not isinstance(c, int) and x.root in c:
        return PointedHypertree(t, root=x.root, edge=c)
    walk = minimal_walk(t, x.root, c) if isinstance(c, int) else _walk_to_node(t, x.root, c)
    return PointedHypertree(t, root=x.root, edge=walk[1])


def _walk_to_node(t: Hypertree, start: int, target: Edge) -> Walk:
    parent = _bfs(t, target)
    walk = [start]
    while walk[-1] != target:
        walk.append(parent[walk[-1]])
    return tuple(walk)


# --------------------------------------------------------------- relabeling


def _relabel(perm: Permutation, v: int) -> int:
    return v if v == GAP else perm[v - 1]


def apply_permutation(x: Structure, perm: Sequence[int]) -> Structure:
    """Relabel by a permutation of the numbered labels; the gap stays fixed."""
    tree = x.tree if isinstance(x, PointedHypertree) else x
    perm = tuple(perm)
    labels = tree.labels
    if sorted(perm) != list(labels) or len(perm) != len(labels):
        raise DomainError(f"permutation {perm} does not act on labels {labels}")
    edges = tuple(tuple(_relabel(perm, v) for v in e) for e in tree.edges)
    image = Hypertree(tree.vertices, edges)
    if isinstance(x, Hypertree):
        return image
    root = None if x.root is None else _relabel(perm, x.root)
    edge = None if x.edge is None else tuple(sorted(_relabel(perm, v) for v in x.edge))
    return PointedHypertree(image, root=root, edge=edge, gap=x.gap)
