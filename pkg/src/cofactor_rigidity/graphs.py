"""Undirected simple graphs on dense integer labels, plus the extension
operations used to build independent graphs: 0-extension, 1-extension,
X-replacement, V-replacement, vertex splitting and double V-replacement.

Every operation returns a fresh graph; the new vertex always takes label
``g.n`` so repeated constructions are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

Edge = tuple[int, int]


def canon_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def complete_edges(vertices: Iterable[int]) -> frozenset[Edge]:
    """All pairs over the given vertex set."""
    vs = sorted(set(vertices))
    return frozenset(canon_edge(u, v) for u, v in combinations(vs, 2))


def sorted_edges(edges: Iterable[Edge]) -> list[Edge]:
    return sorted(canon_edge(*e) for e in edges)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices 0..n-1."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(canon_edge(*e) for e in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, complete_edges(range(n)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        edges = frozenset(canon_edge(i, a + j) for i in range(a) for j in range(b))
        return cls(a + b, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return canon_edge(u, v) in self.edges

    def add_edges(self, new: Iterable[Edge]) -> "Graph":
        return Graph(self.n, self.edges | {canon_edge(*e) for e in new})

    def remove_edges(self, gone: Iterable[Edge]) -> "Graph":
        return Graph(self.n, self.edges - {canon_edge(*e) for e in gone})

    def remove_vertex(self, v: int) -> "Graph":
        """Delete v and relabel vertices above it down by one."""

        def relabel(w: int) -> int:
            return w if w < v else w - 1

        edges = frozenset(
            canon_edge(relabel(a), relabel(b)) for a, b in self.edges if v not in (a, b)
        )
        return Graph(self.n - 1, edges)


def zero_extension(g: Graph, targets: tuple[int, int, int]) -> Graph:
    """Add a new vertex joined to three distinct existing vertices."""
    if len(set(targets)) != 3:
        raise ValueError("zero_extension: targets must be 3 distinct vertices")
    if any(not 0 <= t < g.n for t in targets):
        raise ValueError("zero_extension: target out of range")
    v = g.n
    return Graph(g.n + 1, g.edges | {canon_edge(v, t) for t in targets})


def one_extension(g: Graph, removed: Edge, targets: tuple[int, int, int, int]) -> Graph:
    """Remove an edge, add a new vertex with four edges covering its endpoints."""
    removed = canon_edge(*removed)
    if removed not in g.edges:
        raise ValueError(f"one_extension: edge {removed} not in graph")
    tset = set(targets)
    if len(tset) != 4:
        raise ValueError("one_extension: targets must be 4 distinct vertices")
    if not set(removed) <= tset:
        raise ValueError("one_extension: targets must contain both endpoints of the removed edge")
    if any(not 0 <= t < g.n for t in tset):
        raise ValueError("one_extension: target out of range")
    v = g.n
    return Graph(g.n + 1, (g.edges - {removed}) | {canon_edge(v, t) for t in tset})


def x_replacement(g: Graph, e: Edge, f: Edge, fifth: int) -> Graph:
    """Remove two vertex-disjoint edges; add a new vertex joined to their four
    endpoints and one further vertex."""
    e = canon_edge(*e)
    f = canon_edge(*f)
    if e not in g.edges or f not in g.edges:
        raise ValueError("x_replacement: both edges must belong to the graph")
    if set(e) & set(f):
        raise ValueError("x_replacement: edges must be non-adjacent")
    if fifth in set(e) | set(f):
        raise ValueError("x_replacement: fifth vertex must avoid the four endpoints")
    if not 0 <= fifth < g.n:
        raise ValueError("x_replacement: fifth vertex out of range")
    v = g.n
    nbrs = set(e) | set(f) | {fifth}
    return Graph(g.n + 1, (g.edges - {e, f}) | {canon_edge(v, t) for t in nbrs})


def v_replacement(g: Graph, e: Edge, f: Edge, others: tuple[int, int]) -> Graph:
    """Remove two adjacent edges; add a new vertex joined to their three
    endpoints and two further vertices.

    Does not always preserve independence; see the matroid-level harness.
    """
    e = canon_edge(*e)
    f = canon_edge(*f)
    if e not in g.edges or f not in g.edges:
        raise ValueError("v_replacement: both edges must belong to the graph")
    shared = set(e) & set(f)
    if len(shared) != 1:
        raise ValueError("v_replacement: edges must share exactly one endpoint")
    ends = set(e) | set(f)
    if len(set(others)) != 2 or set(others) & ends:
        raise ValueError("v_replacement: others must be 2 vertices disjoint from the edge endpoints")
    if any(not 0 <= t < g.n for t in others):
        raise ValueError("v_replacement: vertex out of range")
    v = g.n
    nbrs = ends | set(others)
    return Graph(g.n + 1, (g.edges - {e, f}) | {canon_edge(v, t) for t in nbrs})


def vertex_split(g: Graph, u: int, u1: set[int], u2: set[int], u3: set[int]) -> Graph:
    """Split vertex u: move its edges to u3 onto a new vertex v, with v also
    joined to u and to both vertices of u2."""
    nbrs = g.neighbors(u)
    if u1 | u2 | u3 != nbrs or (u1 & u2) or (u1 & u3) or (u2 & u3):
        raise ValueError("vertex_split: u1, u2, u3 must partition N(u)")
    if len(u2) != 2:
        raise ValueError("vertex_split: |u2| must be 2")
    v = g.n
    removed = {canon_edge(u, w) for w in u3}
    added = {canon_edge(v, w) for w in u2 | u3 | {u}}
    return Graph(g.n + 1, (g.edges - removed) | added)


def double_v_replacement(
    h: Graph,
    pair1: tuple[Edge, Edge],
    pair2: tuple[Edge, Edge],
    neighbors: tuple[int, int, int, int, int],
) -> Graph:
    """Remove the first adjacent pair from h and add a degree-5 vertex adjacent
    to the five given neighbors.

    pair2 is the alternative adjacent pair certifying the double-V shape: its
    common endpoint must differ from pair1's, and all endpoints of both pairs
    must lie in `neighbors`.  Preserves independence whenever h+pair1 and
    h+pair2 are both independent.
    """
    e1, e2 = (canon_edge(*e) for e in pair1)
    f1, f2 = (canon_edge(*e) for e in pair2)
    c1 = set(e1) & set(e2)
    c2 = set(f1) & set(f2)
    if len(c1) != 1 or len(c2) != 1:
        raise ValueError("double_v_replacement: each pair must be adjacent edges")
    if c1 == c2:
        raise ValueError("double_v_replacement: the two pairs must have distinct common endpoints")
    nset = set(neighbors)
    if len(nset) != 5:
        raise ValueError("double_v_replacement: need 5 distinct neighbors")
    if not (set(e1) | set(e2) | set(f1) | set(f2)) <= nset:
        raise ValueError("double_v_replacement: all pair endpoints must be neighbors")
    if e1 not in h.edges or e2 not in h.edges:
        raise ValueError("double_v_replacement: pair1 must consist of edges of h")
    v = h.n
    return Graph(h.n + 1, (h.edges - {e1, e2}) | {canon_edge(v, t) for t in nset})
