"""The generic cofactor matroid on the edge set of K_n.

Rank queries evaluate the cofactor matrix at sampled integer coordinate sets
and take the maximum rank over three independent samples.  Rank at any point
never exceeds the generic rank, so the maximum is a certified lower bound and,
by Schwartz-Zippel over coordinates drawn from [-2^62, 2^62], equal to the
generic rank except with vanishing probability.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional

from .frameworks import Framework, cofactor_rows, random_generic_framework
from .graphs import Edge, Graph, canon_edge, complete_edges

DEFAULT_MASTER_SEED = 987654321

EdgeSet = frozenset[Edge]


def _normalize(edges: Iterable[Edge]) -> EdgeSet:
    return frozenset(canon_edge(*e) for e in edges)


class GenericMatroid:
    """Rank oracle for the generic cofactor matroid on K(V), |V| = n."""

    def __init__(self, n: int, master_seed: int = DEFAULT_MASTER_SEED):
        self.n = n
        self.master_seed = master_seed
        rng = random.Random(master_seed)
        self.seeds = tuple(rng.randrange(2**63) for _ in range(3))
        complete = Graph.complete(n) if n >= 1 else Graph(0)
        self._frameworks = tuple(random_generic_framework(complete, s) for s in self.seeds)
        self._cache: dict[EdgeSet, int] = {}

    # -- certificates --------------------------------------------------

    def certificate(self) -> dict:
        """Seeds and sampled coordinates, sufficient to replay every query."""
        return {
            "n": self.n,
            "master_seed": self.master_seed,
            "seeds": list(self.seeds),
            "coordinates": [
                [[str(x), str(y)] for x, y in fw.coords] for fw in self._frameworks
            ],
        }

    # -- rank and derived queries --------------------------------------

    def rank(self, edges: Iterable[Edge]) -> int:
        f = _normalize(edges)
        for u, v in f:
            if v >= self.n:
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        cached = self._cache.get(f)
        if cached is not None:
            return cached
        ordered = sorted(f)
        r = max(cofactor_rows(fw, ordered).rank() for fw in self._frameworks) if f else 0
        self._cache[f] = r
        return r

    def rank_per_seed(self, edges: Iterable[Edge]) -> list[int]:
        """Rank of the restricted row set at each of the three samples."""
        ordered = sorted(_normalize(edges))
        return [cofactor_rows(fw, ordered).rank() for fw in self._frameworks]

    def independent(self, edges: Iterable[Edge]) -> bool:
        f = _normalize(edges)
        return self.rank(f) == len(f)

    def closure(self, edges: Iterable[Edge]) -> EdgeSet:
        f = _normalize(edges)
        r = self.rank(f)
        out = set(f)
        for e in complete_edges(range(self.n)):
            if e not in f and self.rank(f | {e}) == r:
                out.add(e)
        return frozenset(out)

    def is_circuit(self, edges: Iterable[Edge]) -> bool:
        f = _normalize(edges)
        if not f or self.rank(f) != len(f) - 1:
            return False
        return all(self.independent(f - {e}) for e in f)

    def spans(self, edges: Iterable[Edge], target: Iterable[Edge]) -> bool:
        f = _normalize(edges)
        r = self.rank(f)
        return all(e in f or self.rank(f | {e}) == r for e in _normalize(target))

    def is_rigid_graph(self, g: Graph) -> bool:
        """Generic rigidity of a graph on all n vertices of this ground set."""
        if g.n != self.n:
            raise ValueError("is_rigid_graph: vertex count mismatch")
        if g.n < 3:
            return True
        return self.rank(g.edges) == 3 * g.n - 6

    def graph_dof(self, g: Graph) -> int:
        if g.n != self.n:
            raise ValueError("graph_dof: vertex count mismatch")
        if g.n < 3:
            return 0
        return (3 * g.n - 6) - self.rank(g.edges)

    def local_dof(self, g: Graph, x: Iterable[int]) -> int:
        """Edges that must be added anywhere in K(V) to bring K(x) into the
        closure: rank(E + K(x)) - rank(E)."""
        xs = set(x)
        if any(not 0 <= v < self.n for v in xs):
            raise ValueError("local_dof: vertex out of range")
        e = _normalize(g.edges)
        return self.rank(e | complete_edges(xs)) - self.rank(e)

    def contracted_closure(self, e0: Iterable[Edge], f: Iterable[Edge]) -> EdgeSet:
        """Closure of f in the contraction by cl(e0), as a subset of
        K(V) \\ cl(e0)."""
        e0 = _normalize(e0)
        f = _normalize(f)
        cl0 = self.closure(e0)
        if f & cl0:
            raise ValueError("contracted_closure: f must avoid the closure of e0")
        base = self.rank(e0 | f)
        return frozenset(
            e
            for e in complete_edges(range(self.n))
            if e not in cl0 and self.rank(e0 | f | {e}) == base
        )


_matroids: dict[tuple[int, int], GenericMatroid] = {}


def matroid_for(n: int, master_seed: int = DEFAULT_MASTER_SEED) -> GenericMatroid:
    """Shared per-(n, seed) matroid so rank caches survive across queries."""
    key = (n, master_seed)
    if key not in _matroids:
        _matroids[key] = GenericMatroid(n, master_seed)
    return _matroids[key]


# -- structural classifiers -------------------------------------------


@dataclass(frozen=True)
class FiveSetClassification:
    case: str
    witness: dict = field(default_factory=dict)


FIVE_SET_CASES = (
    "K4_in_closure",
    "spanned_plus_one",
    "two_nonadjacent",
    "two_adjacent_star_center",
    "star_case",
)


def _contains_k4(edges: EdgeSet, u: Iterable[int]) -> Optional[tuple[int, ...]]:
    for quad in combinations(sorted(u), 4):
        if complete_edges(quad) <= edges:
            return quad
    return None


def classify_five_set(m: GenericMatroid, h: Graph, u: Iterable[int]) -> FiveSetClassification:
    """Return the first applicable case of the five-way structure alternative
    for an independent graph h and a 5-vertex set u.

    Cases are checked in order; witnesses within a case are lexicographic.
    """
    u = tuple(sorted(set(u)))
    if len(u) != 5:
        raise ValueError("classify_five_set: need exactly 5 distinct vertices")
    e = _normalize(h.edges)
    if not m.independent(e):
        raise ValueError("classify_five_set: edge set of h must be independent")
    k = complete_edges(u)
    cl_k = m.closure(e) & k

    # (i) closure contains a K4 on u
    quad = _contains_k4(cl_k, u)
    if quad is not None:
        return FiveSetClassification("K4_in_closure", {"vertices": list(quad)})

    # (ii) a single added edge spans all of K(u)
    for edge in sorted(k):
        if m.spans(e | {edge}, k):
            return FiveSetClassification("spanned_plus_one", {"edge": list(edge)})

    # (iii) two non-adjacent new edges extend independently.  Candidates must
    # be genuinely new: re-adding an existing edge augments by one element
    # only, which is not a two-edge extension.
    new = sorted(k - e)
    for e1, e2 in combinations(new, 2):
        if set(e1) & set(e2):
            continue
        if m.independent(e | {e1, e2}):
            return FiveSetClassification("two_nonadjacent", {"edges": [list(e1), list(e2)]})

    # (iv) two adjacent new edges extend independently, with their common
    # endpoint already incident to two closure edges on u
    for e1, e2 in combinations(new, 2):
        shared = set(e1) & set(e2)
        if len(shared) != 1:
            continue
        v = shared.pop()
        if sum(1 for edge in cl_k if v in edge) < 2:
            continue
        if m.independent(e | {e1, e2}):
            return FiveSetClassification(
                "two_adjacent_star_center",
                {"edges": [list(e1), list(e2)], "center": v},
            )

    # (v) the closure restricted to u is a star and no single addition creates a K4
    star = star_center(cl_k, u)
    if star is not None:
        if all(_contains_k4(m.closure(e | {edge}) & k, u) is None for edge in sorted(k)):
            return FiveSetClassification(
                "star_case", {"center": star, "edges": sorted(list(edge) for edge in cl_k)}
            )
    raise AssertionError(
        "classify_five_set: no case matched; the five-way alternative should be total"
    )


def star_center(edges: EdgeSet, u: Iterable[int]) -> Optional[int]:
    """If `edges` is exactly a star spanning the 5 vertices, return its center."""
    u = tuple(sorted(set(u)))
    if len(edges) != 4:
        return None
    for c in u:
        leaves = set(u) - {c}
        if edges == frozenset(canon_edge(c, w) for w in leaves):
            return c
    return None


def is_type_star(m: GenericMatroid, g: Graph, v0: int) -> bool:
    """Degree-5 vertex whose removal leaves a star-shaped closure on its
    neighborhood, with the two associated edge-augmented graphs rigid.

    Searches all labelings v1..v5 of the neighbors.
    """
    if g.n != m.n:
        raise ValueError("is_type_star: vertex count mismatch")
    nbrs = sorted(g.neighbors(v0))
    if len(nbrs) != 5:
        return False
    h = g.remove_vertex(v0)

    def relabel(w: int) -> int:
        return w if w < v0 else w - 1

    mh = matroid_for(h.n, m.master_seed)
    rn = [relabel(w) for w in nbrs]
    cl_k = mh.closure(h.edges) & complete_edges(rn)
    center = star_center(cl_k, rn)
    if center is None:
        return False
    for perm in permutations(rn):
        v1, v2, v3, v4, v5 = perm
        if v5 != center:
            continue
        g1 = h.add_edges([(v1, v2), (v1, v3)])
        if not mh.is_rigid_graph(g1):
            continue
        g2 = h.add_edges([(v1, v3), (v3, v4)])
        if mh.is_rigid_graph(g2):
            return True
    return False


def check_op_preserves_independence(m: GenericMatroid, before: Graph, after: Graph) -> bool:
    """Harness for the extension operations: given an independent input graph,
    report whether the operation output is independent."""
    mb = matroid_for(before.n, m.master_seed)
    if not mb.independent(before.edges):
        raise ValueError("check_op_preserves_independence: input graph must be independent")
    ma = matroid_for(after.n, m.master_seed)
    return ma.independent(after.edges)
