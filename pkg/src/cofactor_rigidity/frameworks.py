"""Frameworks (graphs with exact plane coordinates), the cofactor matrix whose
row matroid is studied throughout, pinning, and motion-space queries.

Column layout: one 3-column block per vertex in ascending label order.  Row
layout: edges in lexicographic order.  These conventions make the matrices
byte-comparable against known small instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import Edge, Graph
from .linalg import Q, QMatrix, dot

Point = tuple[Fraction, Fraction]
Motion = list[list[Fraction]]  # one 3-vector per vertex

COORD_BOUND = 2**62


class DegenerateFrameworkError(ValueError):
    """Raised when a query requires the points to affinely span the plane."""


def d_vector(p: Point, q: Point) -> list[Fraction]:
    """((px-qx)^2, (px-qx)(py-qy), (py-qy)^2)."""
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return [dx * dx, dx * dy, dy * dy]


def d_vector_general(s: int, p: Point, q: Point) -> list[Fraction]:
    """Graded degree-s difference vector with s+1 components."""
    if s < 1:
        raise ValueError("d_vector_general: degree must be >= 1")
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return [dx ** (s - k) * dy**k for k in range(s + 1)]


@dataclass(frozen=True)
class Framework:
    graph: Graph
    coords: tuple[Point, ...]

    def __post_init__(self):
        if len(self.coords) != self.graph.n:
            raise ValueError("Framework: one coordinate pair per vertex required")
        object.__setattr__(
            self, "coords", tuple((Q(x), Q(y)) for x, y in self.coords)
        )

    def point(self, v: int) -> Point:
        return self.coords[v]

    def is_collinear(self) -> bool:
        """True when the points fail to affinely span the plane."""
        pts = self.coords
        if len(pts) < 3:
            return True
        p0 = pts[0]
        base = next((p for p in pts[1:] if p != p0), None)
        if base is None:
            return True
        ux, uy = base[0] - p0[0], base[1] - p0[1]
        return all((p[0] - p0[0]) * uy - (p[1] - p0[1]) * ux == 0 for p in pts)


@dataclass(frozen=True)
class PinTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if len({self.a, self.b, self.c}) != 3:
            raise ValueError("PinTriple: vertices must be distinct")

    def validate(self, f: Framework) -> None:
        ya, yb, yc = (f.point(v)[1] for v in (self.a, self.b, self.c))
        if (ya - yb) * (ya - yc) * (yb - yc) == 0:
            raise ValueError(
                f"PinTriple: pinned vertices must have pairwise distinct y-coordinates "
                f"(got {ya}, {yb}, {yc})"
            )


def cofactor_rows(f: Framework, edges: Iterable[Edge]) -> QMatrix:
    """The rows of the cofactor matrix for the given edges, in the given order."""
    n = f.graph.n
    rows = []
    for u, v in edges:
        i, j = (u, v) if u < v else (v, u)
        d = d_vector(f.point(i), f.point(j))
        row = [Q(0)] * (3 * n)
        row[3 * i : 3 * i + 3] = d
        row[3 * j : 3 * j + 3] = [-e for e in d]
        rows.append(row)
    if not rows:
        return QMatrix.zeros(0, 3 * n)
    return QMatrix.from_rows(rows)


def cofactor_matrix(f: Framework) -> QMatrix:
    """|E| x 3n matrix; edge rows in lexicographic order."""
    return cofactor_rows(f, f.graph.sorted_edges())


def pin_rows(n: int, pins: PinTriple) -> QMatrix:
    """The six unit rows e_{a,1}, e_{a,2}, e_{a,3}, e_{b,1}, e_{b,2}, e_{c,1}."""
    slots = [
        (pins.a, 0), (pins.a, 1), (pins.a, 2),
        (pins.b, 0), (pins.b, 1),
        (pins.c, 0),
    ]
    rows = []
    for v, t in slots:
        row = [Q(0)] * (3 * n)
        row[3 * v + t] = Q(1)
        rows.append(row)
    return QMatrix.from_rows(rows)


def extended_cofactor_matrix(f: Framework, pins: PinTriple) -> QMatrix:
    """(|E|+6) x 3n matrix: the six pinning rows on top of the edge rows.

    Construction itself places no condition on the pinned y-coordinates; the
    distinct-y hypothesis is needed (and checked) only where the kernel of
    this matrix is interpreted as the nontrivial motion space.
    """
    return pin_rows(f.graph.n, pins).stack(cofactor_matrix(f))


def trivial_motion_basis(f: Framework) -> list[Motion]:
    """The six motions spanning the trivial space:
    (1,0,0), (0,1,0), (0,0,1), (y,-x,0), (0,-y,x), (y^2,-2xy,x^2) per vertex."""
    out: list[Motion] = []
    coords = f.coords
    out.append([[Q(1), Q(0), Q(0)] for _ in coords])
    out.append([[Q(0), Q(1), Q(0)] for _ in coords])
    out.append([[Q(0), Q(0), Q(1)] for _ in coords])
    out.append([[y, -x, Q(0)] for x, y in coords])
    out.append([[Q(0), -y, x] for x, y in coords])
    out.append([[y * y, -2 * x * y, x * x] for x, y in coords])
    return out


def motion_to_vec(q: Motion) -> list[Fraction]:
    return [c for triple in q for c in triple]


def vec_to_motion(v: Sequence[Fraction]) -> Motion:
    return [list(v[i : i + 3]) for i in range(0, len(v), 3)]


def edge_residual(f: Framework, q: Motion, u: int, v: int) -> Fraction:
    """D(p_u, p_v) . (q(u) - q(v))."""
    d = d_vector(f.point(u), f.point(v))
    diff = [a - b for a, b in zip(q[u], q[v])]
    return dot(d, diff)


def is_motion(f: Framework, q: Motion) -> bool:
    """True iff every edge row annihilates q exactly."""
    if len(q) != f.graph.n or any(len(t) != 3 for t in q):
        raise ValueError("is_motion: motion must assign a 3-vector to each vertex")
    return all(edge_residual(f, q, u, v) == 0 for u, v in f.graph.edges)


def dof(f: Framework) -> int:
    """Kernel dimension of the cofactor matrix minus the 6 trivial dimensions.

    Graphs on fewer than 3 vertices are reported rigid with dof 0.  Collinear
    point sets are rejected: the trivial space degenerates there.
    """
    if f.graph.n < 3:
        return 0
    if f.is_collinear():
        raise DegenerateFrameworkError("dof: points are collinear")
    c = cofactor_matrix(f)
    return (c.cols - c.rank()) - 6


def nontrivial_motion_basis(f: Framework, pins: PinTriple) -> list[Motion]:
    """Kernel basis of the extended (pinned) cofactor matrix.

    For a k-dof framework this has exactly k elements, each vanishing on the
    six pinned coordinates.
    """
    if f.graph.n >= 3 and f.is_collinear():
        raise DegenerateFrameworkError("nontrivial_motion_basis: points are collinear")
    pins.validate(f)
    ext = extended_cofactor_matrix(f, pins)
    return [vec_to_motion(v) for v in ext.kernel_basis()]


def random_generic_framework(g: Graph, seed: int) -> Framework:
    """Deterministic pseudo-generic realization: independent uniform integer
    coordinates in [-2^62, 2^62]."""
    rng = random.Random(seed)
    coords = tuple(
        (Q(rng.randint(-COORD_BOUND, COORD_BOUND)), Q(rng.randint(-COORD_BOUND, COORD_BOUND)))
        for _ in range(g.n)
    )
    return Framework(g, coords)


def row_removal_kernel_family(m: QMatrix, deleted: Sequence[int]) -> list[list[Fraction]]:
    """For a nonsingular square matrix, the kernel vectors obtained by deleting
    one row at a time from the given row set.

    Each returned vector spans the 1-dimensional kernel of m with that row
    removed; the family is linearly independent.
    """
    if m.rows != m.cols:
        raise ValueError("row_removal_kernel_family: matrix must be square")
    if m.rank() != m.rows:
        raise ValueError("row_removal_kernel_family: matrix must be nonsingular")
    out = []
    for d in deleted:
        rows = [m.row(i) for i in range(m.rows) if i != d]
        sub = QMatrix.from_rows(rows)
        basis = sub.kernel_basis()
        out.append(basis[0])
    return out
