"""Signed-area determinant identities and the explicit polynomial motion map
attached to a degree-5 vertex, together with its annihilation-pattern
diagnostics.

The map assigns 3-vectors b(v0)..b(v5) to the closed neighborhood of a
degree-5 vertex; its defining property is that among the neighbor pairs the
annihilated ones form exactly the 4-edge star centered on v5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .frameworks import Point, d_vector, d_vector_general
from .linalg import Q, QMatrix, cross, dot


def triangle_area2(p: Point, q: Point, r: Point) -> Fraction:
    """Twice the signed area: det of rows (x, y, 1)."""
    return QMatrix.from_rows(
        [[p[0], p[1], Q(1)], [q[0], q[1], Q(1)], [r[0], r[1], Q(1)]]
    ).det()


def _det3(rows: list[list[Fraction]]) -> Fraction:
    return QMatrix.from_rows(rows).det()


def vandermonde_identity_check(
    p0: Point, p1: Point, p2: Point, p3: Point
) -> tuple[Fraction, Fraction]:
    """(lhs, rhs) of the cubic determinant identity:
    det[D(p0,p1); D(p0,p2); D(p0,p3)] = -A(p0,p1,p2) A(p0,p2,p3) A(p0,p3,p1),
    where A is twice the signed triangle area.  The two always agree."""
    lhs = _det3([d_vector(p0, p1), d_vector(p0, p2), d_vector(p0, p3)])
    rhs = (
        -triangle_area2(p0, p1, p2)
        * triangle_area2(p0, p2, p3)
        * triangle_area2(p0, p3, p1)
    )
    return lhs, rhs


def vandermonde_general_check(d: int, points: list[Point]) -> tuple[Fraction, Fraction]:
    """General-degree version: det of the d rows D_{d-1}(p0, p_i) against the
    product of all triangle areas A(p0, p_i, p_j) for i < j.

    Requires pairwise distinct x-coordinates (the hypothesis under which the
    identity is derived from the Vandermonde determinant).
    """
    if d < 2:
        raise ValueError("vandermonde_general_check: need d >= 2")
    if len(points) != d + 1:
        raise ValueError(f"vandermonde_general_check: need {d + 1} points")
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("vandermonde_general_check: x-coordinates must be pairwise distinct")
    p0 = points[0]
    lhs = QMatrix.from_rows([d_vector_general(d - 1, p0, p) for p in points[1:]]).det()
    rhs = Q(1)
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            rhs *= triangle_area2(p0, points[i], points[j])
    return lhs, rhs


@dataclass(frozen=True)
class BadMapEval:
    """Evaluation of the degree-5 motion map at six concrete points.

    deltas[(i, j)] = D(p_i, p_j) . (b(v_i) - b(v_j)) over all 0 <= i < j <= 5.
    """

    b: tuple[tuple[Fraction, Fraction, Fraction], ...]
    alpha: Fraction
    beta: Fraction
    deltas: dict[tuple[int, int], Fraction]

    def zero_pairs(self) -> set[tuple[int, int]]:
        return {pair for pair, v in self.deltas.items() if v == 0}


def build_bad_map(points: list[Point]) -> BadMapEval:
    """Evaluate b(v0)..b(v5), the scalars alpha and beta, and all pairwise
    residuals at six given points p0..p5."""
    if len(points) != 6:
        raise ValueError("build_bad_map: need exactly 6 points")
    p = points

    def D(i: int, j: int) -> list[Fraction]:
        return d_vector(p[i], p[j])

    def tri(i: int, j: int, k: int) -> Fraction:
        return triangle_area2(p[i], p[j], p[k])

    alpha = _det3([D(0, 2), D(2, 4), D(2, 5)]) * _det3([D(0, 3), D(0, 1), D(0, 5)])
    beta = -_det3([D(0, 3), D(3, 4), D(3, 5)]) * _det3([D(0, 2), D(0, 1), D(0, 5)])

    b0_scale = tri(1, 2, 3) * _det3([D(0, 3), D(3, 4), D(3, 5)]) * _det3(
        [D(0, 2), D(2, 4), D(2, 5)]
    )
    b0 = [b0_scale * c for c in cross(D(0, 1), D(0, 5))]
    b1 = [Q(0), Q(0), Q(0)]
    b2 = [beta * tri(1, 3, 2) * c for c in cross(D(2, 4), D(2, 5))]
    b3 = [alpha * tri(1, 2, 3) * c for c in cross(D(3, 4), D(3, 5))]
    b4 = [
        alpha * tri(1, 2, 4) * c1 + beta * tri(1, 3, 4) * c2
        for c1, c2 in zip(cross(D(3, 4), D(4, 5)), cross(D(2, 4), D(4, 5)))
    ]
    b5 = [Q(0), Q(0), Q(0)]
    b = (tuple(b0), tuple(b1), tuple(b2), tuple(b3), tuple(b4), tuple(b5))

    deltas = {}
    for i in range(6):
        for j in range(i + 1, 6):
            diff = [a - c for a, c in zip(b[i], b[j])]
            deltas[(i, j)] = dot(D(i, j), diff)
    return BadMapEval(b=b, alpha=alpha, beta=beta, deltas=deltas)


STAR_PAIRS = {(1, 5), (2, 5), (3, 5), (4, 5)}


def star_condition_check(e: BadMapEval) -> bool:
    """True iff the annihilated neighbor pairs (1 <= i < j <= 5) are exactly
    the star on v5."""
    zero = {pair for pair in e.zero_pairs() if pair[0] >= 1}
    return zero == STAR_PAIRS


def motion_ratio_check(u5: Point) -> tuple[Fraction, Fraction]:
    """At the normalized placement u1=(1,0), u2=(0,0), u3=(0,1), u4=(1,1) with
    a free fifth point, compare the determinant ratio
    det[D34;D32;D35] / det[D43;D41;D45] with the area ratio A(5,2,3)/A(5,1,4).
    """
    u = {
        1: (Q(1), Q(0)),
        2: (Q(0), Q(0)),
        3: (Q(0), Q(1)),
        4: (Q(1), Q(1)),
        5: (Q(u5[0]), Q(u5[1])),
    }

    def D(i: int, j: int) -> list[Fraction]:
        return d_vector(u[i], u[j])

    num = _det3([D(3, 4), D(3, 2), D(3, 5)])
    den = _det3([D(4, 3), D(4, 1), D(4, 5)])
    if den == 0:
        raise ValueError("motion_ratio_check: degenerate fifth point")
    lhs = num / den
    area_den = triangle_area2(u[5], u[1], u[4])
    if area_den == 0:
        raise ValueError("motion_ratio_check: degenerate fifth point")
    rhs = triangle_area2(u[5], u[2], u[3]) / area_den
    return lhs, rhs
