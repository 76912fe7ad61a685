"""Projective lifts of plane frameworks, projective motions as per-vertex
symmetric 3x3 matrices, their (3n+6)-dimensional trivial space, invariance
under scalings and linear transforms, homographies, and the five-step
motion-conversion pipeline between projectively equivalent placements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .frameworks import Framework, Motion
from .graphs import Edge, Graph
from .linalg import Q, QMatrix, cross

Point3 = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Sym3:
    """Symmetric 3x3 matrix, upper-triangular storage (a11..a33)."""

    a11: Fraction
    a12: Fraction
    a13: Fraction
    a22: Fraction
    a23: Fraction
    a33: Fraction

    @classmethod
    def zero(cls) -> "Sym3":
        return cls(Q(0), Q(0), Q(0), Q(0), Q(0), Q(0))

    @classmethod
    def from_matrix(cls, m: QMatrix) -> "Sym3":
        if m.rows != 3 or m.cols != 3:
            raise ValueError("Sym3.from_matrix: need a 3x3 matrix")
        for i in range(3):
            for j in range(i + 1, 3):
                if m[i, j] != m[j, i]:
                    raise ValueError("Sym3.from_matrix: matrix is not symmetric")
        return cls(m[0, 0], m[0, 1], m[0, 2], m[1, 1], m[1, 2], m[2, 2])

    def entry(self, i: int, j: int) -> Fraction:
        i, j = min(i, j), max(i, j)
        return {
            (0, 0): self.a11, (0, 1): self.a12, (0, 2): self.a13,
            (1, 1): self.a22, (1, 2): self.a23, (2, 2): self.a33,
        }[(i, j)]

    def to_matrix(self) -> QMatrix:
        return QMatrix.from_rows(
            [
                [self.a11, self.a12, self.a13],
                [self.a12, self.a22, self.a23],
                [self.a13, self.a23, self.a33],
            ]
        )

    def upper(self) -> tuple[Fraction, ...]:
        return (self.a11, self.a12, self.a13, self.a22, self.a23, self.a33)

    def __add__(self, other: "Sym3") -> "Sym3":
        return Sym3(*(a + b for a, b in zip(self.upper(), other.upper())))

    def __sub__(self, other: "Sym3") -> "Sym3":
        return Sym3(*(a - b for a, b in zip(self.upper(), other.upper())))

    def scale(self, c) -> "Sym3":
        c = Q(c)
        return Sym3(*(c * a for a in self.upper()))


ProjectiveMotion = list[Sym3]


@dataclass(frozen=True)
class LiftedFramework:
    graph: Graph
    coords3: tuple[Point3, ...]

    def __post_init__(self):
        if len(self.coords3) != self.graph.n:
            raise ValueError("LiftedFramework: one coordinate triple per vertex required")
        coords = tuple((Q(x), Q(y), Q(z)) for x, y, z in self.coords3)
        for v, (_, _, z) in enumerate(coords):
            if z == 0:
                raise ValueError(f"LiftedFramework: zero z-component at vertex {v}")
        object.__setattr__(self, "coords3", coords)

    def point(self, v: int) -> Point3:
        return self.coords3[v]


def lift(f: Framework) -> LiftedFramework:
    """Append z = 1 to every coordinate."""
    return LiftedFramework(f.graph, tuple((x, y, Q(1)) for x, y in f.coords))


def unlift(lf: LiftedFramework) -> Framework:
    """Dehomogenize each point to the z = 1 chart."""
    return Framework(lf.graph, tuple((x / z, y / z) for x, y, z in lf.coords3))


def pair_trace(lf: LiftedFramework, q: ProjectiveMotion, i: int, j: int) -> Fraction:
    """Trace((p_i x p_j)(p_i x p_j)^T (Q(v_i) - Q(v_j))), via the
    symmetric-entry sum Trace(AB) = sum a_kl b_kl."""
    w = cross(list(lf.point(i)), list(lf.point(j)))
    d = q[i] - q[j]
    total = Q(0)
    for a in range(3):
        for b in range(3):
            total += w[a] * w[b] * d.entry(a, b)
    return total


def is_projective_motion(
    lf: LiftedFramework, q: ProjectiveMotion, pairs: Iterable[Edge]
) -> bool:
    if len(q) != lf.graph.n:
        raise ValueError("is_projective_motion: one Sym3 per vertex required")
    return all(pair_trace(lf, q, i, j) == 0 for i, j in pairs)


def all_pairs(n: int) -> list[Edge]:
    return list(combinations(range(n), 2))


def lift_motion(q: Motion) -> ProjectiveMotion:
    """Per vertex: (q1,q2,q3) -> [[2q3, -q2, 0], [-q2, 2q1, 0], [0, 0, 0]]."""
    return [
        Sym3(2 * q3, -q2, Q(0), 2 * q1, Q(0), Q(0)) for q1, q2, q3 in (map(Q, t) for t in q)
    ]


def unlift_motion(q: ProjectiveMotion) -> Motion:
    """Inverse of lift_motion; requires zero right column and bottom row."""
    out: Motion = []
    for v, s in enumerate(q):
        if s.a13 != 0 or s.a23 != 0 or s.a33 != 0:
            raise ValueError(f"unlift_motion: nonzero border entries at vertex {v}")
        out.append([s.a22 / 2, -s.a12, s.a11 / 2])
    return out


def trivial_projective_basis(lf: LiftedFramework) -> list[ProjectiveMotion]:
    """Six global motions plus three supported at each vertex: 3n+6 in total."""
    n = lf.graph.n
    out: list[ProjectiveMotion] = []
    # constant ones
    out.append([Sym3(Q(0), Q(0), Q(0), Q(2), Q(0), Q(0)) for _ in range(n)])
    out.append([Sym3(Q(0), Q(-1), Q(0), Q(0), Q(0), Q(0)) for _ in range(n)])
    out.append([Sym3(Q(2), Q(0), Q(0), Q(0), Q(0), Q(0)) for _ in range(n)])
    # coordinate-dependent global ones
    q4, q5, q6 = [], [], []
    for x, y, z in lf.coords3:
        u, w = x / z, y / z
        q4.append(Sym3(Q(0), u, Q(0), 2 * w, Q(0), Q(0)))
        q5.append(Sym3(2 * u, w, Q(0), Q(0), Q(0), Q(0)))
        q6.append(Sym3(2 * u * u, 2 * u * w, Q(0), 2 * w * w, Q(0), Q(0)))
    out.extend([q4, q5, q6])
    # per-vertex ones
    for i in range(n):
        x, y, z = lf.point(i)
        for s in (
            Sym3(Q(0), x, Q(0), 2 * y, z, Q(0)),
            Sym3(2 * x, y, z, Q(0), Q(0), Q(0)),
            Sym3(-x * x, -x * y, Q(0), -y * y, Q(0), z * z),
        ):
            motion = [Sym3.zero() for _ in range(n)]
            motion[i] = s
            out.append(motion)
    return out


def motion_as_vector(q: ProjectiveMotion) -> list[Fraction]:
    return [e for s in q for e in s.upper()]


def projective_motion_space_dim(lf: LiftedFramework) -> int:
    """Dimension of the space of projective motions (edge constraints only)."""
    n = lf.graph.n
    rows = []
    for i, j in lf.graph.sorted_edges():
        w = cross(list(lf.point(i)), list(lf.point(j)))
        # coefficient of the upper-triangular slot (a,b): w_a w_b, doubled off-diagonal
        coeff = [
            w[0] * w[0], 2 * w[0] * w[1], 2 * w[0] * w[2],
            w[1] * w[1], 2 * w[1] * w[2], w[2] * w[2],
        ]
        row = [Q(0)] * (6 * n)
        row[6 * i : 6 * i + 6] = coeff
        row[6 * j : 6 * j + 6] = [-c for c in coeff]
        rows.append(row)
    if not rows:
        return 6 * n
    m = QMatrix.from_rows(rows)
    return m.cols - m.rank()


# -- transforms -------------------------------------------------------


def cofactor3(a: QMatrix) -> QMatrix:
    """Signed 2x2 minors of a 3x3 matrix: (Ax) x (Ay) = C_A (x x y)."""
    if a.rows != 3 or a.cols != 3:
        raise ValueError("cofactor3: need a 3x3 matrix")

    def minor(i: int, j: int) -> Fraction:
        rs = [r for r in range(3) if r != i]
        cs = [c for c in range(3) if c != j]
        return a[rs[0], cs[0]] * a[rs[1], cs[1]] - a[rs[0], cs[1]] * a[rs[1], cs[0]]

    return QMatrix.from_rows(
        [[(Q(-1) if (i + j) % 2 else Q(1)) * minor(i, j) for j in range(3)] for i in range(3)]
    )


def inverse3(a: QMatrix) -> QMatrix:
    d = a.det()
    if d == 0:
        raise ValueError("inverse3: singular matrix")
    adj = cofactor3(a).transpose()
    return QMatrix.from_rows([[e / d for e in adj.row(i)] for i in range(3)])


def transform_motion(q: ProjectiveMotion, a: QMatrix) -> ProjectiveMotion:
    """Per-vertex conjugation Q -> C^-T Q C^-1 where C = cofactor3(a)."""
    if a.det() == 0:
        raise ValueError("transform_motion: singular transform")
    c_inv = inverse3(cofactor3(a))
    c_inv_t = c_inv.transpose()
    return [Sym3.from_matrix(c_inv_t.matmul(s.to_matrix()).matmul(c_inv)) for s in q]


def apply_linear(a: QMatrix, lf: LiftedFramework) -> LiftedFramework:
    """Apply a nonsingular 3x3 map to every lifted point."""
    if a.det() == 0:
        raise ValueError("apply_linear: singular transform")
    return LiftedFramework(
        lf.graph, tuple(tuple(a.matvec(list(p))) for p in lf.coords3)
    )


def scale_points(lf: LiftedFramework, scalars: Sequence) -> LiftedFramework:
    if len(scalars) != lf.graph.n:
        raise ValueError("scale_points: one scalar per vertex required")
    scalars = [Q(s) for s in scalars]
    if any(s == 0 for s in scalars):
        raise ValueError("scale_points: scalars must be nonzero")
    return LiftedFramework(
        lf.graph,
        tuple((s * x, s * y, s * z) for s, (x, y, z) in zip(scalars, lf.coords3)),
    )


def scale_invariance_check(
    lf: LiftedFramework, q: ProjectiveMotion, scalars: Sequence
) -> bool:
    """The motion predicate must agree between lf and any pointwise scaling:
    each pair expression picks up a nonzero square factor only."""
    scaled = scale_points(lf, scalars)
    pairs = all_pairs(lf.graph.n)
    return all(
        (pair_trace(lf, q, i, j) == 0) == (pair_trace(scaled, q, i, j) == 0)
        for i, j in pairs
    )


# -- homographies -----------------------------------------------------

TARGET_QUAD: tuple[tuple[Fraction, Fraction], ...] = (
    (Q(1), Q(0)),
    (Q(0), Q(0)),
    (Q(0), Q(1)),
    (Q(1), Q(1)),
)


def _basis_to_quad(quad: Sequence[tuple[Fraction, Fraction]]) -> QMatrix:
    """3x3 map sending e1, e2, e3, (1,1,1) to the four lifted points."""
    cols = [QMatrix.from_rows([[Q(p[0])], [Q(p[1])], [Q(1)]]) for p in quad]
    m = QMatrix.from_rows(
        [[cols[0][r, 0], cols[1][r, 0], cols[2][r, 0]] for r in range(3)]
    )
    lam = m.solve([cols[3][r, 0] for r in range(3)])
    if lam is None or any(v == 0 for v in lam):
        raise ValueError("four_point_projective_map: three of the points are collinear")
    return QMatrix.from_rows(
        [[lam[c] * m[r, c] for c in range(3)] for r in range(3)]
    )


def four_point_projective_map(src: Sequence[tuple]) -> QMatrix:
    """The unique homography taking four points in general position to
    (1,0), (0,0), (0,1), (1,1); normalized so entry (3,3) is 1 when nonzero,
    otherwise the first nonzero entry is 1."""
    if len(src) != 4:
        raise ValueError("four_point_projective_map: need exactly 4 points")
    src = [(Q(x), Q(y)) for x, y in src]
    for tri in combinations(src, 3):
        area = (tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1]) - (
            tri[2][0] - tri[0][0]
        ) * (tri[1][1] - tri[0][1])
        if area == 0:
            raise ValueError("four_point_projective_map: three of the points are collinear")
    m = _basis_to_quad(TARGET_QUAD).matmul(inverse3(_basis_to_quad(src)))
    pivot = m[2, 2]
    if pivot == 0:
        pivot = next(e for e in (m[i, j] for i in range(3) for j in range(3)) if e != 0)
    return QMatrix.from_rows([[e / pivot for e in m.row(i)] for i in range(3)])


def apply_projective(m: QMatrix, f: Framework) -> Framework:
    """Dehomogenized image framework; rejects points mapped to infinity."""
    if m.rows != 3 or m.cols != 3:
        raise ValueError("apply_projective: need a 3x3 matrix")
    if m.det() == 0:
        raise ValueError("apply_projective: singular matrix")
    coords = []
    for v, (x, y) in enumerate(f.coords):
        ix, iy, iz = m.matvec([x, y, Q(1)])
        if iz == 0:
            raise ValueError(f"apply_projective: vertex {v} is mapped to infinity")
        coords.append((ix / iz, iy / iz))
    return Framework(f.graph, tuple(coords))


# -- the conversion pipeline ------------------------------------------


def clear_borders(lf: LiftedFramework, q: ProjectiveMotion) -> ProjectiveMotion:
    """Add per-vertex trivial motions to zero out the right column and bottom
    row of every Q(v).  Requires z = 1 at every vertex, where the three
    generators expose unit entries in the three border slots."""
    out: ProjectiveMotion = []
    for v, s in enumerate(q):
        x, y, z = lf.point(v)
        if z != 1:
            raise ValueError("clear_borders: lift must be z-normalized first")
        c1 = -s.a23  # generator 1 has a 1 in the (2,3) slot
        c2 = -s.a13  # generator 2 has a 1 in the (1,3) slot
        g1 = Sym3(Q(0), x, Q(0), 2 * y, z, Q(0)).scale(c1)
        g2 = Sym3(2 * x, y, z, Q(0), Q(0), Q(0)).scale(c2)
        partial = s + g1 + g2
        c3 = -partial.a33  # generator 3 has a 1 in the (3,3) slot
        g3 = Sym3(-x * x, -x * y, Q(0), -y * y, Q(0), z * z).scale(c3)
        out.append(partial + g3)
    return out


def convert_motion_pipeline(
    g: Graph, p_src: Framework, p_dst: Framework, a: QMatrix, q_src: Motion
) -> Motion:
    """Transport a motion of (g, p_src) to a motion of (g, p_dst), where the
    3x3 matrix `a` realizes the projective map from p_src to p_dst:

    lift the motion; conjugate by the cofactor of `a`; rescale the image
    points to the z = 1 chart (the motion predicate is scale-invariant);
    clear the matrix borders with per-vertex trivial motions; unlift.
    """
    if g is not p_src.graph and g != p_src.graph:
        raise ValueError("convert_motion_pipeline: framework/graph mismatch")
    for v, (x, y) in enumerate(p_src.coords):
        ix, iy, iz = a.matvec([x, y, Q(1)])
        if iz == 0 or (ix / iz, iy / iz) != p_dst.point(v):
            raise ValueError(
                f"convert_motion_pipeline: map is inconsistent with the target at vertex {v}"
            )
    lifted_q = lift_motion(q_src)
    transformed = transform_motion(lifted_q, a)
    cleared = clear_borders(lift(p_dst), transformed)
    return unlift_motion(cleared)
