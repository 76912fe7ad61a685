"""Lifts, projective motions, scale/linear invariance, homographies and the
motion-conversion pipeline."""

import random
from fractions import Fraction as Q

import pytest

from cofactor_rigidity.frameworks import (
    Framework,
    is_motion,
    nontrivial_motion_basis,
    PinTriple,
    trivial_motion_basis,
)
from cofactor_rigidity.graphs import Graph
from cofactor_rigidity.linalg import QMatrix
from cofactor_rigidity.projective import (
    LiftedFramework,
    Sym3,
    all_pairs,
    apply_linear,
    apply_projective,
    clear_borders,
    cofactor3,
    convert_motion_pipeline,
    four_point_projective_map,
    inverse3,
    is_projective_motion,
    lift,
    lift_motion,
    motion_as_vector,
    pair_trace,
    projective_motion_space_dim,
    scale_invariance_check,
    scale_points,
    transform_motion,
    trivial_projective_basis,
    unlift,
    unlift_motion,
)

K4_COORDS = ((0, 0), (1, 0), (0, 1), (-1, -1))


@pytest.fixture
def k4():
    return Framework(Graph.complete(4), K4_COORDS)


def rand_matrix(rng):
    while True:
        m = QMatrix(3, 3, [Q(rng.randint(-6, 6)) for _ in range(9)])
        if m.det() != 0:
            return m


class TestSym3:
    def test_roundtrip(self):
        s = Sym3(Q(1), Q(2), Q(3), Q(4), Q(5), Q(6))
        assert Sym3.from_matrix(s.to_matrix()) == s
        assert s.entry(2, 1) == s.entry(1, 2) == 5

    def test_rejects_asymmetric(self):
        m = QMatrix.from_rows([[Q(1), Q(2), Q(0)], [Q(0), Q(1), Q(0)], [Q(0), Q(0), Q(1)]])
        with pytest.raises(ValueError):
            Sym3.from_matrix(m)

    def test_arithmetic(self):
        s = Sym3(Q(1), Q(0), Q(0), Q(2), Q(0), Q(0))
        assert (s + s).a22 == 4
        assert (s - s) == Sym3.zero()
        assert s.scale(3).a11 == 3


class TestLift:
    def test_lift_unlift_roundtrip(self, k4):
        assert unlift(lift(k4)).coords == k4.coords

    def test_rejects_zero_z(self):
        with pytest.raises(ValueError):
            LiftedFramework(Graph(1), ((Q(1), Q(1), Q(0)),))

    def test_unlift_dehomogenizes(self):
        lf = LiftedFramework(Graph(1), ((Q(2), Q(4), Q(2)),))
        assert unlift(lf).coords == ((1, 2),)


class TestMotionLift:
    def test_lift_motion_shape(self):
        q = [[Q(1), Q(2), Q(3)]]
        s = lift_motion(q)[0]
        assert s == Sym3(Q(6), Q(-2), Q(0), Q(2), Q(0), Q(0))
        assert unlift_motion([s]) == [[1, 2, 3]]

    def test_unlift_rejects_borders(self):
        bad = Sym3(Q(0), Q(0), Q(1), Q(0), Q(0), Q(0))
        with pytest.raises(ValueError):
            unlift_motion([bad])

    def test_lifted_motion_is_projective_motion(self, k4):
        f1 = Framework(k4.graph.remove_edges([(0, 1)]), K4_COORDS)
        basis = nontrivial_motion_basis(f1, PinTriple(0, 2, 3))
        assert basis
        lq = lift_motion(basis[0])
        assert is_projective_motion(lift(f1), lq, f1.graph.sorted_edges())

    def test_trivial_motions_lift_to_all_pairs_motions(self, k4):
        lf = lift(k4)
        for q in trivial_motion_basis(k4):
            lq = lift_motion(q)
            assert is_projective_motion(lf, lq, all_pairs(4))


class TestTrivialProjectiveBasis:
    def test_count_and_independence(self, k4):
        lf = lift(k4)
        basis = trivial_projective_basis(lf)
        assert len(basis) == 3 * 4 + 6
        vecs = [motion_as_vector(q) for q in basis]
        assert QMatrix.from_rows(vecs).rank() == 18

    def test_all_are_motions_on_all_pairs(self, k4):
        lf = lift(k4)
        pairs = all_pairs(4)
        for q in trivial_projective_basis(lf):
            assert is_projective_motion(lf, q, pairs)

    def test_dimension_of_full_space(self, k4):
        # with all pairs constrained, the trivial ones exhaust the space
        lf = lift(Framework(Graph(4, frozenset(all_pairs(4))), K4_COORDS))
        assert projective_motion_space_dim(lf) == 18

    def test_dimension_no_edges(self):
        lf = lift(Framework(Graph(3), ((0, 0), (1, 0), (0, 1))))
        assert projective_motion_space_dim(lf) == 18


class TestInvariance:
    def test_scale_invariance(self, k4):
        rng = random.Random(7)
        lf = lift(k4)
        for q in trivial_projective_basis(lf):
            scalars = [Q(rng.randint(1, 9)) for _ in range(4)]
            assert scale_invariance_check(lf, q, scalars)

    def test_scale_points_validation(self, k4):
        with pytest.raises(ValueError):
            scale_points(lift(k4), [1, 1, 0, 1])
        with pytest.raises(ValueError):
            scale_points(lift(k4), [1, 1])

    def test_linear_transform_carries_motions(self, k4):
        rng = random.Random(3)
        lf = lift(k4)
        pairs = all_pairs(4)
        done = 0
        while done < 5:
            a = rand_matrix(rng)
            try:
                moved = apply_linear(a, lf)  # may send a point to z = 0
            except ValueError:
                continue
            done += 1
            for q in trivial_projective_basis(lf):
                tq = transform_motion(q, a)
                assert is_projective_motion(moved, tq, pairs)

    def test_cofactor_identity(self):
        # (Ax) x (Ay) = C_A (x x y)
        from cofactor_rigidity.linalg import cross

        rng = random.Random(9)
        for _ in range(10):
            a = rand_matrix(rng)
            c = cofactor3(a)
            x = [Q(rng.randint(-5, 5)) for _ in range(3)]
            y = [Q(rng.randint(-5, 5)) for _ in range(3)]
            assert cross(a.matvec(x), a.matvec(y)) == c.matvec(cross(x, y))

    def test_inverse3(self):
        rng = random.Random(2)
        a = rand_matrix(rng)
        assert a.matmul(inverse3(a)) == QMatrix.identity(3)
        with pytest.raises(ValueError):
            inverse3(QMatrix.zeros(3, 3))


class TestHomography:
    def test_maps_quad_to_target(self):
        src = [(Q(2), Q(1)), (Q(-1), Q(0)), (Q(0), Q(3)), (Q(4), Q(4))]
        m = four_point_projective_map(src)
        f = Framework(Graph(4), tuple(src))
        out = apply_projective(m, f)
        assert out.coords == ((1, 0), (0, 0), (0, 1), (1, 1))

    def test_normalization_is_deterministic(self):
        src = [(Q(2), Q(1)), (Q(-1), Q(0)), (Q(0), Q(3)), (Q(4), Q(4))]
        m1 = four_point_projective_map(src)
        m2 = four_point_projective_map(src)
        assert m1 == m2
        assert m1[2, 2] == 1 or any(
            m1[i, j] == 1 for i in range(3) for j in range(3)
        )

    def test_rejects_collinear(self):
        with pytest.raises(ValueError):
            four_point_projective_map([(0, 0), (1, 0), (2, 0), (1, 1)])
        with pytest.raises(ValueError):
            four_point_projective_map([(0, 0), (1, 0), (2, 0)])

    def test_apply_projective_rejects_infinity(self):
        # map sending x = 1 to the line at infinity
        m = QMatrix.from_rows(
            [[Q(1), Q(0), Q(0)], [Q(0), Q(1), Q(0)], [Q(-1), Q(0), Q(1)]]
        )
        f = Framework(Graph(1), ((1, 5),))
        with pytest.raises(ValueError, match="vertex 0"):
            apply_projective(m, f)

    def test_identity_on_target_quad(self):
        tgt = [(1, 0), (0, 0), (0, 1), (1, 1)]
        assert four_point_projective_map(tgt) == QMatrix.identity(3)


class TestPipeline:
    def test_clear_borders_requires_normalized(self, k4):
        lf = LiftedFramework(Graph(1), ((Q(1), Q(1), Q(2)),))
        with pytest.raises(ValueError):
            clear_borders(lf, [Sym3.zero()])

    def test_clear_borders_output_shape(self, k4):
        lf = lift(k4)
        rng = random.Random(1)
        q = [
            Sym3(*(Q(rng.randint(-4, 4)) for _ in range(6))) for _ in range(4)
        ]
        out = clear_borders(lf, q)
        for s in out:
            assert s.a13 == 0 and s.a23 == 0 and s.a33 == 0

    def test_clear_borders_preserves_motion_property(self, k4):
        # adding trivial motions never changes any pair residual's vanishing
        f1 = Framework(k4.graph.remove_edges([(0, 1)]), K4_COORDS)
        lf = lift(f1)
        basis = nontrivial_motion_basis(f1, PinTriple(0, 2, 3))
        lq = lift_motion(basis[0])
        cleared = clear_borders(lf, lq)
        assert is_projective_motion(lf, cleared, f1.graph.sorted_edges())

    def test_convert_motion_pipeline_end_to_end(self):
        g = Graph.complete(4).remove_edges([(0, 1)])
        p_src = Framework(g, K4_COORDS)
        a = QMatrix.from_rows(
            [[Q(2), Q(1), Q(0)], [Q(0), Q(1), Q(1)], [Q(1), Q(0), Q(3)]]
        )
        p_dst = apply_projective(a, p_src)
        basis = nontrivial_motion_basis(p_src, PinTriple(0, 2, 3))
        q_src = basis[0]
        q_dst = convert_motion_pipeline(g, p_src, p_dst, a, q_src)
        assert is_motion(p_dst, q_dst)

    def test_pipeline_preserves_annihilation_pattern(self):
        g = Graph.complete(4).remove_edges([(0, 1)])
        p_src = Framework(g, K4_COORDS)
        a = QMatrix.from_rows(
            [[Q(1), Q(2), Q(0)], [Q(1), Q(0), Q(1)], [Q(0), Q(1), Q(4)]]
        )
        p_dst = apply_projective(a, p_src)
        q_src = nontrivial_motion_basis(p_src, PinTriple(0, 2, 3))[0]
        q_dst = convert_motion_pipeline(g, p_src, p_dst, a, q_src)
        lq_src, lq_dst = lift_motion(q_src), lift_motion(q_dst)
        lf_src, lf_dst = lift(p_src), lift(p_dst)
        for i, j in all_pairs(4):
            assert (pair_trace(lf_src, lq_src, i, j) == 0) == (
                pair_trace(lf_dst, lq_dst, i, j) == 0
            )

    def test_pipeline_rejects_wrong_map(self):
        g = Graph.complete(4)
        p_src = Framework(g, K4_COORDS)
        p_dst = Framework(g, ((0, 0), (2, 0), (0, 2), (-2, -2)))
        with pytest.raises(ValueError):
            convert_motion_pipeline(g, p_src, p_dst, QMatrix.identity(3), [[Q(0)] * 3] * 4)

    def test_pipeline_identity_map_is_border_normalization(self):
        g = Graph.complete(4).remove_edges([(0, 1)])
        p = Framework(g, K4_COORDS)
        q = nontrivial_motion_basis(p, PinTriple(0, 2, 3))[0]
        out = convert_motion_pipeline(g, p, p, QMatrix.identity(3), q)
        assert is_motion(p, out)
