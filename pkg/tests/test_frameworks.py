"""Cofactor matrix construction, trivial motions, pinning and motion spaces,
anchored on the small worked example used throughout: K4 at
p = ((0,0), (1,0), (0,1), (-1,-1))."""

import random
from fractions import Fraction as Q

import pytest

from cofactor_rigidity.frameworks import (
    DegenerateFrameworkError,
    Framework,
    PinTriple,
    cofactor_matrix,
    cofactor_rows,
    d_vector,
    d_vector_general,
    dof,
    extended_cofactor_matrix,
    is_motion,
    motion_to_vec,
    nontrivial_motion_basis,
    pin_rows,
    random_generic_framework,
    row_removal_kernel_family,
    trivial_motion_basis,
)
from cofactor_rigidity.graphs import Graph
from cofactor_rigidity.linalg import QMatrix, dot


K4_COORDS = ((0, 0), (1, 0), (0, 1), (-1, -1))

K4_MATRIX = [
    [1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 1, -1, 1, -1, 1, -1, 0, 0, 0],
    [0, 0, 0, 4, 2, 1, 0, 0, 0, -4, -2, -1],
    [0, 0, 0, 0, 0, 0, 1, 2, 4, -1, -2, -4],
]

PIN_ROWS = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
]


@pytest.fixture
def k4():
    return Framework(Graph.complete(4), K4_COORDS)


def qm(rows):
    return QMatrix.from_rows([[Q(e) for e in r] for r in rows])


def test_d_vector_examples():
    assert d_vector((Q(0), Q(0)), (Q(1), Q(0))) == [1, 0, 0]
    assert d_vector((Q(1), Q(0)), (Q(0), Q(1))) == [1, -1, 1]
    assert d_vector((Q(2), Q(3)), (Q(2), Q(3))) == [0, 0, 0]


def test_d_vector_general():
    p, q = (Q(0), Q(0)), (Q(2), Q(3))
    assert d_vector_general(1, p, q) == [-2, -3]
    assert d_vector_general(2, p, q) == d_vector(p, q)
    assert d_vector_general(3, (Q(0), Q(0)), (Q(1), Q(1))) == [-1, -1, -1, -1]
    with pytest.raises(ValueError):
        d_vector_general(0, p, q)


def test_cofactor_matrix_printed_example(k4):
    assert cofactor_matrix(k4) == qm(K4_MATRIX)


def test_cofactor_matrix_empty_graph():
    f = Framework(Graph(3), ((0, 0), (1, 0), (0, 1)))
    m = cofactor_matrix(f)
    assert m.rows == 0 and m.cols == 9


def test_cofactor_row_structure(k4):
    m = cofactor_matrix(k4)
    for i, (u, v) in enumerate(k4.graph.sorted_edges()):
        row = m.row(i)
        assert row[3 * u : 3 * u + 3] == [-e for e in row[3 * v : 3 * v + 3]]
        for w in range(4):
            if w not in (u, v):
                assert row[3 * w : 3 * w + 3] == [0, 0, 0]


def test_extended_matrix_printed_example(k4):
    ext = extended_cofactor_matrix(k4, PinTriple(0, 1, 2))
    assert ext == qm(PIN_ROWS + K4_MATRIX)
    # these pins share a y-coordinate, so this extended matrix is singular;
    # with distinct y-coordinates the minimally rigid K4 gives a nonsingular one
    assert ext.rank() == 11
    assert extended_cofactor_matrix(k4, PinTriple(0, 2, 3)).rank() == 12


def test_pin_rows_slots():
    assert pin_rows(4, PinTriple(0, 1, 2)) == qm(PIN_ROWS)


def test_pin_triple_distinctness():
    with pytest.raises(ValueError):
        PinTriple(0, 0, 1)


def test_pin_validation_rejects_equal_y(k4):
    with pytest.raises(ValueError):
        PinTriple(0, 1, 2).validate(k4)  # y = 0, 0, 1
    PinTriple(0, 2, 3).validate(k4)  # y = 0, 1, -1 fine


def test_trivial_motions_in_kernel(k4):
    basis = trivial_motion_basis(k4)
    assert basis[0] == [[1, 0, 0]] * 4
    for q in basis:
        assert is_motion(k4, q)
    assert QMatrix.from_rows([motion_to_vec(q) for q in basis]).rank() == 6


def test_is_motion_negative():
    f = Framework(Graph(2, frozenset({(0, 1)})), ((0, 0), (1, 0)))
    q = [[Q(1), Q(0), Q(0)], [Q(0), Q(0), Q(0)]]
    assert not is_motion(f, q)
    with pytest.raises(ValueError):
        is_motion(f, [[Q(0)] * 3])


def test_dof(k4):
    assert dof(k4) == 0
    f1 = Framework(k4.graph.remove_edges([(0, 1)]), K4_COORDS)
    assert dof(f1) == 1
    tri = Framework(Graph.complete(3), ((0, 0), (1, 0), (0, 1)))
    assert dof(tri) == 0


def test_dof_small_and_degenerate():
    assert dof(Framework(Graph(2, frozenset({(0, 1)})), ((0, 0), (1, 0)))) == 0
    flat = Framework(Graph.complete(3), ((0, 0), (1, 0), (2, 0)))
    with pytest.raises(DegenerateFrameworkError):
        dof(flat)


def test_nontrivial_motion_basis(k4):
    pins = PinTriple(0, 2, 3)
    assert nontrivial_motion_basis(k4, pins) == []
    f1 = Framework(k4.graph.remove_edges([(0, 1)]), K4_COORDS)
    basis = nontrivial_motion_basis(f1, pins)
    assert len(basis) == 1
    q = basis[0]
    assert is_motion(f1, q)
    # pinned coordinates vanish
    assert q[0] == [0, 0, 0]
    assert q[2][0] == 0 and q[2][1] == 0
    assert q[3][0] == 0
    # together with the trivial motions the kernel is spanned
    vecs = [motion_to_vec(x) for x in trivial_motion_basis(f1)] + [motion_to_vec(q)]
    assert QMatrix.from_rows(vecs).rank() == 7
    c = cofactor_matrix(f1)
    assert c.cols - c.rank() == 7


def test_random_generic_framework_determinism():
    g = Graph.complete(5)
    assert random_generic_framework(g, 9).coords == random_generic_framework(g, 9).coords
    assert len(random_generic_framework(g, 1).coords) == 5


def test_generic_rank_stability():
    g = Graph.complete(5)
    ranks = {cofactor_matrix(random_generic_framework(g, s)).rank() for s in range(5)}
    assert ranks == {9}


def test_edge_rows_kill_trivial_motions_at_random_points():
    rng = random.Random(31)
    for _ in range(10):
        g = Graph.complete(4)
        f = random_generic_framework(g, rng.randrange(2**63))
        m = cofactor_matrix(f)
        for q in trivial_motion_basis(f):
            v = motion_to_vec(q)
            assert all(dot(m.row(i), v) == 0 for i in range(m.rows))


class TestRowRemovalKernels:
    def test_family_is_independent(self, k4):
        m = extended_cofactor_matrix(k4, PinTriple(0, 2, 3))
        fam = row_removal_kernel_family(m, [6, 7, 8])
        assert len(fam) == 3
        assert QMatrix.from_rows(fam).rank() == 3

    def test_restriction_stays_independent(self, k4):
        # the deleted rows (edge rows not incident to v0) have zero entries in
        # v0's column block, so restricting the kernel family to the remaining
        # columns must keep it independent
        m = extended_cofactor_matrix(k4, PinTriple(0, 2, 3))
        deleted = [9, 10, 11]
        assert all(all(m[d, c] == 0 for c in range(3)) for d in deleted)
        fam = row_removal_kernel_family(m, deleted)
        restricted = [v[3:] for v in fam]
        assert QMatrix.from_rows(restricted).rank() == 3

    def test_rejects_singular(self):
        with pytest.raises(ValueError):
            row_removal_kernel_family(QMatrix.zeros(2, 2), [0])
