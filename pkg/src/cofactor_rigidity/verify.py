"""Randomized verification suites for the library's mathematical claims.

Each suite takes (trials, seed), runs seeded random instances and returns a
dict with a pass flag and the counterexample inputs verbatim when a check
fails.  Suites never raise on a failed property — failure is data.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from .badmap import (
    build_bad_map,
    motion_ratio_check,
    star_condition_check,
    triangle_area2,
    vandermonde_general_check,
    vandermonde_identity_check,
)
from .frameworks import (
    Framework,
    PinTriple,
    cofactor_matrix,
    dof,
    edge_residual,
    extended_cofactor_matrix,
    is_motion,
    motion_to_vec,
    random_generic_framework,
    trivial_motion_basis,
    vec_to_motion,
)
from .graphs import (
    Graph,
    canon_edge,
    double_v_replacement,
    one_extension,
    v_replacement,
    vertex_split,
    x_replacement,
    zero_extension,
)
from .linalg import Q, QMatrix
from .matroid import DEFAULT_MASTER_SEED, matroid_for
from .projective import (
    all_pairs,
    apply_projective,
    convert_motion_pipeline,
    four_point_projective_map,
    lift,
    lift_motion,
    pair_trace,
    scale_invariance_check,
    transform_motion,
    apply_linear,
    is_projective_motion,
    trivial_projective_basis,
    motion_as_vector,
)

SUITES: dict[str, Callable[[int, int], dict]] = {}

SMALL = 1000  # coordinate range for identity suites; exactness needs no magnitude


def _suite(name: str):
    def register(fn):
        SUITES[name] = fn
        return fn

    return register


def _result(name: str, trials: int, seed: int, counterexamples: list) -> dict:
    return {
        "suite": name,
        "trials": trials,
        "seed": seed,
        "pass": not counterexamples,
        "counterexamples": counterexamples,
    }


def _rand_point(rng: random.Random) -> tuple[Fraction, Fraction]:
    return (
        Q(rng.randint(-SMALL, SMALL), rng.randint(1, 20)),
        Q(rng.randint(-SMALL, SMALL), rng.randint(1, 20)),
    )


def random_independent_graph(rng: random.Random, extra_vertices: int) -> Graph:
    """Grow K4 by random 0- and 1-extensions; the result is independent."""
    g = Graph.complete(4)
    for _ in range(extra_vertices):
        if g.edges and rng.random() < 0.5:
            e = rng.choice(sorted(g.edges))
            pool = [v for v in range(g.n) if v not in e]
            extra = rng.sample(pool, 2)
            g = one_extension(g, e, (e[0], e[1], extra[0], extra[1]))
        else:
            g = zero_extension(g, tuple(rng.sample(range(g.n), 3)))
    return g


# -- identity suites --------------------------------------------------


@_suite("vandermonde")
def suite_vandermonde(trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        pts = [_rand_point(rng) for _ in range(4)]
        lhs, rhs = vandermonde_identity_check(*pts)
        if lhs != rhs:
            bad.append({"trial": t, "points": [[str(x), str(y)] for x, y in pts]})
    for d in (2, 3, 4):
        for t in range(trials):
            while True:
                pts = [_rand_point(rng) for _ in range(d + 1)]
                if len({p[0] for p in pts}) == d + 1:
                    break
            lhs, rhs = vandermonde_general_check(d, pts)
            if lhs != rhs:
                bad.append(
                    {"trial": t, "d": d, "points": [[str(x), str(y)] for x, y in pts]}
                )
    return _result("vandermonde", trials, seed, bad)


@_suite("badmap-star")
def suite_badmap_star(trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        pts = [_rand_point(rng) for _ in range(6)]
        ev = build_bad_map(pts)
        checks = (
            star_condition_check(ev)
            and all(ev.deltas[(i, 5)] == 0 for i in range(1, 5))
            and ev.deltas[(0, 1)] == 0
            and ev.deltas[(0, 5)] == 0
            and all(ev.deltas[(0, k)] == 0 for k in (2, 3, 4))
            and all(ev.deltas[(i, j)] != 0 for i, j in combinations(range(1, 5), 2))
        )
        if not checks:
            bad.append({"trial": t, "points": [[str(x), str(y)] for x, y in pts]})
    # the t1 determinant-ratio identity at the normalized placement
    for t in range(trials):
        u5 = _rand_point(rng)
        try:
            lhs, rhs = motion_ratio_check(u5)
        except ValueError:
            continue
        if lhs != rhs:
            bad.append({"trial": t, "u5": [str(u5[0]), str(u5[1])]})
    return _result("badmap-star", trials, seed, bad)


@_suite("trivial-motions")
def suite_trivial_motions(trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        n = rng.randint(3, 7)
        g = random_independent_graph(rng, n - 4) if n >= 4 else Graph.complete(3)
        f = random_generic_framework(g, rng.randrange(2**63))
        basis = trivial_motion_basis(f)
        ok = all(is_motion(f, q) for q in basis)
        if ok and not f.is_collinear():
            stacked = QMatrix.from_rows([motion_to_vec(q) for q in basis])
            ok = stacked.rank() == 6
        if not ok:
            bad.append({"trial": t, "n": g.n, "edges": g.sorted_edges()})
    return _result("trivial-motions", trials, seed, bad)


@_suite("pin-determinant")
def suite_pin_determinant(trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        while True:
            ya, yb, yc = (Q(rng.randint(-SMALL, SMALL), rng.randint(1, 20)) for _ in range(3))
            if len({ya, yb, yc}) == 3:
                break
        # the canonical 6x6 built from the trivial-motion coordinates at the
        # three pinned slots: full row triple at a, first two rows at b, one at c
        xa, xb, xc = (Q(rng.randint(-SMALL, SMALL)) for _ in range(3))
        def block(x, y):
            return [
                [Q(1), Q(0), Q(0), y, Q(0), y * y],
                [Q(0), Q(1), Q(0), -x, -y, -2 * x * y],
                [Q(0), Q(0), Q(1), Q(0), x, x * x],
            ]
        m = QMatrix.from_rows(
            block(xa, ya) + block(xb, yb)[:2] + block(xc, yc)[:1]
        )
        expected = (ya - yb) ** 2 * (yc - ya) * (yb - yc)
        if m.det() != expected:
            bad.append({"trial": t, "y": [str(ya), str(yb), str(yc)]})
    # extended-matrix row independence <=> motion space dimension 6+k
    for t in range(trials // 2 + 1):
        k = rng.choice((0, 1, 2))
        g = random_independent_graph(rng, rng.randint(1, 3))
        target = 3 * g.n - (6 + k)
        if g.m < target:
            continue
        while g.m > target:
            g = g.remove_edges([rng.choice(sorted(g.edges))])
        f = random_generic_framework(g, rng.randrange(2**63))
        ys = {}
        for v in range(g.n):
            ys.setdefault(f.point(v)[1], v)
        if len(ys) < 3:
            continue
        a, b, c = list(ys.values())[:3]
        ext = extended_cofactor_matrix(f, PinTriple(a, b, c))
        c0 = cofactor_matrix(f)
        dim_z = 3 * g.n - c0.rank()
        row_indep = ext.rank() == ext.rows
        if row_indep != (dim_z == 6 + k):
            bad.append({"trial": t, "edges": g.sorted_edges(), "k": k})
    return _result("pin-determinant", trials, seed, bad)


# -- matroid suites ---------------------------------------------------


@_suite("k5-circuit")
def suite_k5_circuit(trials: int, seed: int) -> dict:
    bad = []
    m5 = matroid_for(5)
    if not m5.is_circuit(Graph.complete(5).edges):
        bad.append({"claim": "K5 circuit"})
    m10 = matroid_for(10)
    k55 = Graph.complete_bipartite(5, 5)
    if not m10.is_circuit(k55.edges):
        bad.append({"claim": "K5,5 circuit"})
    k46 = Graph.complete_bipartite(4, 6)
    if not (m10.independent(k46.edges) and len(k46.edges) == 24 and m10.rank(k46.edges) == 24):
        bad.append({"claim": "K4,6 base"})
    # every K5 inside a larger ground set is a circuit
    for n in (6, 7):
        mn = matroid_for(n)
        for quint in combinations(range(n), 5):
            edges = frozenset(canon_edge(u, v) for u, v in combinations(quint, 2))
            if not mn.is_circuit(edges):
                bad.append({"claim": "K5 subset circuit", "vertices": list(quint)})
    return _result("k5-circuit", trials, seed, bad)


@_suite("matroid-axioms")
def suite_matroid_axioms(trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    bad = []

    def check_pair(m, a: frozenset, b: frozenset, label: str):
        ra, rb = m.rank(a), m.rank(b)
        if not (ra <= len(a)):
            bad.append({"axiom": "bounded", "set": sorted(a), "ground": label})
        if a <= b and ra > rb:
            bad.append({"axiom": "monotone", "a": sorted(a), "b": sorted(b), "ground": label})
        if m.rank(a | b) + m.rank(a & b) > ra + rb:
            bad.append({"axiom": "submodular", "a": sorted(a), "b": sorted(b), "ground": label})

    m4 = matroid_for(4)
    e4 = sorted(Graph.complete(4).edges)
    subsets4 = [frozenset(s) for r in range(7) for s in combinations(e4, r)]
    for a in subsets4:
        ra = m4.rank(a)
        for e in e4:
            if e not in a and not (ra <= m4.rank(a | {e}) <= ra + 1):
                bad.append({"axiom": "unit-increase", "set": sorted(a), "edge": list(e)})
    for a in subsets4:
        for b in subsets4:
            check_pair(m4, a, b, "K4")

    m5 = matroid_for(5)
    e5 = sorted(Graph.complete(5).edges)
    for _ in range(max(trials, 500)):
        a = frozenset(e for e in e5 if rng.random() < 0.5)
        b = frozenset(e for e in e5 if rng.random() < 0.5)
        check_pair(m5, a, b, "K5")
    # closure idempotence/extensiveness spot checks
    for _ in range(10):
        f = frozenset(e for e in e5 if rng.random() < 0.4)
        cl = m5.closure(f)
        if not (f <= cl and m5.closure(cl) == cl):
            bad.append({"axiom": "closure", "set": sorted(f)})
    return _result("matroid-axioms", trials, seed, bad)


@_suite("ops-preserve")
def suite_ops_preserve(trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    bad = []

    def record(op: str, before: Graph, after: Graph, t: int):
        ma = matroid_for(after.n)
        if not ma.independent(after.edges):
            bad.append({"trial": t, "op": op, "edges": before.sorted_edges()})

    for t in range(trials):
        g = random_independent_graph(rng, rng.randint(0, 3))

        record("0-extension", g, zero_extension(g, tuple(rng.sample(range(g.n), 3))), t)

        e = rng.choice(sorted(g.edges))
        pool = [v for v in range(g.n) if v not in e]
        extra = rng.sample(pool, 2)
        record("1-extension", g, one_extension(g, e, (e[0], e[1], *extra)), t)

        pair = _disjoint_edge_pair(rng, g)
        if pair is not None:
            e1, e2 = pair
            pool = [v for v in range(g.n) if v not in set(e1) | set(e2)]
            if pool:
                record("x-replacement", g, x_replacement(g, e1, e2, rng.choice(pool)), t)

        split = _splittable_vertex(rng, g)
        if split is not None:
            u, u1, u2, u3 = split
            record("vertex-split", g, vertex_split(g, u, u1, u2, u3), t)

        v_inst = _v_replacement_instance(rng, g)
        if v_inst is not None:
            e, f, others = v_inst
            record("v-replacement", g, v_replacement(g, e, f, others), t)

        dv = _double_v_instance(rng, g)
        if dv is not None:
            h, pair1, pair2, nbrs = dv
            record("double-v", h, double_v_replacement(h, pair1, pair2, nbrs), t)
    return _result("ops-preserve", trials, seed, bad)


def _disjoint_edge_pair(rng: random.Random, g: Graph):
    edges = sorted(g.edges)
    rng.shuffle(edges)
    for i, e1 in enumerate(edges):
        for e2 in edges[i + 1 :]:
            if not set(e1) & set(e2):
                return e1, e2
    return None


def _splittable_vertex(rng: random.Random, g: Graph):
    verts = list(range(g.n))
    rng.shuffle(verts)
    for u in verts:
        nbrs = sorted(g.neighbors(u))
        if len(nbrs) < 2:
            continue
        rng.shuffle(nbrs)
        u2 = set(nbrs[:2])
        rest = nbrs[2:]
        cut = rng.randint(0, len(rest))
        return u, set(rest[:cut]), u2, set(rest[cut:])
    return None


def _v_replacement_instance(rng: random.Random, g: Graph):
    """Two adjacent edges v1v2, v1v3 and two further NEIGHBORS v4, v5 of v1:
    the closure hypothesis holds because v1v4, v1v5 are edges."""
    verts = list(range(g.n))
    rng.shuffle(verts)
    for v1 in verts:
        nbrs = sorted(g.neighbors(v1))
        if len(nbrs) < 4:
            continue
        rng.shuffle(nbrs)
        v2, v3, v4, v5 = nbrs[:4]
        return canon_edge(v1, v2), canon_edge(v1, v3), (v4, v5)
    return None


def _double_v_instance(rng: random.Random, g: Graph):
    """Search g for a valid double-V configuration: an adjacent edge pair in g
    on a 5-vertex set, plus an alternative adjacent pair with a different
    center whose addition to g-minus-pair1 stays independent."""
    m = matroid_for(g.n)
    if not m.independent(g.edges):
        return None
    edges = sorted(g.edges)
    rng.shuffle(edges)
    for e1 in edges[:10]:
        for e2 in edges:
            common = set(e1) & set(e2)
            if e2 == e1 or len(common) != 1:
                continue
            c1 = next(iter(common))
            ends = (set(e1) | set(e2)) - {c1}
            pool = [v for v in range(g.n) if v != c1 and v not in ends]
            rng.shuffle(pool)
            for extra in combinations(pool, 2):
                nbrs = tuple(sorted(ends | set(extra) | {c1}))
                if len(nbrs) != 5:
                    continue
                base = g.edges - {e1, e2}
                for f1, f2 in combinations(
                    [canon_edge(u, v) for u, v in combinations(nbrs, 2)], 2
                ):
                    c2set = set(f1) & set(f2)
                    if len(c2set) != 1 or c2set == {c1}:
                        continue
                    if {f1, f2} & {e1, e2}:
                        continue
                    cand = base | {f1, f2}
                    if len(cand) != len(base) + 2:
                        continue
                    if m.independent(cand):
                        return g, (e1, e2), (f1, f2), nbrs
    return None


# -- projective suites ------------------------------------------------


def _random_mat3(rng: random.Random) -> QMatrix:
    while True:
        m = QMatrix.from_rows(
            [[Q(rng.randint(-20, 20)) for _ in range(3)] for _ in range(3)]
        )
        if m.det() != 0:
            return m


@_suite("lifting")
def suite_lifting(trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        g = random_independent_graph(rng, rng.randint(0, 2))
        f = random_generic_framework(g, rng.randrange(2**63))
        lf = lift(f)
        if rng.random() < 0.5:
            ker = cofactor_matrix(f).kernel_basis()
            q = vec_to_motion(rng.choice(ker))
        else:
            q = [[Q(rng.randint(-9, 9)) for _ in range(3)] for _ in range(g.n)]
        lifted = lift_motion(q)
        if is_motion(f, q) != is_projective_motion(lf, lifted, g.sorted_edges()):
            bad.append({"trial": t, "edges": g.sorted_edges()})
            continue
        # trace scalar identity on every pair
        for i, j in all_pairs(g.n):
            if pair_trace(lf, lifted, i, j) != 2 * edge_residual(f, q, i, j):
                bad.append({"trial": t, "pair": [i, j]})
                break
    return _result("lifting", trials, seed, bad)


@_suite("projective-invariance")
def suite_projective_invariance(trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    bad = []
    for t in range(trials):
        g = random_independent_graph(rng, rng.randint(0, 2))
        f = random_generic_framework(g, rng.randrange(2**63))
        lf = lift(f)
        basis = trivial_projective_basis(lf)
        if len(basis) != 3 * g.n + 6 or not all(
            is_projective_motion(lf, b, all_pairs(g.n)) for b in basis
        ):
            bad.append({"trial": t, "claim": "trivial basis", "edges": g.sorted_edges()})
            continue
        stacked = QMatrix.from_rows([motion_as_vector(b) for b in basis])
        if stacked.rank() != 3 * g.n + 6:
            bad.append({"trial": t, "claim": "basis rank", "edges": g.sorted_edges()})
            continue
        q = [[Q(rng.randint(-9, 9)) for _ in range(3)] for _ in range(g.n)]
        lifted = lift_motion(q)
        scalars = [Q(rng.randint(1, 30)) for _ in range(g.n)]
        if not scale_invariance_check(lf, lifted, scalars):
            bad.append({"trial": t, "claim": "scaling", "edges": g.sorted_edges()})
            continue
        a = _random_mat3(rng)
        moved = apply_linear(a, lf)
        qa = transform_motion(lifted, a)
        agree = all(
            (pair_trace(lf, lifted, i, j) == 0) == (pair_trace(moved, qa, i, j) == 0)
            for i, j in all_pairs(g.n)
        )
        if not agree:
            bad.append({"trial": t, "claim": "transform", "edges": g.sorted_edges()})
    return _result("projective-invariance", trials, seed, bad)


@_suite("pipeline")
def suite_pipeline(trials: int, seed: int) -> dict:
    rng = random.Random(seed)
    bad = []
    done = 0
    while done < trials:
        g = random_independent_graph(rng, rng.randint(0, 2))
        # drop an edge so a nontrivial motion exists
        g = g.remove_edges([rng.choice(sorted(g.edges))])
        f = random_generic_framework(g, rng.randrange(2**63))
        a = _random_mat3(rng)
        try:
            f2 = apply_projective(a, f)
        except ValueError:
            continue
        if dof(f) != dof(f2):
            bad.append({"claim": "dof invariance", "edges": g.sorted_edges()})
            done += 1
            continue
        ker = cofactor_matrix(f).kernel_basis()
        q = vec_to_motion(rng.choice(ker))
        q2 = convert_motion_pipeline(g, f, f2, a, q)
        if not is_motion(f2, q2):
            bad.append({"claim": "converted motion", "edges": g.sorted_edges()})
        elif any(
            (edge_residual(f, q, i, j) == 0) != (edge_residual(f2, q2, i, j) == 0)
            for i, j in all_pairs(g.n)
        ):
            bad.append({"claim": "annihilation pattern", "edges": g.sorted_edges()})
        # four-point map round trip
        quad = [tuple(map(Q, f.coords[v])) for v in rng.sample(range(g.n), 4)]
        try:
            m4 = four_point_projective_map(quad)
        except ValueError:
            done += 1
            continue
        targets = ((Q(1), Q(0)), (Q(0), Q(0)), (Q(0), Q(1)), (Q(1), Q(1)))
        for p, tgt in zip(quad, targets):
            ix, iy, iz = m4.matvec([p[0], p[1], Q(1)])
            if iz == 0 or (ix / iz, iy / iz) != tgt:
                bad.append({"claim": "four point map", "quad": [[str(x), str(y)] for x, y in quad]})
                break
        done += 1
    return _result("pipeline", trials, seed, bad)


DEFAULT_TRIALS = {
    "vandermonde": 100,
    "lifting": 50,
    "trivial-motions": 50,
    "projective-invariance": 20,
    "ops-preserve": 50,
    "k5-circuit": 1,
    "badmap-star": 25,
    "pin-determinant": 50,
    "matroid-axioms": 500,
    "pipeline": 20,
}


def run_suite(name: str, trials: Optional[int] = None, seed: int = DEFAULT_MASTER_SEED) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    if trials is None:
        trials = DEFAULT_TRIALS[name]
    return SUITES[name](trials, seed)
