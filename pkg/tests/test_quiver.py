import pytest

from knotquiver.algebra import (
    constant_action_biquandle_z2,
    core_cyclic,
    endomorphisms,
    swap3,
)
from knotquiver.cohomology import CoeffGroup
from knotquiver.construct import braid_closure
from knotquiver.diagram import Crossing, LinkDiagram, mirror, parse_gauss, r1_kink, r2_poke
from knotquiver.polynomials import (
    char_poly,
    edge_char_polynomial,
    edge_matrix_polynomial,
    maximal_paths,
    path_char_polynomial,
    path_matrix_polynomial,
)
from knotquiver.quiver import (
    DataVector,
    RepQuiver,
    build_coloring_quiver,
    build_representation,
    quiver_isomorphic,
)

EVAL_VECTORS = [
    (0, 1, 0, 1, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1),
]

LEAF = [[0, 1, 1], [0, 0, 0], [1, 0, 0]]
MID = [[2, 0, 1], [0, 0, 0], [0, 0, 0]]
CONST = [[3, 0, 0], [0, 0, 0], [0, 0, 0]]


def ref_l4():
    return LinkDiagram(
        [
            Crossing(1, under_in=0, over_in=7, under_out=1, over_out=4),
            Crossing(1, under_in=6, over_in=1, under_out=7, over_out=2),
            Crossing(1, under_in=2, over_in=5, under_out=3, over_out=6),
            Crossing(1, under_in=4, over_in=3, under_out=5, over_out=0),
        ]
    )


def ref_data():
    return DataVector(swap3(), CoeffGroup(3), EVAL_VECTORS, [(2, 2, 1)])


def two_crossing_virtual():
    return parse_gauss("O1+ O2+ U1+ U2+")


def virtual_data():
    bq = constant_action_biquandle_z2()
    return DataVector(bq, CoeffGroup(3), [(1, 0), (0, 1)], [(1, 2), (2, 1)])


def test_data_vector_validates_shapes():
    with pytest.raises(ValueError):
        DataVector(swap3(), CoeffGroup(3), [(1, 0)], [(2, 2, 1)])
    with pytest.raises(ValueError):
        DataVector(swap3(), CoeffGroup(3), EVAL_VECTORS, [(2, 1, 1)])
    # functionals that are not cocycles are allowed on purpose
    dv = ref_data()
    assert len(dv.vectors) == 3


def test_representation_needs_finite_coefficients():
    dv = DataVector(swap3(), CoeffGroup(0), EVAL_VECTORS, [(2, 2, 1)])
    with pytest.raises(ValueError):
        build_representation(ref_l4(), dv)


def test_coloring_quiver_of_trefoil():
    d = braid_closure([1, 1, 1])
    cols, arrows = build_coloring_quiver(d, core_cyclic(3), [(1, 1, 1), (2, 3, 1)])
    assert len(cols) == 9
    assert len(arrows) == 18
    assert all(0 <= s < 9 and 0 <= t < 9 for s, t, _ in arrows)


def test_reference_quiver_structure():
    q = build_representation(ref_l4(), ref_data())
    assert len(q.vertices) == 9
    assert len(q.edges) == 9
    assert q.labels == [0, 1, 2]

    at = {(c[0], c[4]): i for i, c in enumerate(q.vertices)}
    arrow = {}
    for (src, tgt, mat), k in zip(q.edges, q.edge_endos):
        assert k == 0
        arrow[src] = (tgt, mat)

    # push-forward collapses the coloring space onto the monochrome sink
    graph = {
        (3, 3): (1, 1),
        (3, 1): (1, 2),
        (3, 2): (1, 2),
        (1, 3): (2, 1),
        (2, 3): (2, 1),
        (1, 1): (2, 2),
        (1, 2): (2, 2),
        (2, 1): (2, 2),
        (2, 2): (2, 2),
    }
    for params, image in graph.items():
        assert arrow[at[params]][0] == at[image]

    for params, mat in [
        ((3, 1), LEAF),
        ((3, 2), LEAF),
        ((1, 3), LEAF),
        ((2, 3), LEAF),
        ((1, 2), MID),
        ((2, 1), MID),
        ((3, 3), CONST),
        ((1, 1), CONST),
        ((2, 2), CONST),
    ]:
        assert arrow[at[params]][1] == mat

    assert q.subspaces[at[(3, 1)]] == (0, 1, 2)
    assert q.subspaces[at[(1, 2)]] == (0, 2)
    assert q.subspaces[at[(2, 2)]] == (0,)


def test_edge_mass_and_support():
    q = build_representation(ref_l4(), ref_data())
    vals = []
    for chain in q.chains:
        vals.append([sum(a * b for a, b in zip(phi, chain)) % 3 for phi in EVAL_VECTORS])
    for src, tgt, mat in q.edges:
        assert sum(sum(row) for row in mat) == len(EVAL_VECTORS)
        nonzero_cols = {c for row in mat for c, e in enumerate(row) if e}
        assert nonzero_cols == set(vals[src]) == set(q.subspaces[src])
        nonzero_rows = {r for r, row in enumerate(mat) if any(row)}
        assert nonzero_rows == set(vals[tgt]) == set(q.subspaces[tgt])
        for c in range(3):
            assert sum(mat[r][c] for r in range(3)) == vals[src].count(c)


def test_reference_polynomials():
    q = build_representation(ref_l4(), ref_data())
    assert char_poly(LEAF).render() == "t^3-t"
    assert edge_char_polynomial(q).render() == "9t^3-13t^2-4t"
    assert edge_matrix_polynomial(q).render() == "4x^2+6y^2+4y+13"
    paths = maximal_paths(q)
    assert len(paths) == 5
    assert all(len(p) == 3 for p in paths)
    assert path_char_polynomial(q).render() == "5s^3t^3-39s^3t^2"
    assert path_matrix_polynomial(q).render() == "24x^2z^3+24xz^3+39z^3"


def test_composite_endomorphism_arrows():
    # push-forward composes, and every arrow keeps mass |C| no matter
    # which endomorphism produced it (matrices do not compose: each is
    # built from its own endpoints, not from intermediate steps)
    sigma = (2, 2, 1)
    square = tuple(sigma[sigma[x - 1] - 1] for x in (1, 2, 3))
    dv = DataVector(swap3(), CoeffGroup(3), EVAL_VECTORS, [sigma, square])
    q = build_representation(ref_l4(), dv)
    step, twostep = {}, {}
    for (src, tgt, mat), k in zip(q.edges, q.edge_endos):
        (step if k == 0 else twostep)[src] = (tgt, mat)
    for v, (mid, _) in step.items():
        assert twostep[v][0] == step[mid][0]
        assert sum(sum(row) for row in twostep[v][1]) == len(EVAL_VECTORS)


def test_virtual_reference_quiver():
    d = two_crossing_virtual()
    q = build_representation(d, virtual_data())
    assert len(q.vertices) == 2
    assert len(q.edges) == 4
    bump = [[0, 0, 0], [0, 2, 0], [0, 0, 0]]
    assert all(mat == bump for _, _, mat in q.edges)
    assert all(sub == (1,) for sub in q.subspaces)
    assert edge_char_polynomial(q).render() == "4t^3-8t^2"
    assert edge_matrix_polynomial(q).render() == "8xy"
    paths = maximal_paths(q)
    assert len(paths) == 4
    assert all(len(p) == 4 for p in paths)
    assert path_char_polynomial(q).render() == "4s^4t^3-64s^4t^2"
    assert path_matrix_polynomial(q).render() == "64xyz^4"


def test_virtual_mirror_quiver_differs():
    d = two_crossing_virtual()
    q = build_representation(d, virtual_data())
    qm = build_representation(mirror(d), virtual_data())
    assert edge_matrix_polynomial(qm).render() == "8x^2y^2"
    assert path_matrix_polynomial(qm).render() == "64x^2y^2z^4"
    assert quiver_isomorphic(q, q)
    assert not quiver_isomorphic(q, qm)


def test_moves_give_isomorphic_quivers():
    cases = [
        (ref_l4(), ref_data(), 0, 5),
        (two_crossing_virtual(), virtual_data(), 0, 2),
    ]
    for d, dv, a, b in cases:
        q = build_representation(d, dv)
        kinked = build_representation(r1_kink(d, 1, sign=-1), dv)
        poked = build_representation(r2_poke(d, a, b), dv)
        assert quiver_isomorphic(q, kinked)
        assert quiver_isomorphic(q, poked)
        assert quiver_isomorphic(kinked, poked)


def test_json_round_trip():
    q = build_representation(ref_l4(), ref_data())
    q2 = RepQuiver.from_json(q.to_json())
    assert q2.vertices == q.vertices
    assert q2.chains == q.chains
    assert q2.subspaces == q.subspaces
    assert q2.edges == q.edges
    assert q2.edge_endos == q.edge_endos
    assert q2.modulus == q.modulus
    for fn in (
        edge_char_polynomial,
        edge_matrix_polynomial,
        path_char_polynomial,
        path_matrix_polynomial,
    ):
        assert fn(q2).render() == fn(q).render()


def test_all_endomorphisms_quiver():
    bq = constant_action_biquandle_z2()
    endos = endomorphisms(bq)
    assert sorted(endos) == [(1, 2), (2, 1)]
    d = two_crossing_virtual()
    cols, arrows = build_coloring_quiver(d, bq, endos)
    assert len(cols) == 2 and len(arrows) == 4
