import random
from types import SimpleNamespace

import pytest

from knotquiver.polynomials import (
    GroupExponentPolynomial as P,
    LimitError,
    char_poly,
    matrix_poly,
    maximal_paths,
    render_root_form,
    specialize,
)


def mono(c, modulus=0, **exps):
    return P.monomial(c, exps, modulus)


def test_render_ordinary_vars():
    p = mono(9, t=3) + mono(-13, t=2) + mono(-4, t=1)
    assert p.render() == "9t^3-13t^2-4t"
    p = mono(1, s=3, t=3) + mono(-27, s=3, t=2) + mono(2, s=2, t=3) + mono(-12, s=2, t=2)
    assert p.render() == "s^3t^3-27s^3t^2+2s^2t^3-12s^2t^2"
    assert P.zero().render() == "0"
    assert (mono(-3, t=2)).render() == "-3t^2"


def test_render_group_vars_and_constants():
    p = mono(4, 3, x=2) + mono(6, 3, y=2) + mono(4, 3, y=1) + P.constant(13, 3)
    assert p.render() == "4x^2+6y^2+4y+13"
    p = mono(2, 3, x=2, y=2) + mono(2, 3, x=2) + mono(6, 3, y=2) + mono(4, 3, y=1) + P.constant(13, 3)
    assert p.render() == "2x^2y^2+2x^2+6y^2+4y+13"
    # q sorts ascending so small weights come first
    p = P.constant(8, 2) + mono(8, 2, q=1)
    assert p.render() == "8+8q"


def test_render_mixed_path_terms():
    p = mono(6, 3, x=1, z=2) + mono(27, 3, z=3) + mono(12, 3, z=2)
    assert p.render() == "6xz^2+27z^3+12z^2"


def test_group_exponents_wrap():
    assert mono(1, 3, x=5) == mono(1, 3, x=2)
    assert (mono(1, 3, x=1) * mono(1, 3, x=2)).render() == "1"
    assert (mono(2, 4, y=3) * mono(3, 4, y=3)).render() == "6y^2"
    with pytest.raises(ValueError):
        mono(1, 3, x=1) * mono(1, 4, x=1)


def test_arithmetic_and_mass():
    a = mono(2, t=1) + 3
    b = mono(1, t=1) - 1
    assert (a * b).render() == "2t^2+t-3"
    assert (a - a).render() == "0"
    assert a.mass() == 5
    assert (a * b).mass() == 0


def test_char_poly_against_cofactor_expansion():
    def det(mat):
        n = len(mat)
        if n == 0:
            return P.constant(1)
        if n == 1:
            return mat[0][0]
        out = P.zero()
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
            term = mat[0][j] * det(minor)
            out = out + (term if j % 2 == 0 else -term)
        return out

    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 4)
        a = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        sym = [
            [
                (mono(1, t=1) if i == j else P.zero()) - P.constant(a[i][j])
                for j in range(n)
            ]
            for i in range(n)
        ]
        assert char_poly(a) == det(sym)


def test_char_poly_known():
    assert char_poly([[3, 0, 0], [0, 0, 0], [0, 0, 0]]).render() == "t^3-3t^2"
    assert char_poly([[2, 0], [0, 3]]).render() == "t^2-5t+6"
    assert char_poly([]).render() == "1"


def test_matrix_poly_row_and_col_vars():
    mat = [[1, 2], [0, 5]]
    p = matrix_poly(mat, [0, 1], [0, 1], 3, row_var="x", col_var="y")
    assert p.render() == "5xy+2y+1"
    q = matrix_poly(mat, [0, 1], [0, 1], 3, row_var="y", col_var="x")
    assert q.render() == "5xy+2x+1"


def test_specialize_drop_and_merge():
    p = mono(6, 3, x=1, z=2) + mono(27, 3, z=3)
    assert specialize(p, ones=("z",)).render() == "6x+27"
    p = mono(8, 2, x=1, y=1) + P.constant(8, 2)
    assert specialize(p, merge_xy_to_q=True).render() == "8+8q"
    bad = mono(1, 3, x=2, y=1)
    with pytest.raises(ValueError):
        specialize(bad, merge_xy_to_q=True)


def test_render_root_form():
    assert render_root_form([(0, 8), (1, 8)]) == "q^8(q-1)^8"
    assert render_root_form([(2, 1)]) == "(q-2)"
    assert render_root_form([]) == "1"


def quiver_of(edges, labels=None, modulus=2):
    return SimpleNamespace(edges=edges, labels=labels or [], modulus=modulus)


def test_maximal_paths_chain():
    q = quiver_of([(0, 1, None), (1, 2, None)])
    assert maximal_paths(q) == [(0, 1)]


def test_maximal_paths_scattered_subsequence_filter():
    # two loops joined by a two-way bridge: the four full circuits are
    # maximal; shorter stuck paths like loop-bridge-bridge embed in them
    # as scattered subsequences and must be filtered out
    L1, S1, L2, S2 = 0, 1, 2, 3
    q = quiver_of([(0, 0, None), (0, 1, None), (1, 1, None), (1, 0, None)])
    paths = maximal_paths(q)
    assert sorted(paths) == sorted(
        [(L1, S1, L2, S2), (S1, L2, S2, L1), (L2, S2, L1, S1), (S2, L1, S1, L2)]
    )


def test_maximal_paths_disconnected_loops():
    q = quiver_of([(0, 0, None), (1, 1, None)])
    assert maximal_paths(q) == [(0,), (1,)]


def test_maximal_paths_edge_cap():
    q = quiver_of([(0, 0, None), (1, 1, None)])
    with pytest.raises(LimitError):
        maximal_paths(q, max_edges=1)
