import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mclag.errors import (
    DimensionMismatch,
    NotSymmetric,
    NotSymplectic,
    NotUnimodular,
    NotUpperTriangularBlockForm,
)
from mclag.linalg import IntMatrix, generates_full_lattice, rank, smith_normal_form
from mclag.presentations import elementary_matrix
from mclag.symplectic import (
    SpMatrix,
    embed_gl,
    embed_sym,
    induced_rep,
    is_symplectic,
    is_ursp,
    lagrangian_generation_check,
    lower_transvection,
    reflection,
    s2l_index,
    s2l_module,
    standard_j,
    symmetric_unit,
    transvection,
    twist_image_table,
    ul_map,
    wedge_vector,
)
from oracles import random_sp, random_unimodular, sym2_matrix


def test_is_symplectic_examples():
    assert is_symplectic(IntMatrix.identity(6), 3)
    assert is_symplectic(standard_j(3), 3)
    remark = lower_transvection(3)
    assert remark.m[5, 2] == 1
    assert remark.m - IntMatrix.identity(6) == IntMatrix(
        [[int((r, c) == (5, 2)) for c in range(6)] for r in range(6)])
    assert not is_symplectic(IntMatrix([[2 if i == j == 0 else int(i == j) for j in range(4)]
                                        for i in range(4)]), 2)
    with pytest.raises(DimensionMismatch):
        is_symplectic(IntMatrix.identity(3), 2)
    with pytest.raises(NotSymplectic):
        SpMatrix(1, IntMatrix([[1, 0], [0, 2]]))


def test_is_ursp_examples():
    ok, (A, B) = is_ursp(embed_gl(elementary_matrix(3, 1, 2)))
    assert ok and A == elementary_matrix(3, 1, 2) and B.is_zero()
    assert is_ursp(lower_transvection(3)) == (False, None)
    b = IntMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    ok, (A, B) = is_ursp(embed_sym(b))
    assert ok and A == IntMatrix.identity(3) and B == b


def test_embed_sym():
    assert embed_sym(IntMatrix.zeros(3, 3)) == SpMatrix.identity(3)
    x2 = transvection(3, 2)
    assert x2.m[1, 4] == 1 and x2.m - IntMatrix.identity(6) == IntMatrix(
        [[int((r, c) == (1, 4)) for c in range(6)] for r in range(6)])
    x12 = transvection(3, 1, 2)
    assert x12.block("B") == symmetric_unit(3, 1, 2)
    with pytest.raises(NotSymmetric):
        embed_sym(IntMatrix([[0, 1], [0, 0]]))


def test_embed_gl():
    assert embed_gl(IntMatrix.identity(3)) == SpMatrix.identity(3)
    a = elementary_matrix(3, 1, 2).inverse()
    s = embed_gl(a)
    # the element written e_12^-1 ⊕ e_21
    assert s.block("D") == elementary_matrix(3, 2, 1)
    r = embed_gl(reflection(3))
    assert r.block("A").det() == -1
    with pytest.raises(NotUnimodular):
        embed_gl(IntMatrix([[2, 0], [0, 1]]))


def test_ul_map():
    e12 = elementary_matrix(3, 1, 2)
    assert ul_map(embed_gl(e12)) == e12
    assert ul_map(transvection(3, 1)) == IntMatrix.identity(3)
    a = random_unimodular(random.Random(2), 3)
    b = IntMatrix([[1, 2, 0], [2, 0, 1], [0, 1, 5]])
    assert ul_map(embed_gl(a) @ embed_sym(b)) == a
    with pytest.raises(NotUpperTriangularBlockForm):
        ul_map(lower_transvection(3))


sym_entries = st.lists(st.integers(-3, 3), min_size=6, max_size=6)


def _sym(e):
    a, b, c, d, f, h = e
    return IntMatrix([[a, b, c], [b, d, f], [c, f, h]])


@settings(max_examples=100, deadline=None)
@given(sym_entries, sym_entries)
def test_embed_sym_additive(e1, e2):
    b1, b2 = _sym(e1), _sym(e2)
    assert embed_sym(b1) @ embed_sym(b2) == embed_sym(b1 + b2)


def test_random_products_are_symplectic_and_ul_kernel():
    rng = random.Random(4)
    for _ in range(40):
        s = random_sp(rng, 3, 5)
        assert is_symplectic(s.m, 3)
        assert s @ s.inverse() == SpMatrix.identity(3)
        # within urSp: ul(s) = I iff s = embed_sym(B)
        a = random_unimodular(rng, 3, rng.randint(0, 3))
        b = _sym([rng.randint(-2, 2) for _ in range(6)])
        u = embed_sym(b) @ embed_gl(a) @ embed_sym(b)
        in_kernel = ul_map(u) == IntMatrix.identity(3)
        assert in_kernel == (a == IntMatrix.identity(3))
        B = u.block("B")
        assert in_kernel == (B.is_symmetric() and u == embed_sym(B))


def test_sym2_example():
    m = induced_rep(elementary_matrix(3, 1, 2), "sym2_of_gl")
    col = m.column(s2l_index(3, 2, 2))
    expected = [0] * 6
    for i, j in [(1, 1), (1, 2), (2, 2)]:
        expected[s2l_index(3, i, j)] = 1
    assert col == expected
    assert m.column(s2l_index(3, 3, 3)) == [int(k == 2) for k in range(6)]


def test_sym2_against_tensor_oracle():
    rng = random.Random(8)
    for g in (2, 3, 4):
        for _ in range(10):
            a = random_unimodular(rng, g)
            assert induced_rep(a, "sym2_of_gl").tolist() == sym2_matrix(a.tolist())


def test_identity_and_dual():
    assert induced_rep(IntMatrix.identity(6), "wedge3") == IntMatrix.identity(20)
    a = random_unimodular(random.Random(1), 4)
    assert induced_rep(a, "dual") == a.inverse().T
    with pytest.raises(DimensionMismatch):
        induced_rep(IntMatrix([[1, 2]]), "wedge2")


@pytest.mark.parametrize("construction", ["sym2_of_gl", "wedge2", "wedge3", "dual"])
def test_functoriality(construction):
    rng = random.Random(hash(construction) % 1000)
    for _ in range(50):
        a, b = random_unimodular(rng, 4), random_unimodular(rng, 4)
        assert induced_rep(a @ b, construction) == \
            induced_rep(a, construction) @ induced_rep(b, construction)


def test_wedge2_of_sym2_matches_wedge_vectors():
    # ∧²(sym2 a) sends u ∧ v to (sym2 a) u ∧ (sym2 a) v
    a = random_unimodular(random.Random(6), 3)
    s = induced_rep(a, "sym2_of_gl")
    w = induced_rep(s, "wedge2")
    r = 6
    for p in range(r):
        for q in range(p + 1, r):
            u = [int(k == p) for k in range(r)]
            v = [int(k == q) for k in range(r)]
            assert w @ wedge_vector(u, v) == wedge_vector(s @ u, s @ v)


def test_twist_table():
    t = twist_image_table(3)
    assert len(t) == 6
    labels = s2l_module(3).labels
    c12 = {labels[k]: x for k, x in enumerate(t[0].vector) if x}
    assert t[0].label == "c1,2" and c12 == {"X1^2": 1, "X12": -1, "X2^2": 1}
    c3 = {labels[k]: x for k, x in enumerate(t[-1].vector) if x}
    assert t[-1].label == "c3" and c3 == {"X3^2": 1}
    assert all(set(x.families) == {"c", "d"} for x in t)


def test_twist_images_generate_s2l():
    for g in (3, 4, 5):
        vecs = [list(t.vector) for t in twist_image_table(g)]
        assert generates_full_lattice(vecs, g * (g + 1) // 2)


@pytest.mark.parametrize("g,expected", [(3, 15), (4, 45), (5, 105)])
def test_lagrangian_generation(g, expected):
    rep = lagrangian_generation_check(g)
    assert rep.generates_s2l and rep.ok
    assert rep.wedge_rank == rep.expected_wedge_rank == expected == comb(comb(g + 1, 2), 2)
    # SNF oracle on the wedge matrix: rank is the number of nonzero invariant factors
    vecs = [list(t.vector) for t in twist_image_table(g)]
    W = IntMatrix.from_columns([wedge_vector(a, b) for a in vecs for b in vecs],
                               rows=comb(comb(g + 1, 2), 2))
    if g <= 4:
        assert smith_normal_form(W).rank == expected
    assert rank(W) == expected
