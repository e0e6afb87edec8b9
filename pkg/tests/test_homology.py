from pathlib import Path

import pytest

from mclag.errors import InvalidRepresentation, NotACycle
from mclag.fgab import FgAbelianGroup
from mclag.homology import (
    chain_boundaries,
    cycle_class_order,
    homology_h0,
    homology_h1,
    s2l_representation,
    sl_s2l_chain,
)
from mclag.linalg import IntMatrix, cokernel_invariants, kernel_basis
from mclag.presentations import (
    GroupPresentation,
    IntRepresentation,
    abelianized_h1,
    free_presentation,
    inverse_word,
    sl_presentation,
    trivial_representation,
    with_relators,
)
from mclag.symplectic import s2l_index
from oracles import inverse_unimodular, matmul, rank_mod_p, rank_q, sym2_matrix

GOLDEN = Path(__file__).parent / "golden"
Z2 = FgAbelianGroup.cyclic(2)


def _complex(g):
    return chain_boundaries(sl_presentation(g), s2l_representation(g))


def fox_d2_oracle(pres, images):
    """d2 written out from the formula with dense matrix products.

    images are plain lists; prefix inverses are recomputed from scratch
    for every letter instead of being updated incrementally.
    """
    r = len(images[0])
    inv = [inverse_unimodular(m) for m in images]
    ngen = len(pres.generators)

    def evaluate(w):
        out = [[int(i == j) for j in range(r)] for i in range(r)]
        for s, e in w:
            out = matmul(out, images[s] if e == 1 else inv[s])
        return out

    cols = []
    for w in pres.relators:
        block = [[0] * r for _ in range(ngen * r)]
        for m, (s, e) in enumerate(w):
            p_inv = evaluate(inverse_word(w[:m]))
            c = p_inv if e == 1 else [[-x for x in row] for row in matmul(images[s], p_inv)]
            for i in range(r):
                for k in range(r):
                    block[s * r + i][k] += c[i][k]
        for k in range(r):
            cols.append([block[i][k] for i in range(ngen * r)])
    return [list(row) for row in zip(*cols)]


def test_genus3_shapes_and_golden():
    d1, d2 = _complex(3)
    assert d1.shape == (6, 36)
    assert d2.shape == (36, 78)
    assert (d1 @ d2).is_zero()
    assert IntMatrix.from_text((GOLDEN / "sl3_s2l_d1.txt").read_text()) == d1
    assert IntMatrix.from_text((GOLDEN / "sl3_s2l_d2.txt").read_text()) == d2


def test_d2_matches_fox_oracle():
    pres = sl_presentation(3)
    from mclag.presentations import elementary_matrix, sl_generator_pairs

    images = [sym2_matrix(elementary_matrix(3, i, j).tolist()) for i, j in sl_generator_pairs(3)]
    _, d2 = _complex(3)
    assert d2.tolist() == fox_d2_oracle(pres, images)


def test_d1_entries():
    g = 3
    d1, _ = _complex(g)
    r = 6
    edge = {(1, 2): 0, (1, 3): 1, (2, 1): 2, (2, 3): 3, (3, 1): 4, (3, 2): 5}
    for (i, j), e in edge.items():
        k = ({1, 2, 3} - {i, j}).pop()
        # <e_ij> ⊗ X_jk maps to -X_ik
        col = d1.column(e * r + s2l_index(g, j, k))
        expected = [0] * r
        expected[s2l_index(g, i, k)] = -1
        assert col == expected
        # (e_ij^-1 - 1) X_j^2 = X_i^2 - X_ij
        col = d1.column(e * r + s2l_index(g, j, j))
        expected = [0] * r
        expected[s2l_index(g, i, i)] = 1
        expected[s2l_index(g, i, j)] = -1
        assert col == expected


def test_trivial_coefficients_d1_zero():
    for pres in (sl_presentation(3), free_presentation(3)):
        d1, _ = chain_boundaries(pres, trivial_representation(pres))
        assert d1.is_zero()
        assert homology_h0(pres, trivial_representation(pres)) == FgAbelianGroup(1)


def test_genus3_h1_and_witness():
    pres, rep = sl_presentation(3), s2l_representation(3)
    assert homology_h0(pres, rep).is_trivial
    assert homology_h1(pres, rep) == Z2
    assert cycle_class_order(pres, rep, sl_s2l_chain(3, 1, 2, 3, 3)) == (2, True)


def test_genus3_kernel_rank():
    d1, _ = _complex(3)
    assert kernel_basis(d1).cols == 30
    assert cokernel_invariants(d1).is_trivial


def test_genus3_h1_sympy_oracle():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as sym_snf

    for g, expected in ((3, [2]), (4, [])):
        d1, d2 = _complex(g)
        n = d2.rows
        # d1 is onto and ker d1 is a summand, so coker(d2) = H1 ⊕ Z^rank(d1)
        D = sym_snf(sympy.Matrix(d2.tolist()), domain=sympy.ZZ)
        diag = [abs(int(D[i, i])) for i in range(min(n, d2.cols))]
        nonzero = [x for x in diag if x]
        assert n - len(nonzero) == d1.rows
        assert sorted(x for x in nonzero if x > 1) == expected


@pytest.mark.parametrize("g", [3, 4, 5])
def test_field_ranks_agree(g):
    # universal coefficients: dim H1(C ⊗ F) = rank H1 + #(factors divisible by char F), H0 = 0
    d1, d2 = _complex(g)
    n = d1.cols
    h1 = homology_h1(sl_presentation(g), s2l_representation(g))
    a, b = d1.tolist(), d2.tolist()
    assert n - rank_q(a) - rank_q(b) == h1.free_rank
    for p in (2, 3):
        dim = n - rank_mod_p(a, p) - rank_mod_p(b, p)
        assert dim == h1.free_rank + sum(1 for f in h1.invariant_factors if f % p == 0)


@pytest.mark.parametrize("g", [4, 5])
def test_vanishing(g):
    pres, rep = sl_presentation(g), s2l_representation(g)
    assert homology_h0(pres, rep).is_trivial
    assert homology_h1(pres, rep).is_trivial


def test_cycle_orders():
    pres, rep = sl_presentation(3), s2l_representation(3)
    d1, d2 = _complex(3)
    for j in (0, 17, 77):
        assert cycle_class_order(pres, rep, d2.column(j))[0] == 1
    with pytest.raises(NotACycle):
        cycle_class_order(pres, rep, sl_s2l_chain(3, 1, 2, 2, 2))
    pres4, rep4 = sl_presentation(4), s2l_representation(4)
    k = kernel_basis(_complex(4)[0])
    assert cycle_class_order(pres4, rep4, k.column(5))[0] == 1


@pytest.mark.parametrize("g", [3, 4, 5])
def test_trivial_coefficients_match_abelianization(g):
    pres = sl_presentation(g)
    assert homology_h1(pres, trivial_representation(pres)) == abelianized_h1(pres)


def test_small_presentations_match_abelianization():
    cases = [
        GroupPresentation(("a", "b"), (((0, 1), (1, 1), (0, -1), (1, -1)),)),
        GroupPresentation(("a",), (((0, 1),) * 6,)),
        GroupPresentation(("a", "b"), (((0, 1),) * 2, ((0, 1), (1, 1)) * 3)),
    ]
    for pres in cases:
        assert homology_h1(pres, trivial_representation(pres)) == abelianized_h1(pres)


def test_relator_reordering_and_conjugation():
    pres, rep = sl_presentation(3), s2l_representation(3)
    rels = list(pres.relators)
    shuffled = with_relators(pres, rels[::-1])
    rep_s = IntRepresentation(shuffled, rep.rank, rep.images)
    assert homology_h1(shuffled, rep_s) == Z2
    conj = [((2, 1),) + rels[0] + ((2, -1),)] + rels[1:]
    pres_c = with_relators(pres, conj)
    assert homology_h1(pres_c, IntRepresentation(pres_c, rep.rank, rep.images)) == Z2


def test_invalid_representation_rejected():
    rep = s2l_representation(3)
    images = list(rep.images)
    images[1] = images[1].T
    bad = IntRepresentation(rep.presentation, rep.rank, tuple(images))
    with pytest.raises(InvalidRepresentation):
        chain_boundaries(bad.presentation, bad)
