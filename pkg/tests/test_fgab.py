import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mclag.errors import ComplexNotExact, DimensionMismatch
from mclag.fgab import (
    FgAbelianGroup,
    direct_sum,
    divisibility_chain,
    from_relation_matrix,
    iso_equal,
    subquotient,
)
from mclag.linalg import IntMatrix

Z = FgAbelianGroup


def test_relation_matrix_examples():
    assert from_relation_matrix(2, IntMatrix([[2, 0], [0, 3]])) == Z(0, (6,))
    assert from_relation_matrix(3, IntMatrix.zeros(3, 0)) == Z(3)
    assert from_relation_matrix(1, IntMatrix([[2]])) == Z.cyclic(2)
    with pytest.raises(DimensionMismatch):
        from_relation_matrix(3, IntMatrix([[1]]))


def test_subquotient_examples():
    n = 4
    assert subquotient(IntMatrix.zeros(n, 0), IntMatrix.zeros(0, n)) == Z(n)
    assert subquotient(IntMatrix.identity(n), IntMatrix.zeros(0, n)).is_trivial
    with pytest.raises(ComplexNotExact):
        subquotient(IntMatrix([[1]]), IntMatrix([[1]]))


def test_direct_sum_examples():
    a = Z(4, (2, 2, 2))
    assert direct_sum(a, Z(6)) == Z(10, (2, 2, 2))
    assert direct_sum(a, Z.trivial()) == a
    assert direct_sum(Z.cyclic(2), Z.cyclic(2)).invariant_factors == (2, 2)


def test_iso_equal_examples():
    assert iso_equal(Z.cyclic(6), Z(0, (2, 3)))
    assert not iso_equal(Z(1), Z.cyclic(2))
    assert not iso_equal(Z(2, (4,)), Z(2, (2,)))


def test_canonical_form():
    assert divisibility_chain([1, 2, 3, 1, 4]) == (2, 12)
    assert Z(0, (1, 1)).is_trivial
    assert Z(0, (4, 6)).invariant_factors == (2, 12)
    with pytest.raises(ValueError):
        Z(0, (0,))


def test_rendering_and_json():
    g = Z(10, (2, 2, 2))
    assert str(g) == "Z^10 ⊕ (Z/2)^3"
    assert str(Z.trivial()) == "0"
    assert str(Z(1, (2, 4))) == "Z ⊕ Z/2 ⊕ Z/4"
    assert g.to_dict() == {"free_rank": 10, "invariant_factors": [2, 2, 2]}
    assert Z.from_json(g.to_json()) == g


groups = st.builds(
    lambda r, fs: Z(r, tuple(fs)),
    st.integers(0, 4),
    st.lists(st.integers(1, 12), max_size=4),
)


@settings(max_examples=200, deadline=None)
@given(groups, groups, groups)
def test_direct_sum_laws(a, b, c):
    assert iso_equal(direct_sum(a, b), direct_sum(b, a))
    assert iso_equal(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c)))


@settings(max_examples=200, deadline=None)
@given(groups)
def test_order_counts(a):
    # order of the torsion part is the product of the factors
    prod = 1
    for f in a.invariant_factors:
        prod *= f
    assert a.torsion.order == prod
    if a.free_rank:
        assert a.order == float("inf")


def test_relation_matrix_invariant_under_column_moves():
    rng = random.Random(5)
    for _ in range(50):
        r, c = rng.randint(1, 5), rng.randint(0, 6)
        cols = [[rng.randint(-6, 6) for _ in range(r)] for _ in range(c)]
        base = from_relation_matrix(r, IntMatrix.from_columns(cols, rows=r))
        rng.shuffle(cols)
        if len(cols) > 1:
            i, j = rng.sample(range(len(cols)), 2)
            q = rng.randint(-4, 4)
            cols[i] = [a + q * b for a, b in zip(cols[i], cols[j])]
        assert from_relation_matrix(r, IntMatrix.from_columns(cols, rows=r)) == base


def _brute_force_quotient_size(gens, rels, bound):
    """Size of Z^gens/span(rels) restricted to the box [0, bound)^gens.

    Only meaningful when bound * e_k lies in the span for every k, which the
    caller guarantees by appending bound * identity to rels.
    """
    seen = set()
    span = {tuple([0] * gens)}
    frontier = list(span)
    # closure of the relation lattice modulo bound
    while frontier:
        new = []
        for v in frontier:
            for r in rels:
                for s in (1, -1):
                    w = tuple((a + s * b) % bound for a, b in zip(v, r))
                    if w not in span:
                        span.add(w)
                        new.append(w)
        frontier = new
    for v in itertools.product(range(bound), repeat=gens):
        seen.add(min(tuple((a - b) % bound for a, b in zip(v, s)) for s in span))
    return len(seen)


def test_subquotient_against_enumeration():
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randint(1, 3)
        # d1 = 0, so the subquotient is the cokernel of d2 inside Z^n
        cols = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(0, 3))]
        bound = 6
        cols += [[bound * int(i == j) for i in range(n)] for j in range(n)]
        d2 = IntMatrix.from_columns(cols, rows=n)
        g = subquotient(d2, IntMatrix.zeros(0, n))
        assert g.order == _brute_force_quotient_size(n, cols, bound)


def test_subquotient_kernel_rank():
    # subquotient(0, d1) has the kernel rank of d1 as free rank
    d1 = IntMatrix([[1, 2, 3], [2, 4, 6]])
    assert subquotient(IntMatrix.zeros(3, 0), d1) == Z(2)
