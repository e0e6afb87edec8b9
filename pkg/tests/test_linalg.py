import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mclag.errors import DimensionMismatch, NotUnimodular
from mclag.linalg import (
    Cokernel,
    IntMatrix,
    cokernel_invariants,
    generates_full_lattice,
    invariant_factors,
    kernel_basis,
    rank,
    smith_normal_form,
    solve_in_column_lattice,
)
from oracles import det_small, invariant_factors_by_minors, rank_q


@st.composite
def int_matrices(draw, max_dim=6, lo=-9, hi=9):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    return [[draw(st.integers(lo, hi)) for _ in range(c)] for _ in range(r)], r, c


def _mat(rows, r, c):
    return IntMatrix(rows, rows=r, cols=c)


def test_identity_and_zero():
    s = smith_normal_form(IntMatrix.identity(2))
    assert s.invariant_factors == (1, 1)
    assert s.d == IntMatrix.identity(2)
    z = smith_normal_form(IntMatrix.zeros(2, 2))
    assert z.invariant_factors == ()
    assert z.d.is_zero()


def test_two_by_two_example():
    a = IntMatrix([[2, 4], [6, 8]])
    s = smith_normal_form(a)
    assert s.invariant_factors == (2, 4)
    # gcd of entries and |det| pin the answer down
    assert invariant_factors_by_minors(a.tolist()) == [2, 4]


def test_empty_shapes():
    for r, c in [(0, 0), (0, 3), (3, 0)]:
        a = IntMatrix.zeros(r, c)
        s = smith_normal_form(a)
        assert s.d.shape == (r, c)
        assert s.u.shape == (r, r) and s.v.shape == (c, c)
        assert s.invariant_factors == ()
    assert cokernel_invariants(IntMatrix.zeros(3, 0)).free_rank == 3


@settings(max_examples=500, deadline=None)
@given(int_matrices())
def test_snf_certificates(data):
    rows, r, c = data
    a = _mat(rows, r, c)
    s = smith_normal_form(a)
    assert s.u @ a @ s.v == s.d
    assert s.d.is_diagonal()
    assert s.u.det() in (1, -1)
    assert s.v.det() in (1, -1)
    f = s.invariant_factors
    assert all(x > 0 for x in f)
    assert all(f[k + 1] % f[k] == 0 for k in range(len(f) - 1))
    assert list(f) == [s.d[i, i] for i in range(min(r, c)) if s.d[i, i]]
    # the factors-only path agrees with the certified one
    assert invariant_factors(a) == f


@settings(max_examples=200, deadline=None)
@given(int_matrices(max_dim=4, lo=-6, hi=6))
def test_snf_against_minors(data):
    rows, r, c = data
    a = _mat(rows, r, c)
    assert list(smith_normal_form(a).invariant_factors) == invariant_factors_by_minors(rows)


def test_snf_against_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as sym_snf

    rng = random.Random(7)
    for _ in range(40):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[rng.randint(-20, 20) for _ in range(c)] for _ in range(r)]
        d = sym_snf(sympy.Matrix(rows), domain=sympy.ZZ)
        theirs = sorted(abs(int(d[i, i])) for i in range(min(r, c)) if d[i, i] != 0)
        assert sorted(smith_normal_form(IntMatrix(rows)).invariant_factors) == theirs


@settings(max_examples=200, deadline=None)
@given(int_matrices(max_dim=8))
def test_rank_nullity(data):
    rows, r, c = data
    a = _mat(rows, r, c)
    k = kernel_basis(a)
    assert (a @ k).is_zero()
    assert k.cols == c - rank(a)
    expected = rank_q(rows) if r else 0
    assert rank(a) == smith_normal_form(a).rank == expected


@settings(max_examples=100, deadline=None)
@given(int_matrices(max_dim=5, lo=-4, hi=4))
def test_kernel_saturated(data):
    # saturation: the kernel basis spans a direct summand, so its Smith factors are all 1
    rows, r, c = data
    k = kernel_basis(_mat(rows, r, c))
    if k.cols:
        assert all(f == 1 for f in smith_normal_form(k).invariant_factors)


def test_kernel_examples():
    assert kernel_basis(IntMatrix.identity(2)).cols == 0
    k = kernel_basis(IntMatrix([[1, 1]]))
    assert k.cols == 1 and k.column(0) in ([1, -1], [-1, 1])


def _random_unimodular(rng, n, steps=12):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            m[i] = [-x for x in m[i]]
            continue
        q = rng.randint(-3, 3)
        m[i] = [a + q * b for a, b in zip(m[i], m[j])]
    return IntMatrix(m)


def test_cokernel_invariant_under_unimodular_changes():
    rng = random.Random(3)
    for _ in range(60):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        a = IntMatrix([[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)])
        p, q = _random_unimodular(rng, r), _random_unimodular(rng, c)
        assert cokernel_invariants(p @ a @ q) == cokernel_invariants(a)


def test_cokernel_examples():
    g = cokernel_invariants(IntMatrix([[1, 0], [0, 2]]))
    assert g.free_rank == 0 and g.invariant_factors == (2,)


def test_solve():
    assert solve_in_column_lattice(IntMatrix.identity(3), [4, -1, 7]) == [4, -1, 7]
    assert solve_in_column_lattice(IntMatrix([[2]]), [1]) is None
    assert solve_in_column_lattice(IntMatrix([[2]]), [6]) == [3]
    with pytest.raises(DimensionMismatch):
        solve_in_column_lattice(IntMatrix([[2]]), [1, 2])


@settings(max_examples=150, deadline=None)
@given(int_matrices(max_dim=5), st.data())
def test_solve_roundtrip(data, draw):
    rows, r, c = data
    a = _mat(rows, r, c)
    x = draw.draw(st.lists(st.integers(-5, 5), min_size=c, max_size=c))
    b = a @ x
    sol = solve_in_column_lattice(a, b)
    assert sol is not None and a @ sol == b


def test_generates_full_lattice():
    assert generates_full_lattice([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3)
    assert not generates_full_lattice([[2, 0], [0, 1]], 2)
    with pytest.raises(DimensionMismatch):
        generates_full_lattice([[1, 0]], 3)


def test_inverse_and_det():
    a = IntMatrix([[2, 1], [1, 1]])
    assert a.det() == 1 and a.is_unimodular()
    assert a @ a.inverse() == IntMatrix.identity(2)
    with pytest.raises(NotUnimodular):
        IntMatrix([[2, 0], [0, 1]]).inverse()
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert IntMatrix(rows).det() == det_small(rows)


def test_text_and_json_roundtrip():
    a = IntMatrix([[1, -2, 3], [10**30, 0, -5]])
    assert a.to_text().splitlines()[0] == "2 3"
    assert IntMatrix.from_text(a.to_text()) == a
    assert IntMatrix.from_json(a.to_json()) == a
    d = json.loads(a.to_json())
    assert d == {"rows": 2, "cols": 3, "entries": [[1, -2, 3], [10**30, 0, -5]]}
    e = IntMatrix.zeros(0, 4)
    assert IntMatrix.from_text(e.to_text()).shape == (0, 4)
    assert IntMatrix.from_json(e.to_json()).shape == (0, 4)


def test_big_integers_survive():
    big = 2**80 + 1
    s = smith_normal_form(IntMatrix([[big, 0], [0, big * 3]]))
    assert s.invariant_factors == (big, 3 * big)


def test_cokernel_orders():
    ck = Cokernel(IntMatrix([[2, 0], [0, 0]]))
    assert ck.group.free_rank == 1 and ck.group.invariant_factors == (2,)
    assert ck.order_of([1, 0]) == 2
    assert ck.order_of([0, 1]) == float("inf")
    assert ck.contains([2, 0])
