"""Integral symplectic matrices and the modules they act on.

Coordinates on H = Z^{2g} are ordered (x_1..x_g, y_1..y_g); L is spanned
by the x's.  Every other layout in the package is derived from this one:

* S^2 L has basis X_1^2, ..., X_g^2, then X_ij (i < j) lexicographically,
  where X_i^2 = x_i (x) x_i and X_ij = x_i (x) x_j + x_j (x) x_i.
* exterior powers use increasing index tuples of the underlying basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import (
    DimensionMismatch,
    NotSymmetric,
    NotSymplectic,
    NotUnimodular,
    NotUpperTriangularBlockForm,
)
from .linalg import IntMatrix, _axpy, generates_full_lattice, rank
from .presentations import elementary_matrix


@dataclass(frozen=True)
class BasedModule:
    """A free module with named, ordered basis vectors."""

    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def vector(self, terms: dict[str, int]) -> list[int]:
        v = [0] * self.rank
        for lab, c in terms.items():
            v[self.index(lab)] += c
        return v


def h_module(g: int) -> BasedModule:
    return BasedModule(tuple(f"x{i}" for i in range(1, g + 1)) +
                       tuple(f"y{i}" for i in range(1, g + 1)))


def l_module(g: int) -> BasedModule:
    return BasedModule(tuple(f"x{i}" for i in range(1, g + 1)))


def s2l_pairs(g: int) -> list[tuple[int, int]]:
    """1-based (i, j), i <= j, in S^2 L basis order; (i, i) is X_i^2."""
    return [(i, i) for i in range(1, g + 1)] + list(combinations(range(1, g + 1), 2))


def s2l_module(g: int) -> BasedModule:
    sep = "" if g < 10 else ","
    return BasedModule(tuple(f"X{i}^2" if i == j else f"X{i}{sep}{j}" for i, j in s2l_pairs(g)))


def s2l_index(g: int, i: int, j: int) -> int:
    """Coordinate of X_i^2 (i == j) or X_ij in S^2 L; indices are 1-based."""
    i, j = min(i, j), max(i, j)
    if i == j:
        return i - 1
    # position of (i, j) among the lexicographic pairs
    before = sum(g - a for a in range(1, i))
    return g + before + (j - i - 1)


def wedge_module(base: BasedModule, k: int) -> BasedModule:
    return BasedModule(tuple("∧".join(base.labels[i] for i in t)
                             for t in combinations(range(base.rank), k)))


def standard_j(g: int) -> IntMatrix:
    rows = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        rows[i][g + i] = 1
        rows[g + i][i] = -1
    return IntMatrix(rows)


def is_symplectic(m, g: int) -> bool:
    m = IntMatrix.coerce(m)
    if m.shape != (2 * g, 2 * g):
        raise DimensionMismatch(f"expected a {2 * g}x{2 * g} matrix, got {m.shape}")
    J = standard_j(g)
    return m.T @ J @ m == J


@dataclass(frozen=True)
class SpMatrix:
    """An element of Sp(2g, Z); the symplectic condition is checked on construction."""

    g: int
    m: IntMatrix

    def __post_init__(self):
        object.__setattr__(self, "m", IntMatrix.coerce(self.m))
        if not is_symplectic(self.m, self.g):
            raise NotSymplectic("ᵗm J m != J")

    def __matmul__(self, other: SpMatrix) -> SpMatrix:
        if self.g != other.g:
            raise DimensionMismatch("genus mismatch")
        return SpMatrix(self.g, self.m @ other.m)

    def inverse(self) -> SpMatrix:
        # m^-1 = -J ᵗm J for symplectic m
        J = standard_j(self.g)
        return SpMatrix(self.g, -(J @ self.m.T @ J))

    def block(self, name: str) -> IntMatrix:
        g = self.g
        r0, c0 = {"A": (0, 0), "B": (0, g), "C": (g, 0), "D": (g, g)}[name]
        return self.m.submatrix(range(r0, r0 + g), range(c0, c0 + g))

    @classmethod
    def identity(cls, g: int) -> SpMatrix:
        return cls(g, IntMatrix.identity(2 * g))


def is_ursp(s: SpMatrix) -> tuple[bool, tuple[IntMatrix, IntMatrix] | None]:
    """Whether s lies in urSp(2g); on success also the blocks (A, B).

    For a symplectic matrix a zero lower-left block already forces
    D = ᵗA^-1 and A^-1 B symmetric; both are re-checked here.
    """
    if not s.block("C").is_zero():
        return False, None
    A, B, D = s.block("A"), s.block("B"), s.block("D")
    Ainv = A.inverse()
    assert D == Ainv.T, "symplectic matrix with C = 0 but D != ᵗA^-1"
    assert (Ainv @ B).is_symmetric(), "symplectic matrix with C = 0 but A^-1 B not symmetric"
    return True, (A, B)


def _block(a: IntMatrix, b: IntMatrix, c: IntMatrix, d: IntMatrix) -> IntMatrix:
    top = [ra + rb for ra, rb in zip(a.tolist(), b.tolist())]
    bot = [rc + rd for rc, rd in zip(c.tolist(), d.tolist())]
    return IntMatrix(top + bot)


def embed_sym(b) -> SpMatrix:
    """The unipotent element (I b; 0 I) of Sp(2g, Z) for symmetric b."""
    b = IntMatrix.coerce(b)
    if not b.is_symmetric():
        raise NotSymmetric("embed_sym needs a symmetric matrix")
    g = b.rows
    I, O = IntMatrix.identity(g), IntMatrix.zeros(g, g)
    return SpMatrix(g, _block(I, b, O, I))


def embed_gl(a) -> SpMatrix:
    """diag(a, ᵗa^-1): the splitting GL(g, Z) -> urSp(2g)."""
    a = IntMatrix.coerce(a)
    if not a.is_square() or abs(a.det()) != 1:
        raise NotUnimodular("embed_gl needs a unimodular matrix")
    g = a.rows
    O = IntMatrix.zeros(g, g)
    return SpMatrix(g, _block(a, O, O, a.inverse().T))


def ul_map(s: SpMatrix) -> IntMatrix:
    """Upper-left block of an element of urSp(2g)."""
    ok, blocks = is_ursp(s)
    if not ok:
        raise NotUpperTriangularBlockForm("lower-left block is nonzero")
    return blocks[0]


# --- induced representations ---------------------------------------------


def _wedge_columns(m: IntMatrix, k: int) -> list[dict]:
    n = m.rows
    pos = {t: p for p, t in enumerate(combinations(range(n), k))}
    cols = []
    for t in combinations(range(m.cols), k):
        out: dict = {}
        parts = [m.sparse_column(c) for c in t]
        for choice in product(*(p.items() for p in parts)):
            idx = [i for i, _ in choice]
            if len(set(idx)) < k:
                continue
            coef = 1
            for _, v in choice:
                coef *= v
            # sign of the sorting permutation
            sign = 1
            for a in range(k):
                for b in range(a + 1, k):
                    if idx[a] > idx[b]:
                        sign = -sign
            _axpy(out, sign * coef, {pos[tuple(sorted(idx))]: 1})
        cols.append(out)
    return cols


def _sym2_columns(a: IntMatrix) -> list[dict]:
    g = a.rows
    out_cols = []
    for k, l in s2l_pairs(g):
        ck, cl = a.sparse_column(k - 1), a.sparse_column(l - 1)
        out: dict = {}
        for (p, u), (q, v) in product(ck.items(), cl.items()):
            if k == l:
                # (a x_k)(a x_k): the pair {p, q} shows up twice unless p == q
                if p <= q:
                    _axpy(out, u * v, {s2l_index(g, p + 1, q + 1): 1})
            else:
                # (a x_k)(a x_l) + (a x_l)(a x_k) = sum u v (x_p x_q + x_q x_p)
                _axpy(out, (2 if p == q else 1) * u * v, {s2l_index(g, p + 1, q + 1): 1})
        out_cols.append(out)
    return out_cols


def induced_rep(m, construction: str) -> IntMatrix:
    """Matrix of the functorially induced action.

    construction is one of ``sym2_of_gl`` (g x g matrix acting on S^2 L),
    ``wedge2``, ``wedge3`` (exterior square/cube of any square matrix) or
    ``dual`` (ᵗm^-1).
    """
    if isinstance(m, SpMatrix):
        m = m.m
    m = IntMatrix.coerce(m)
    if not m.is_square():
        raise DimensionMismatch("induced representations need a square matrix")
    n = m.rows
    if construction == "sym2_of_gl":
        return IntMatrix._from_sparse_columns(n * (n + 1) // 2, _sym2_columns(m))
    if construction == "wedge2":
        return IntMatrix._from_sparse_columns(comb(n, 2), _wedge_columns(m, 2))
    if construction == "wedge3":
        return IntMatrix._from_sparse_columns(comb(n, 3), _wedge_columns(m, 3))
    if construction == "dual":
        return m.inverse().T
    raise ValueError(f"unknown construction {construction!r}")


def wedge_vector(a: list[int], b: list[int]) -> list[int]:
    """Coordinates of a ∧ b in the exterior square (basis e_p ∧ e_q, p < q)."""
    if len(a) != len(b):
        raise DimensionMismatch("wedge of vectors of different lengths")
    return [a[p] * b[q] - a[q] * b[p] for p, q in combinations(range(len(a)), 2)]


# --- generating sets -------------------------------------------------------


def symmetric_unit(g: int, i: int, j: int) -> IntMatrix:
    """E_ii when i == j, else E_ij + E_ji (1-based)."""
    rows = [[0] * g for _ in range(g)]
    rows[i - 1][j - 1] = 1
    rows[j - 1][i - 1] = 1
    return IntMatrix(rows)


def transvection(g: int, i: int, j: int | None = None) -> SpMatrix:
    """The S^2 L elements written X_i (j omitted) and X_{i,j}."""
    return embed_sym(symmetric_unit(g, i, i if j is None else j))


def s2l_generators(g: int) -> list[tuple[str, SpMatrix]]:
    return [((f"X{i}" if i == j else f"X{i},{j}"), embed_sym(symmetric_unit(g, i, j)))
            for i, j in s2l_pairs(g)]


def sl_generators(g: int) -> list[tuple[str, IntMatrix]]:
    return [(f"e{i},{j}", elementary_matrix(g, i, j))
            for i in range(1, g + 1) for j in range(1, g + 1) if i != j]


def reflection(g: int) -> IntMatrix:
    """diag(-1, 1, ..., 1), a representative of the determinant -1 coset."""
    rows = [[int(r == c) for c in range(g)] for r in range(g)]
    rows[0][0] = -1
    return IntMatrix(rows)


def gl_generators(g: int) -> list[tuple[str, IntMatrix]]:
    return sl_generators(g) + [("r1", reflection(g))]


def ursp_plus_generators(g: int) -> list[tuple[str, SpMatrix]]:
    return s2l_generators(g) + [(lab, embed_gl(a)) for lab, a in sl_generators(g)]


def ursp_generators(g: int) -> list[tuple[str, SpMatrix]]:
    return s2l_generators(g) + [(lab, embed_gl(a)) for lab, a in gl_generators(g)]


def lower_transvection(g: int, k: int | None = None) -> SpMatrix:
    """Identity plus a 1 at (y_k, x_k): x_k -> x_k + y_k.  Not in urSp.

    At g = 3 with k = 3 this is the 6x6 matrix used to pass from urSp(6)
    coinvariants to Sp(6, Z) coinvariants.
    """
    k = g if k is None else k
    rows = [[int(r == c) for c in range(2 * g)] for r in range(2 * g)]
    rows[g + k - 1][k - 1] = 1
    return SpMatrix(g, IntMatrix(rows))


def sp_generators(g: int) -> list[tuple[str, SpMatrix]]:
    """urSp(2g) generators together with one lower transvection; these generate Sp(2g, Z)."""
    return ursp_generators(g) + [(f"Y{g}", lower_transvection(g))]


# --- twist images and the abelian-cycle generation check -------------------


@dataclass(frozen=True)
class TwistImage:
    label: str
    vector: tuple[int, ...]
    # the c- and d-curve twists have identical images and commute across families
    families: tuple[str, ...] = ("c", "d")


def twist_image_table(g: int) -> list[TwistImage]:
    """Images in S^2 L of the twists along c_ij (i < j) and c_k.

    T_{c_ij} -> X_i^2 - X_ij + X_j^2 and T_{c_k} -> X_k^2; the d-family
    has the same images.
    """
    n = g * (g + 1) // 2
    table = []
    for i, j in combinations(range(1, g + 1), 2):
        v = [0] * n
        v[s2l_index(g, i, i)] += 1
        v[s2l_index(g, i, j)] -= 1
        v[s2l_index(g, j, j)] += 1
        table.append(TwistImage(f"c{i},{j}", tuple(v)))
    for k in range(1, g + 1):
        v = [0] * n
        v[s2l_index(g, k, k)] = 1
        table.append(TwistImage(f"c{k}", tuple(v)))
    return table


@dataclass(frozen=True)
class GenerationReport:
    generates_s2l: bool
    wedge_rank: int
    expected_wedge_rank: int
    wedges_generate: bool

    @property
    def ok(self) -> bool:
        return self.generates_s2l and self.wedge_rank == self.expected_wedge_rank


def lagrangian_generation_check(g: int) -> GenerationReport:
    """Linear-algebra content of the abelian-cycle argument.

    (a) the twist images generate S^2 L, and (b) wedges a ∧ b with a from
    the c-family and b from the commuting d-family span the exterior
    square of S^2 L at full rank.
    """
    table = twist_image_table(g)
    r = g * (g + 1) // 2
    vecs = [list(t.vector) for t in table]
    wedges = [wedge_vector(a, b) for a in vecs for b in vecs]
    W = IntMatrix.from_columns(wedges, rows=comb(r, 2))
    return GenerationReport(
        generates_s2l=generates_full_lattice(vecs, r),
        wedge_rank=rank(W),
        expected_wedge_rank=comb(r, 2),
        wedges_generate=generates_full_lattice(wedges, comb(r, 2)),
    )
