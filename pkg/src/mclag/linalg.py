"""Exact integer linear algebra.

Everything here works over Python integers, so there is no overflow.
``IntMatrix`` stores its columns sparsely but behaves like a dense matrix.

Two engines do the work:

* ``smith_normal_form`` is a dense, fully certified reduction producing
  ``u @ a @ v == d``.  Pivots are chosen by minimal absolute value (ties go
  to the lowest row, then the lowest column).
* ``_Lattice`` inserts sparse column vectors one at a time into an echelon
  basis of their integer span (the column Hermite form up to reduction).
  It can also record the column operations, which gives kernels and
  solutions of ``a @ x == b``.  Cokernels and subquotients are computed
  from the echelon basis after discarding unit pivots, so the dense Smith
  step only ever sees a small core.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd, inf
from typing import Iterable, Sequence

from .errors import ComplexNotExact, DimensionMismatch, NotACycle
from .fgab import FgAbelianGroup

SparseVec = dict  # row index -> nonzero int


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _axpy(y: SparseVec, q: int, x: SparseVec) -> None:
    """y += q*x in place, dropping zeros."""
    if not q:
        return
    for k, v in x.items():
        nv = y.get(k, 0) + q * v
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)


def _comb(a: int, x: SparseVec, b: int, y: SparseVec) -> SparseVec:
    out = {k: a * v for k, v in x.items()} if a else {}
    _axpy(out, b, y)
    return {k: v for k, v in out.items() if v}


def _sparse(vec: Iterable[int]) -> SparseVec:
    return {i: int(v) for i, v in enumerate(vec) if v}


def _dense(vec: SparseVec, n: int) -> list[int]:
    out = [0] * n
    for k, v in vec.items():
        out[k] = v
    return out


class IntMatrix:
    """Immutable integer matrix with sparse column storage.

    ``IntMatrix([[1, 2], [3, 4]])`` builds from rows.  Zero-row and
    zero-column shapes are legal; pass ``rows``/``cols`` explicitly when
    the entry list cannot tell them apart.
    """

    __slots__ = ("rows", "cols", "_cols", "_hash")

    def __init__(self, entries: Sequence[Sequence[int]] = (), rows: int | None = None,
                 cols: int | None = None):
        entries = [list(r) for r in entries]
        nr = len(entries) if rows is None else rows
        if entries:
            nc = len(entries[0]) if cols is None else cols
        else:
            nc = 0 if cols is None else cols
        if len(entries) != nr and entries:
            raise DimensionMismatch("row count does not match entries")
        if any(len(r) != nc for r in entries):
            raise DimensionMismatch("ragged matrix")
        columns = [dict() for _ in range(nc)]
        for i, row in enumerate(entries):
            for j, v in enumerate(row):
                if not isinstance(v, int):
                    if isinstance(v, float) or int(v) != v:
                        raise TypeError("IntMatrix entries must be integers")
                    v = int(v)
                if v:
                    columns[j][i] = v
        self._init(nr, nc, columns)

    def _init(self, rows, cols, columns):
        self.rows = rows
        self.cols = cols
        self._cols = tuple(columns)
        self._hash = None

    @classmethod
    def _from_sparse_columns(cls, rows: int, columns: Sequence[SparseVec]) -> IntMatrix:
        m = cls.__new__(cls)
        m._init(rows, len(columns), [dict(c) for c in columns])
        return m

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> IntMatrix:
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise DimensionMismatch("row count needed for an empty column list")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise DimensionMismatch("column length mismatch")
        return cls._from_sparse_columns(rows, [_sparse(c) for c in columns])

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls._from_sparse_columns(n, [{j: 1} for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls._from_sparse_columns(rows, [{} for _ in range(cols)])

    @classmethod
    def coerce(cls, a, rows: int | None = None) -> IntMatrix:
        if isinstance(a, IntMatrix):
            return a
        a = [list(r) for r in a]
        if not a:
            return cls.zeros(rows or 0, 0)
        return cls(a)

    # --- access -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._cols[j].get(i, 0)

    def column(self, j: int) -> list[int]:
        return _dense(self._cols[j], self.rows)

    def sparse_column(self, j: int) -> SparseVec:
        return dict(self._cols[j])

    def row(self, i: int) -> list[int]:
        return [c.get(i, 0) for c in self._cols]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, c in enumerate(self._cols):
            for i, v in c.items():
                out[i][j] = v
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self._cols)

    # --- algebra ------------------------------------------------------
    @property
    def T(self) -> IntMatrix:
        cols = [dict() for _ in range(self.rows)]
        for j, c in enumerate(self._cols):
            for i, v in c.items():
                cols[i][j] = v
        return IntMatrix._from_sparse_columns(self.cols, cols)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            return IntMatrix._from_sparse_columns(
                self.rows, [self._apply_sparse(c) for c in other._cols]
            )
        vec = list(other)
        if len(vec) != self.cols:
            raise DimensionMismatch(f"{self.shape} @ vector of length {len(vec)}")
        return _dense(self._apply_sparse(_sparse(vec)), self.rows)

    def _apply_sparse(self, x: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for k, v in x.items():
            _axpy(out, v, self._cols[k])
        return out

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return IntMatrix._from_sparse_columns(
            self.rows, [_comb(1, a, 1, b) for a, b in zip(self._cols, other._cols)]
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix._from_sparse_columns(
            self.rows, [{i: k * v for i, v in c.items()} if k else {} for c in self._cols]
        )

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._cols == other._cols

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols,
                               tuple(frozenset(c.items()) for c in self._cols)))
        return self._hash

    def __repr__(self):
        if self.rows * self.cols <= 64:
            return f"IntMatrix({self.tolist()!r})"
        return f"<IntMatrix {self.rows}x{self.cols}, nnz={self.nnz()}>"

    def is_zero(self) -> bool:
        return not any(self._cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_diagonal(self) -> bool:
        return all(set(c) <= {j} for j, c in enumerate(self._cols))

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return IntMatrix._from_sparse_columns(self.rows, list(self._cols) + list(other._cols))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        pos = {r: k for k, r in enumerate(rows)}
        return IntMatrix._from_sparse_columns(
            len(rows),
            [{pos[i]: v for i, v in self._cols[j].items() if i in pos} for j in cols],
        )

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            mkk = m[k][k]
            for i in range(k + 1, n):
                mik = m[i][k]
                row_i, row_k = m[i], m[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * mkk - mik * row_k[j]) // prev
            prev = mkk
        return sign * m[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        """True iff square with determinant +-1, i.e. its columns span Z^n."""
        return self.is_square() and generates_full_lattice(
            [c for c in self._cols], self.rows
        )

    def inverse(self) -> IntMatrix:
        """Exact inverse of a unimodular matrix (from the certified SNF)."""
        from .errors import NotUnimodular

        if not self.is_square():
            raise NotUnimodular("not square")
        snf = smith_normal_form(self)
        if snf.d != IntMatrix.identity(self.rows):
            raise NotUnimodular("determinant is not +-1")
        return snf.v @ snf.u

    # --- serialization ------------------------------------------------
    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(v) for v in row) for row in self.tolist()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> IntMatrix:
        lines = text.split("\n")
        r, c = (int(t) for t in lines[0].split())
        body = lines[1:1 + r]
        if len(body) != r:
            raise DimensionMismatch("truncated matrix text")
        return cls([[int(t) for t in line.split()] for line in body], rows=r, cols=c)

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> IntMatrix:
        return cls(d["entries"], rows=d["rows"], cols=d["cols"])

    @classmethod
    def from_json(cls, s: str) -> IntMatrix:
        return cls.from_dict(json.loads(s))


# ---------------------------------------------------------------------------
# Certified Smith normal form (dense)


@dataclass(frozen=True)
class SmithDecomposition:
    d: IntMatrix
    u: IntMatrix
    v: IntMatrix
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _smith_dense(D: list[list[int]], n: int, U: list[list[int]] | None,
                 V: list[list[int]] | None) -> None:
    """Reduce the m x n list-of-rows D to Smith form in place.

    Row operations are mirrored on U (rows), column operations on V
    (columns); either may be None.
    """
    m = len(D)

    def row_add(dst, src, c):  # row dst += c * row src
        rd, rs = D[dst], D[src]
        for k in range(n):
            if rs[k]:
                rd[k] += c * rs[k]
        if U is not None:
            ud, us = U[dst], U[src]
            for k in range(m):
                if us[k]:
                    ud[k] += c * us[k]

    def col_add(dst, src, c):  # col dst += c * col src
        for row in D:
            if row[src]:
                row[dst] += c * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += c * row[src]

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            if U is not None:
                U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            if V is not None:
                for row in V:
                    row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            return
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    row_add(i, t, -(D[i][t] // p))
                    dirty = dirty or bool(D[i][t])
            for j in range(t + 1, n):
                if D[t][j]:
                    col_add(j, t, -(D[t][j] // p))
                    dirty = dirty or bool(D[t][j])
            if dirty:
                cand = [(abs(D[i][t]), 0, i) for i in range(t + 1, m) if D[i][t]]
                cand += [(abs(D[t][j]), 1, j) for j in range(t + 1, n) if D[t][j]]
                _, kind, k = min(cand)
                if kind == 0:
                    swap_rows(t, k)
                else:
                    swap_cols(t, k)
                continue
            bad = next(
                (i for i in range(t + 1, m) if any(x % p for x in D[i][t + 1:])), None
            )
            if bad is None:
                break
            row_add(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]


def smith_normal_form(a) -> SmithDecomposition:
    """Certified Smith normal form: ``u @ a @ v == d`` with u, v unimodular.

    >>> smith_normal_form([[2, 4], [6, 8]]).invariant_factors
    (2, 4)
    """
    a = IntMatrix.coerce(a)
    m, n = a.shape
    D = a.tolist()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    _smith_dense(D, n, U, V)
    factors = tuple(D[i][i] for i in range(min(m, n)) if D[i][i])
    return SmithDecomposition(
        d=IntMatrix(D, rows=m, cols=n),
        u=IntMatrix(U, rows=m, cols=m),
        v=IntMatrix(V, rows=n, cols=n),
        invariant_factors=factors,
    )


# ---------------------------------------------------------------------------
# Incremental echelon lattice


class _Lattice:
    """Echelon basis of the span of inserted sparse vectors in Z^dim.

    Each basis vector has a pivot (its smallest nonzero row index) with a
    positive pivot entry, and pivots are distinct.  With ``track`` set,
    every working vector carries the integer combination ``t`` of inserted
    vectors it equals; with ``track_inverse`` it also carries the matching
    row ``r`` of the inverse transformation.  Together the t's of the basis
    and of the vectors that reduced to zero form a unimodular matrix.
    """

    def __init__(self, dim: int, track: bool = False, track_inverse: bool = False):
        self.dim = dim
        self.track = track
        self.track_inverse = track_inverse
        self.pivots: dict[int, list] = {}
        self.null: list[tuple[SparseVec | None, SparseVec | None]] = []
        self.count = 0

    def add(self, vec: SparseVec) -> None:
        idx = self.count
        self.count += 1
        v = {k: x for k, x in vec.items() if x}
        t = {idx: 1} if self.track else None
        r = {idx: 1} if self.track_inverse else None
        pivots = self.pivots
        while v:
            p = min(v)
            ent = pivots.get(p)
            if ent is None:
                if v[p] < 0:
                    v = {k: -x for k, x in v.items()}
                    if t is not None:
                        t = {k: -x for k, x in t.items()}
                    if r is not None:
                        r = {k: -x for k, x in r.items()}
                pivots[p] = [v, t, r]
                return
            bv, bt, br = ent
            a, c = bv[p], v[p]
            if c % a == 0:
                q = c // a
                _axpy(v, -q, bv)
                if t is not None:
                    _axpy(t, -q, bt)
                if r is not None:
                    _axpy(br, q, r)
            else:
                g, s, u = xgcd(a, c)
                ag, cg = a // g, c // g
                ent[0], v = _comb(s, bv, u, v), _comb(ag, v, -cg, bv)
                if t is not None:
                    ent[1], t = _comb(s, bt, u, t), _comb(ag, t, -cg, bt)
                if r is not None:
                    ent[2], r = _comb(ag, br, cg, r), _comb(-u, br, s, r)
        self.null.append((t, r))

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, b: SparseVec) -> SparseVec | None:
        """Combination of inserted vectors equal to b, or None."""
        v = dict(b)
        x: SparseVec = {}
        while v:
            p = min(v)
            ent = self.pivots.get(p)
            if ent is None or v[p] % ent[0][p]:
                return None
            q = v[p] // ent[0][p]
            _axpy(v, -q, ent[0])
            if self.track:
                _axpy(x, q, ent[1])
        return x


def _lattice_of(columns: Iterable[SparseVec], dim: int, **kw) -> _Lattice:
    lat = _Lattice(dim, **kw)
    for c in columns:
        lat.add(c)
    return lat


class Cokernel:
    """The quotient ``Z^n / span(columns)`` with coordinates for its elements.

    Unit pivots of the echelon basis are eliminated first: a relation with a
    pivot entry 1 at row p just expresses generator p in terms of the later
    ones.  The remaining core is put in Smith form with its row transform.
    """

    def __init__(self, a, n: int | None = None):
        if isinstance(a, IntMatrix):
            n, columns = a.rows, a._cols
        else:
            columns = [c if isinstance(c, dict) else _sparse(c) for c in a]
            if n is None:
                raise DimensionMismatch("ambient rank required")
        self.n = n
        lat = _lattice_of(columns, n)
        self.rank = lat.rank
        basis = {p: ent[0] for p, ent in lat.pivots.items()}
        units = sorted(p for p, b in basis.items() if b[p] == 1)
        unit_set = set(units)
        for p in units:
            b = basis[p]
            for q, w in basis.items():
                if q != p and w.get(p):
                    _axpy(w, -w[p], b)
        self._units = [(p, basis[p]) for p in units]
        self._core_rows = [i for i in range(n) if i not in unit_set]
        pos = {r: k for k, r in enumerate(self._core_rows)}
        core_cols = [basis[p] for p in sorted(basis) if p not in unit_set]
        k = len(self._core_rows)
        D = [[0] * len(core_cols) for _ in range(k)]
        for j, c in enumerate(core_cols):
            for i, v in c.items():
                D[pos[i]][j] = v
        U = [[int(i == j) for j in range(k)] for i in range(k)]
        _smith_dense(D, len(core_cols), U, None)
        self._U = U
        self._diag = [D[i][i] for i in range(min(k, len(core_cols))) if D[i][i]]
        self.smith_factors = tuple([1] * len(units) + self._diag)
        self.group = FgAbelianGroup(n - self.rank, tuple(self._diag))

    def coordinates(self, x) -> list[int]:
        """Smith coordinates of the class of x.

        Entry i < len(diag) is meaningful modulo diag[i]; the rest are free.
        """
        v = x if isinstance(x, dict) else _sparse(x)
        v = dict(v)
        for p, b in self._units:
            if v.get(p):
                _axpy(v, -v[p], b)
        core = [v.get(r, 0) for r in self._core_rows]
        return [sum(ui * ci for ui, ci in zip(row, core) if ci) for row in self._U]

    def order_of(self, x) -> int | float:
        y = self.coordinates(x)
        nd = len(self._diag)
        if any(y[nd:]):
            return inf
        order = 1
        for yi, d in zip(y, self._diag):
            k = d // gcd(yi, d)
            order = order * k // gcd(order, k)
        return order

    def contains(self, x) -> bool:
        return self.order_of(x) == 1

    def generates(self, x) -> bool:
        """True iff the class of x generates the whole quotient."""
        G = self.group
        if G.is_trivial:
            return True
        if not G.is_cyclic:
            return False
        if G.is_finite:
            return self.order_of(x) == G.order
        y = self.coordinates(x)
        nd = len(self._diag)
        return abs(y[nd]) == 1 and all(yi % d == 0 for yi, d in zip(y, self._diag))


class Subquotient:
    """``ker(d1) / im(d2)`` together with coordinates for cycles."""

    def __init__(self, d2, d1, certify: bool = True):
        d2 = IntMatrix.coerce(d2)
        d1 = IntMatrix.coerce(d1, rows=0)
        if d1.cols != d2.rows:
            raise DimensionMismatch(f"d1 is {d1.shape} but d2 is {d2.shape}")
        if not (d1 @ d2).is_zero():
            raise ComplexNotExact("d1 @ d2 != 0")
        self.d1, self.d2 = d1, d2
        lat = _lattice_of(d1._cols, d1.rows, track=True, track_inverse=True)
        self.kernel = [t for t, _ in lat.null]
        # transpose of the inverse rows: column index -> [(kernel slot, coeff)]
        self._coord_index: dict[int, list[tuple[int, int]]] = {}
        for z, (_, r) in enumerate(lat.null):
            for i, v in r.items():
                self._coord_index.setdefault(i, []).append((z, v))
        coords = [self._kernel_coords(c) for c in d2._cols]
        if certify:
            for c, x in zip(d2._cols, coords):
                back: SparseVec = {}
                for z, v in x.items():
                    _axpy(back, v, self.kernel[z])
                if back != c:
                    raise AssertionError("kernel coordinates failed to reproduce a boundary")
        self.kernel_rank = len(self.kernel)
        self.coker = Cokernel(coords, self.kernel_rank)
        self.group = self.coker.group

    def _kernel_coords(self, c: SparseVec) -> SparseVec:
        x: SparseVec = {}
        for i, ci in c.items():
            for z, v in self._coord_index.get(i, ()):
                nv = x.get(z, 0) + ci * v
                if nv:
                    x[z] = nv
                else:
                    x.pop(z)
        return x

    def kernel_matrix(self) -> IntMatrix:
        return IntMatrix._from_sparse_columns(self.d1.cols, self.kernel)

    def class_of(self, cycle) -> SparseVec:
        c = cycle if isinstance(cycle, dict) else _sparse(cycle)
        if self.d1._apply_sparse(c):
            raise NotACycle("d1 @ cycle != 0")
        return self._kernel_coords(c)

    def order_of(self, cycle) -> int | float:
        return self.coker.order_of(self.class_of(cycle))

    def generates(self, cycle) -> bool:
        return self.coker.generates(self.class_of(cycle))


# ---------------------------------------------------------------------------
# Public operations


def kernel_basis(a) -> IntMatrix:
    """Columns form a basis of the integer kernel of a (a saturated lattice)."""
    a = IntMatrix.coerce(a)
    lat = _lattice_of(a._cols, a.rows, track=True)
    return IntMatrix._from_sparse_columns(a.cols, [t for t, _ in lat.null])


def rank(a) -> int:
    a = IntMatrix.coerce(a)
    return _lattice_of(a._cols, a.rows).rank


def cokernel_invariants(a) -> FgAbelianGroup:
    """Isomorphism type of Z^rows / (column span of a)."""
    return Cokernel(IntMatrix.coerce(a)).group


def invariant_factors(a) -> tuple[int, ...]:
    """Smith invariant factors without certificates (fast sparse path)."""
    return Cokernel(IntMatrix.coerce(a)).smith_factors


def solve_in_column_lattice(a, b: Sequence[int]) -> list[int] | None:
    """Integer x with a @ x == b, or None when b is outside the column lattice."""
    a = IntMatrix.coerce(a)
    b = list(b)
    if len(b) != a.rows:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {a.rows}")
    lat = _lattice_of(a._cols, a.rows, track=True)
    x = lat.solve(_sparse(b))
    return None if x is None else _dense(x, a.cols)


def generates_full_lattice(vectors, ambient_rank: int) -> bool:
    vecs = []
    for v in vectors:
        if not isinstance(v, dict):
            if len(v) != ambient_rank:
                raise DimensionMismatch(f"vector of length {len(v)} in Z^{ambient_rank}")
            v = _sparse(v)
        vecs.append(v)
    return Cokernel(vecs, ambient_rank).group.is_trivial
