"""Degree 0 and 1 homology of a presented group with local coefficients.

The presentation 2-complex has one vertex, an edge <s> per generator and a
face per relator.  With coefficients in Z^r,

    d1(<s> (x) c)        = (s^-1 - 1) c
    d2(<w_1...w_n> (x) c) = sum_m <w_m> (x) (w_1 ... w_{m-1})^-1 c

where an inverse letter contributes <s^-1> (x) c := -<s> (x) s c.

Chain bases put the coefficient index fastest: the basis vector
<s> (x) e_k of C_1 has index s*r + k, and likewise for C_2.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import InvalidRepresentation
from .fgab import FgAbelianGroup
from .linalg import Cokernel, IntMatrix, Subquotient, _axpy
from .presentations import (
    GroupPresentation,
    IntRepresentation,
    check_representation,
    elementary_matrix,
    sl_generator_pairs,
    sl_presentation,
)
from .symplectic import induced_rep, s2l_index


def _rows(m: IntMatrix) -> list[dict]:
    rows = [dict() for _ in range(m.rows)]
    for j in range(m.cols):
        for i, v in m.sparse_column(j).items():
            rows[i][j] = v
    return rows


def _left_mul(rows: list[dict], P: list[list[int]]) -> list[list[int]]:
    """E @ P for E given by sparse rows and dense P."""
    n = len(P[0]) if P else 0
    out = []
    for er in rows:
        acc = [0] * n
        for k, v in er.items():
            pk = P[k]
            for c in range(n):
                if pk[c]:
                    acc[c] += v * pk[c]
        out.append(acc)
    return out


def chain_boundaries(pres: GroupPresentation, rep: IntRepresentation,
                     check: bool = True) -> tuple[IntMatrix, IntMatrix]:
    """The boundary matrices (d1, d2) of C_2 -> C_1 -> C_0."""
    if rep.presentation != pres:
        raise InvalidRepresentation("representation belongs to a different presentation")
    if check:
        res = check_representation(rep)
        if not res:
            raise InvalidRepresentation(res.reason)
    r = rep.rank
    ngen = len(pres.generators)
    img_rows = [_rows(m) for m in rep.images]
    inv_rows = [_rows(m) for m in rep.inverses]

    d1_cols = []
    for s in range(ngen):
        inv = rep.inverses[s]
        for k in range(r):
            col = inv.sparse_column(k)
            _axpy(col, -1, {k: 1})
            d1_cols.append(col)

    d2_cols = []
    ident = [[int(i == j) for j in range(r)] for i in range(r)]
    for w in pres.relators:
        # blocks[s] is the r x r coefficient block of <s> for this relator
        blocks: dict[int, list[list[int]]] = {}
        P = ident  # (w_1 ... w_{m-1})^-1
        for s, e in w:
            if e == 1:
                contrib = P
            else:
                contrib = [[-x for x in row] for row in _left_mul(img_rows[s], P)]
            blk = blocks.setdefault(s, [[0] * r for _ in range(r)])
            for i in range(r):
                bi, ci = blk[i], contrib[i]
                for c in range(r):
                    if ci[c]:
                        bi[c] += ci[c]
            P = _left_mul(inv_rows[s] if e == 1 else img_rows[s], P)
        for k in range(r):
            col: dict = {}
            for s, blk in blocks.items():
                for i in range(r):
                    if blk[i][k]:
                        col[s * r + i] = blk[i][k]
            d2_cols.append(col)

    d1 = IntMatrix._from_sparse_columns(r, d1_cols)
    d2 = IntMatrix._from_sparse_columns(ngen * r, d2_cols)
    if not (d1 @ d2).is_zero():
        raise InvalidRepresentation("d1 @ d2 != 0; relators are not respected")
    return d1, d2


@lru_cache(maxsize=32)
def _complex(pres: GroupPresentation, rep: IntRepresentation):
    return chain_boundaries(pres, rep)


@lru_cache(maxsize=32)
def _h1(pres: GroupPresentation, rep: IntRepresentation) -> Subquotient:
    d1, d2 = _complex(pres, rep)
    return Subquotient(d2, d1)


def homology_h0(pres: GroupPresentation, rep: IntRepresentation) -> FgAbelianGroup:
    d1, _ = _complex(pres, rep)
    return Cokernel(d1).group


def homology_h1(pres: GroupPresentation, rep: IntRepresentation) -> FgAbelianGroup:
    return _h1(pres, rep).group


def cycle_class_order(pres: GroupPresentation, rep: IntRepresentation,
                      cycle) -> tuple[int | float, bool]:
    """(order of the class of cycle in H_1, whether that class generates H_1)."""
    sq = _h1(pres, rep)
    coords = sq.class_of(cycle)
    return sq.coker.order_of(coords), sq.coker.generates(coords)


def s2l_representation(g: int) -> IntRepresentation:
    """S^2 L as a representation of ``sl_presentation(g)``."""
    pres = sl_presentation(g)
    images = tuple(induced_rep(elementary_matrix(g, i, j), "sym2_of_gl")
                   for i, j in sl_generator_pairs(g))
    return IntRepresentation(pres, g * (g + 1) // 2, images)


def sl_edge_index(g: int, i: int, j: int) -> int:
    return sl_generator_pairs(g).index((i, j))


def sl_s2l_chain(g: int, i: int, j: int, a: int, b: int) -> list[int]:
    """The 1-chain <e_ij> (x) X_ab (X_aa meaning X_a^2) in C_1(SL(g, Z); S^2 L)."""
    r = g * (g + 1) // 2
    v = [0] * (g * (g - 1) * r)
    v[sl_edge_index(g, i, j) * r + s2l_index(g, a, b)] = 1
    return v
