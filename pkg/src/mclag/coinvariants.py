"""Coinvariants of a module Z^a ⊕ (Z/2)^b under finitely many acting elements.

M_G is M modulo the span of σm - m.  It suffices to let σ run over a
generating set of G and m over generators of M: (στ)m - m equals
σ(τm) - τm + (τm - m), and σ^-1 m - m = -(σ(σ^-1 m) - σ^-1 m), so the
span over generators already contains every σm - m.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, InvalidAction
from .fgab import FgAbelianGroup
from .linalg import Cokernel, IntMatrix, _sparse


def _rank_mod2(m: IntMatrix) -> int:
    rows = [sum((m[i, j] & 1) << j for j in range(m.cols)) for i in range(m.rows)]
    r = 0
    for bit in range(m.cols):
        piv = next((k for k in range(r, len(rows)) if rows[k] >> bit & 1), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for k in range(len(rows)):
            if k != r and rows[k] >> bit & 1:
                rows[k] ^= rows[r]
        r += 1
    return r


@dataclass(frozen=True)
class ActionModule:
    """Z^free_rank ⊕ (Z/2)^torsion2_rank with one (A, Bm, C) triple per acting element.

    A generator f_j of the free part maps to (A[:, j], Bm[:, j]); a torsion
    generator t_k maps to (0, C[:, k]).  Bm and C are read mod 2.
    """

    free_rank: int
    torsion2_rank: int
    actions: tuple[tuple[IntMatrix, IntMatrix, IntMatrix], ...]

    def __post_init__(self):
        a, b = self.free_rank, self.torsion2_rank
        acts = []
        for A, Bm, C in self.actions:
            # list input cannot express shapes with a zero dimension
            if a == 0:
                A, Bm = IntMatrix.zeros(0, 0), IntMatrix.zeros(b, 0)
            if b == 0:
                Bm, C = IntMatrix.zeros(0, a), IntMatrix.zeros(0, 0)
            A = IntMatrix.coerce(A, rows=a)
            Bm = IntMatrix.coerce(Bm, rows=b)
            C = IntMatrix.coerce(C, rows=b)
            if A.shape != (a, a) or Bm.shape != (b, a) or C.shape != (b, b):
                raise DimensionMismatch(
                    f"action blocks of shapes {A.shape}, {Bm.shape}, {C.shape} "
                    f"for a module of ranks ({a}, {b})"
                )
            acts.append((A, Bm, C))
        object.__setattr__(self, "actions", tuple(acts))

    @property
    def ngens(self) -> int:
        return self.free_rank + self.torsion2_rank

    def validate(self) -> None:
        """Raise InvalidAction unless every element acts by an automorphism."""
        for n, (A, _, C) in enumerate(self.actions):
            if not A.is_unimodular():
                raise InvalidAction(f"element {n}: free block is not unimodular")
            if _rank_mod2(C) != self.torsion2_rank:
                raise InvalidAction(f"element {n}: torsion block is singular mod 2")

    def image(self, k: int, coords: Sequence[int]) -> list[int]:
        """Coordinates of element k applied to ``coords`` (torsion entries reduced mod 2)."""
        a = self.free_rank
        A, Bm, C = self.actions[k]
        x, t = list(coords[:a]), list(coords[a:])
        free = A @ x
        tors = [(u + v) % 2 for u, v in zip(Bm @ x, C @ t)]
        return free + tors

    def with_actions(self, actions) -> ActionModule:
        return ActionModule(self.free_rank, self.torsion2_rank, tuple(actions))

    def identity_only(self) -> ActionModule:
        a, b = self.free_rank, self.torsion2_rank
        return self.with_actions([(IntMatrix.identity(a), IntMatrix.zeros(b, a),
                                   IntMatrix.identity(b))])

    def to_dict(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "torsion2_rank": self.torsion2_rank,
            "actions": [{"A": A.tolist(), "B": Bm.tolist(), "C": C.tolist()}
                        for A, Bm, C in self.actions],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> ActionModule:
        a, b = int(d["free_rank"]), int(d["torsion2_rank"])
        acts = [(IntMatrix.coerce(e["A"], rows=a), IntMatrix.coerce(e["B"], rows=b),
                 IntMatrix.coerce(e["C"], rows=b)) for e in d["actions"]]
        return cls(a, b, tuple(acts))

    @classmethod
    def from_json(cls, s: str) -> ActionModule:
        return cls.from_dict(json.loads(s))


def free_action_module(matrices: Sequence) -> ActionModule:
    """The b = 0 case: a lattice with the given unimodular matrices acting."""
    mats = [IntMatrix.coerce(m) for m in matrices]
    if not mats:
        raise InvalidAction("at least one acting element is required")
    a = mats[0].rows
    return ActionModule(a, 0, tuple((m, IntMatrix.zeros(0, a), IntMatrix.zeros(0, 0))
                                    for m in mats))


def relation_columns(m: ActionModule) -> list[dict]:
    """2 t_k for each torsion generator, then σ(gen) - gen per element and generator."""
    a, b = m.free_rank, m.torsion2_rank
    cols = [{a + k: 2} for k in range(b)]
    for A, Bm, C in m.actions:
        for j in range(a):
            col = {i: v for i, v in A.sparse_column(j).items()}
            col[j] = col.get(j, 0) - 1
            for i, v in Bm.sparse_column(j).items():
                if v % 2:
                    col[a + i] = 1
            cols.append({i: v for i, v in col.items() if v})
        for k in range(b):
            col = {a + i: 1 for i, v in C.sparse_column(k).items() if v % 2}
            col[a + k] = col.get(a + k, 0) - 1
            cols.append({i: v for i, v in col.items() if v})
    return cols


def _cokernel(m: ActionModule) -> Cokernel:
    m.validate()
    return Cokernel(relation_columns(m), m.ngens)


def coinvariants(m: ActionModule) -> FgAbelianGroup:
    return _cokernel(m).group


@dataclass(frozen=True)
class Witness:
    order: int | float
    is_generator: bool


def coinvariant_witness(m: ActionModule, element: Sequence[int]) -> Witness:
    """Order of the class of ``element`` in M_G and whether it generates M_G."""
    if len(element) != m.ngens:
        raise InvalidAction(f"element has {len(element)} coordinates, module has {m.ngens}")
    ck = _cokernel(m)
    v = _sparse(element)
    return Witness(ck.order_of(v), ck.generates(v))


# --- the exterior square of S^2 L under SL(g, Z) ----------------------------


def wedge2_s2l_module(g: int, acting: str = "sl") -> ActionModule:
    """∧^2(S^2 L) with SL(g, Z) (or GL(g, Z)) acting through A ↦ sym2(A)."""
    from .symplectic import gl_generators, induced_rep, sl_generators

    gens = {"sl": sl_generators, "gl": gl_generators}[acting](g)
    return free_action_module(
        [induced_rep(induced_rep(a, "sym2_of_gl"), "wedge2") for _, a in gens]
    )


def wedge2_s2l_vector(g: int, p: tuple[int, int], q: tuple[int, int]) -> list[int]:
    """Coordinates of X_p ∧ X_q in ∧^2(S^2 L), e.g. p = (3, 3) for X_3^2."""
    from .symplectic import s2l_index, wedge_vector

    r = g * (g + 1) // 2
    u, v = [0] * r, [0] * r
    u[s2l_index(g, *p)] = 1
    v[s2l_index(g, *q)] = 1
    return wedge_vector(u, v)
