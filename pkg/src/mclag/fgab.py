"""Finitely generated abelian groups, stored as isomorphism types.

A group is ``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``1 < d_1 | d_2 | ... | d_k``.
Construction always canonicalizes, so ``==`` is isomorphism.

>>> FgAbelianGroup(0, (2, 3))
FgAbelianGroup(free_rank=0, invariant_factors=(6,))
>>> print(direct_sum(FgAbelianGroup(4, (2, 2, 2)), FgAbelianGroup(6)))
Z^10 ⊕ (Z/2)^3
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterable


def divisibility_chain(orders: Iterable[int]) -> tuple[int, ...]:
    """Canonical invariant factors of a direct sum of finite cyclic groups.

    Zeros are rejected (they are free summands, handled by the caller).
    Entries equal to 1 disappear.
    """
    nums = [abs(int(d)) for d in orders]
    if any(d == 0 for d in nums):
        raise ValueError("cyclic orders must be nonzero")
    nums = sorted(d for d in nums if d != 1)
    # gcd/lcm bubbling; terminates because the multiset of prime powers is fixed
    changed = True
    while changed:
        changed = False
        for i in range(len(nums)):
            for j in range(i + 1, len(nums)):
                a, b = nums[i], nums[j]
                if b % a:
                    g = gcd(a, b)
                    nums[i], nums[j] = g, a * b // g
                    changed = True
        nums = sorted(d for d in nums if d != 1)
    return tuple(nums)


@dataclass(frozen=True)
class FgAbelianGroup:
    free_rank: int = 0
    invariant_factors: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        object.__setattr__(self, "free_rank", int(self.free_rank))
        object.__setattr__(
            self, "invariant_factors", divisibility_chain(self.invariant_factors)
        )

    @classmethod
    def trivial(cls) -> FgAbelianGroup:
        return cls(0, ())

    @classmethod
    def cyclic(cls, n: int) -> FgAbelianGroup:
        """Z/n, with n = 0 meaning Z."""
        return cls(1, ()) if n == 0 else cls(0, (n,))

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> FgAbelianGroup:
        """Direct sum of cyclic groups Z/n for n in ``orders`` (0 gives Z)."""
        orders = list(orders)
        return cls(sum(1 for n in orders if n == 0), tuple(n for n in orders if n))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.invariant_factors) <= 1

    @property
    def order(self) -> int | float:
        return prod(self.invariant_factors) if self.is_finite else float("inf")

    @property
    def torsion(self) -> FgAbelianGroup:
        return FgAbelianGroup(0, self.invariant_factors)

    def __add__(self, other: FgAbelianGroup) -> FgAbelianGroup:
        return direct_sum(self, other)

    def __str__(self):
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        counts: dict[int, int] = {}
        for d in self.invariant_factors:
            counts[d] = counts.get(d, 0) + 1
        for d, c in counts.items():
            parts.append(f"Z/{d}" if c == 1 else f"(Z/{d})^{c}")
        return " ⊕ ".join(parts)

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "invariant_factors": list(self.invariant_factors)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> FgAbelianGroup:
        return cls(d.get("free_rank", 0), tuple(d.get("invariant_factors", ())))

    @classmethod
    def from_json(cls, s: str) -> FgAbelianGroup:
        return cls.from_dict(json.loads(s))


def direct_sum(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    return FgAbelianGroup(a.free_rank + b.free_rank, a.invariant_factors + b.invariant_factors)


def iso_equal(a: FgAbelianGroup, b: FgAbelianGroup) -> bool:
    return a == b


def from_relation_matrix(generators: int, relations) -> FgAbelianGroup:
    """``Z^generators`` modulo the span of the columns of ``relations``."""
    from .errors import DimensionMismatch
    from .linalg import IntMatrix, cokernel_invariants

    relations = IntMatrix.coerce(relations, rows=generators)
    if relations.rows != generators:
        raise DimensionMismatch(
            f"relation matrix has {relations.rows} rows, expected {generators}"
        )
    return cokernel_invariants(relations)


def subquotient(d2, d1) -> FgAbelianGroup:
    """ker(d1) / im(d2) for composable integer maps with d1 @ d2 == 0."""
    from .linalg import Subquotient

    return Subquotient(d2, d1).group
