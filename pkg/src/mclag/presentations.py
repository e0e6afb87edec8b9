"""Finite presentations, words, and integer representations of presented groups."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import DimensionMismatch, NotUnimodular, UnsupportedGenus
from .fgab import FgAbelianGroup
from .linalg import IntMatrix, cokernel_invariants

# A word is a tuple of letters (generator index, +1 or -1); () is the identity.
Letter = tuple[int, int]
Word = tuple[Letter, ...]


def word(*letters: Letter) -> Word:
    for _, e in letters:
        if e not in (1, -1):
            raise ValueError("exponents must be +1 or -1; expand powers")
    return tuple(letters)


def inverse_word(w: Word) -> Word:
    return tuple((s, -e) for s, e in reversed(w))


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1."""
    return a + b + inverse_word(a) + inverse_word(b)


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(tuple(map(tuple, r)) for r in self.relators))
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise ValueError("duplicate generator labels")
        for k, r in enumerate(self.relators):
            for s, e in r:
                if not 0 <= s < n or e not in (1, -1):
                    raise ValueError(f"relator {k} has an invalid letter {(s, e)}")

    def index(self, label: str) -> int:
        return self.generators.index(label)

    def to_dict(self) -> dict:
        g = self.generators
        return {
            "generators": list(g),
            "relators": [[[g[s], e] for s, e in r] for r in self.relators],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> GroupPresentation:
        gens = tuple(d["generators"])
        pos = {lab: k for k, lab in enumerate(gens)}
        rels = tuple(tuple((pos[lab], int(e)) for lab, e in r) for r in d["relators"])
        return cls(gens, rels)

    @classmethod
    def from_json(cls, s: str) -> GroupPresentation:
        return cls.from_dict(json.loads(s))


def _elementary_label(g: int, i: int, j: int) -> str:
    return f"e{i}{j}" if g < 10 else f"e{i},{j}"


def sl_generator_pairs(g: int) -> list[tuple[int, int]]:
    """(i, j), 1-based with i != j, in the generator order of ``sl_presentation``."""
    return [(i, j) for i in range(1, g + 1) for j in range(1, g + 1) if i != j]


def sl_relator_families(g: int) -> dict[str, list[Word]]:
    """The three relator families of the Steinberg-type presentation of SL(g, Z).

    commutator: [e_ij, e_kl] for unordered pairs with j != k and i != l,
        each pair once, in lexicographic generator order.
    steinberg:  [e_ik, e_kj] e_ij^-1 for every ordered triple of distinct (i, k, j).
    torsion:    (e_12 e_21^-1 e_12)^4, expanded to 12 letters.
    """
    if g < 3:
        raise UnsupportedGenus(f"SL(g, Z) presentation needs g >= 3, got {g}")
    pairs = sl_generator_pairs(g)
    idx = {p: n for n, p in enumerate(pairs)}
    comm = []
    for (i, j), (k, l) in combinations(pairs, 2):
        if j != k and i != l:
            comm.append(commutator(((idx[i, j], 1),), ((idx[k, l], 1),)))
    rng = range(1, g + 1)
    stein = []
    for i in rng:
        for k in rng:
            for j in rng:
                if len({i, j, k}) == 3:
                    stein.append(
                        commutator(((idx[i, k], 1),), ((idx[k, j], 1),)) + ((idx[i, j], -1),)
                    )
    a, b = idx[1, 2], idx[2, 1]
    torsion = ((a, 1), (b, -1), (a, 1)) * 4
    return {"commutator": comm, "steinberg": stein, "torsion": [torsion]}


def sl_presentation(g: int) -> GroupPresentation:
    """Presentation of SL(g, Z), g >= 3, on the elementary matrices e_ij."""
    fam = sl_relator_families(g)
    gens = tuple(_elementary_label(g, i, j) for i, j in sl_generator_pairs(g))
    return GroupPresentation(gens, tuple(fam["commutator"] + fam["steinberg"] + fam["torsion"]))


def elementary_matrix(g: int, i: int, j: int) -> IntMatrix:
    """Identity plus a 1 in row i, column j (1-based)."""
    rows = [[int(r == c) for c in range(g)] for r in range(g)]
    rows[i - 1][j - 1] = 1
    return IntMatrix(rows)


@dataclass(frozen=True)
class IntRepresentation:
    """Per-generator unimodular integer matrices for a presented group."""

    presentation: GroupPresentation
    rank: int
    images: tuple[IntMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(IntMatrix.coerce(m) for m in self.images))
        if len(self.images) != len(self.presentation.generators):
            raise DimensionMismatch("one image per generator is required")
        for m in self.images:
            if m.shape != (self.rank, self.rank):
                raise DimensionMismatch(f"image of shape {m.shape}, rank is {self.rank}")

    @cached_property
    def inverses(self) -> tuple[IntMatrix, ...]:
        return tuple(m.inverse() for m in self.images)

    def letter_matrix(self, letter: Letter) -> IntMatrix:
        s, e = letter
        return self.images[s] if e == 1 else self.inverses[s]

    def evaluate(self, w: Word) -> IntMatrix:
        out = IntMatrix.identity(self.rank)
        for letter in w:
            out = out @ self.letter_matrix(letter)
        return out


def trivial_representation(pres: GroupPresentation, rank: int = 1) -> IntRepresentation:
    one = IntMatrix.identity(rank)
    return IntRepresentation(pres, rank, tuple(one for _ in pres.generators))


@dataclass(frozen=True)
class RepresentationCheck:
    ok: bool
    failing_relator: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def check_representation(rep: IntRepresentation) -> RepresentationCheck:
    for s, m in enumerate(rep.images):
        if not m.is_unimodular():
            return RepresentationCheck(False, None, f"image of generator {s} is not unimodular")
    one = IntMatrix.identity(rep.rank)
    for k, r in enumerate(rep.presentation.relators):
        if rep.evaluate(r) != one:
            return RepresentationCheck(False, k, f"relator {k} does not evaluate to 1")
    return RepresentationCheck(True)


def validate_representation(rep: IntRepresentation) -> bool:
    """True iff all images are unimodular and every relator maps to 1.

    Use ``check_representation`` for the first failing relator.
    """
    try:
        return check_representation(rep).ok
    except NotUnimodular:
        return False


def exponent_sum_matrix(pres: GroupPresentation) -> IntMatrix:
    n = len(pres.generators)
    cols = []
    for r in pres.relators:
        c = [0] * n
        for s, e in r:
            c[s] += e
        cols.append(c)
    return IntMatrix.from_columns(cols, rows=n)


def abelianized_h1(pres: GroupPresentation) -> FgAbelianGroup:
    """H_1 of the presented group: generators modulo relator exponent sums."""
    return cokernel_invariants(exponent_sum_matrix(pres))


def free_presentation(n: int) -> GroupPresentation:
    return GroupPresentation(tuple(f"a{k}" for k in range(1, n + 1)), ())


def with_relators(pres: GroupPresentation, relators: Sequence[Word]) -> GroupPresentation:
    """Same generators, new relator list."""
    return GroupPresentation(pres.generators, tuple(relators))
