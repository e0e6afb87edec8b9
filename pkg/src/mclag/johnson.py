"""Johnson's Z/2-algebra B and the fiber-product model of H_1 of the Torelli group.

B is generated by symbols v̄ for v in H (x) Z/2 subject to v̄^2 = v̄ and
(u+v)‾ = ū + v̄ + μ(u, v).  As a vector space it has the squarefree
monomials in the 2g basis symbols x̄_1..x̄_g, ȳ_1..ȳ_g as a basis, and
``BElement`` stores an element as the set of monomials with coefficient 1.
A monomial is a bitmask: bit i is the i-th basis vector of H.

An element of the fiber product ∧^3 H ×_{∧^3(H⊗Z/2)} B^3 is kept in the
canonical form (n, beta): n in Z^{C(2g,3)} is the ∧^3 H part and

    B^3 part = sum_e (n_e mod 2) * b_e + beta,      beta in B^2,

with b_e = ūv̄w̄ the monomial of the basis triple e = u∧v∧w.  In these
coordinates the group is Z^{C(2g,3)} ⊕ (Z/2)^{dim B^2}.  Another choice
of lifts b_e changes coordinates, not isomorphism types.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .coinvariants import ActionModule
from .errors import CompatibilityViolation, DimensionMismatch, UnsupportedGenus
from .linalg import IntMatrix
from .symplectic import SpMatrix, h_module, induced_rep


def _var_labels(g: int) -> list[str]:
    return list(h_module(g).labels)


def _popcount(m: int) -> int:
    return bin(m).count("1")


@dataclass(frozen=True)
class BElement:
    g: int
    terms: frozenset = field(default_factory=frozenset)

    @classmethod
    def zero(cls, g: int) -> BElement:
        return cls(g, frozenset())

    @classmethod
    def one(cls, g: int) -> BElement:
        return cls(g, frozenset({0}))

    @classmethod
    def monomial(cls, g: int, variables: Iterable[int]) -> BElement:
        mask = 0
        for v in variables:
            mask |= 1 << v
        return cls(g, frozenset({mask}))

    @classmethod
    def var(cls, g: int, label: str) -> BElement:
        return cls.monomial(g, [_var_labels(g).index(label)])

    @classmethod
    def parse(cls, g: int, text: str) -> BElement:
        """Parse e.g. ``"x1 y1 y2 + x1 y1 + 1"`` (``0`` is the zero element)."""
        labels = _var_labels(g)
        out = cls.zero(g)
        for term in text.split("+"):
            names = term.split()
            if names == ["0"]:
                continue
            if names == ["1"]:
                out = out + cls.one(g)
                continue
            out = out + cls.monomial(g, [labels.index(n) for n in names])
        return out

    def __add__(self, other: BElement) -> BElement:
        return BElement(self.g, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: BElement) -> BElement:
        out: set = set()
        for a in self.terms:
            for b in other.terms:
                out ^= {a | b}
        return BElement(self.g, frozenset(out))

    @property
    def degree(self) -> int:
        """Largest monomial degree; -1 for zero."""
        return max((_popcount(m) for m in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def top_part(self, k: int) -> BElement:
        return BElement(self.g, frozenset(m for m in self.terms if _popcount(m) == k))

    def __str__(self):
        if not self.terms:
            return "0"
        labels = _var_labels(self.g)

        def key(m):
            return (_popcount(m), [i for i in range(2 * self.g) if m >> i & 1])

        parts = []
        for m in sorted(self.terms, key=key):
            names = [labels[i] for i in range(2 * self.g) if m >> i & 1]
            parts.append(" ".join(names) if names else "1")
        return " + ".join(parts)


def b_multiply(a: BElement, b: BElement) -> BElement:
    return a * b


def mu2(g: int, u: Sequence[int], v: Sequence[int]) -> int:
    """Intersection pairing of two vectors of H, reduced mod 2."""
    return sum(u[i] * v[g + i] + u[g + i] * v[i] for i in range(g)) % 2


def bar_expand(g: int, v: Sequence[int], order: Sequence[int] | None = None) -> BElement:
    """The element v̄ of B for v in H (entries read mod 2).

    Built by adding one basis vector at a time with the sum relation, in
    coordinate order unless ``order`` gives another permutation.
    """
    if len(v) != 2 * g:
        raise DimensionMismatch(f"vector of length {len(v)} in H of rank {2 * g}")
    order = range(2 * g) if order is None else order
    acc_vec = [0] * (2 * g)
    acc = BElement.zero(g)
    for i in order:
        if v[i] % 2:
            e = [0] * (2 * g)
            e[i] = 1
            acc = acc + BElement.monomial(g, [i])
            if mu2(g, acc_vec, e):
                acc = acc + BElement.one(g)
            acc_vec[i] = 1
    return acc


# --- fiber-product model -----------------------------------------------------


@lru_cache(maxsize=None)
def wedge3_triples(g: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(combinations(range(2 * g), 3))


@lru_cache(maxsize=None)
def _triple_index(g: int) -> dict:
    return {t: k for k, t in enumerate(wedge3_triples(g))}


@lru_cache(maxsize=None)
def b2_monomials(g: int) -> tuple[int, ...]:
    """Masks of the monomials of degree <= 2: 1, then variables, then pairs."""
    n = 2 * g
    return ((0,) + tuple(1 << i for i in range(n)) +
            tuple((1 << i) | (1 << j) for i, j in combinations(range(n), 2)))


@lru_cache(maxsize=None)
def _b2_index(g: int) -> dict:
    return {m: k for k, m in enumerate(b2_monomials(g))}


def _lift(g: int, n: Sequence[int]) -> BElement:
    triples = wedge3_triples(g)
    return BElement(g, frozenset(
        (1 << a) | (1 << b) | (1 << c) for (a, b, c), k in zip(triples, n) if k % 2
    ))


@dataclass(frozen=True)
class TorelliClass:
    """An element (n, beta) of the fiber-product model in canonical form."""

    g: int
    n: tuple[int, ...]
    beta: BElement

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(k) for k in self.n))
        if len(self.n) != comb(2 * self.g, 3):
            raise DimensionMismatch("lattice part has the wrong length")
        if self.beta.degree > 2:
            raise CompatibilityViolation("beta must lie in B^2")

    @classmethod
    def zero(cls, g: int) -> TorelliClass:
        return cls(g, (0,) * comb(2 * g, 3), BElement.zero(g))

    @classmethod
    def from_pair(cls, g: int, wedge: Sequence[int], b3: BElement) -> TorelliClass:
        """Canonical form of (wedge, b3); raises if they disagree mod 2."""
        beta = b3 + _lift(g, wedge)
        if beta.degree > 2:
            raise CompatibilityViolation(
                "∧^3 H part mod 2 does not match the degree-3 part of the B^3 part"
            )
        return cls(g, tuple(wedge), beta)

    def b3(self) -> BElement:
        return _lift(self.g, self.n) + self.beta

    def __add__(self, other: TorelliClass) -> TorelliClass:
        return TorelliClass(self.g, tuple(a + b for a, b in zip(self.n, other.n)),
                            self.beta + other.beta)

    def __neg__(self) -> TorelliClass:
        return TorelliClass(self.g, tuple(-a for a in self.n), self.beta)

    def __sub__(self, other: TorelliClass) -> TorelliClass:
        return self + (-other)

    def coordinates(self) -> list[int]:
        """Coordinates on ``canonical_generators(g)``; torsion entries are 0/1."""
        idx = _b2_index(self.g)
        t = [0] * len(idx)
        for m in self.beta.terms:
            t[idx[m]] = 1
        return list(self.n) + t

    def __str__(self):
        labels = _var_labels(self.g)
        parts = []
        for (a, b, c), k in zip(wedge3_triples(self.g), self.n):
            if k:
                parts.append(f"{k:+d} {labels[a]}∧{labels[b]}∧{labels[c]}")
        return f"({' '.join(parts) or '0'}, {self.b3()})"


def wedge3_vector(g: int, *terms: tuple[int, Sequence[str]]) -> list[int]:
    """∧^3 H coordinates of sum c * (u ∧ v ∧ w) given (c, (u, v, w)) label terms."""
    labels = _var_labels(g)
    idx = _triple_index(g)
    out = [0] * comb(2 * g, 3)
    for c, names in terms:
        ids = [labels.index(nm) for nm in names]
        if len(set(ids)) < 3:
            continue
        sign = 1
        for a in range(3):
            for b in range(a + 1, 3):
                if ids[a] > ids[b]:
                    sign = -sign
        out[idx[tuple(sorted(ids))]] += sign * c
    return out


def torelli_class(g: int, names: Sequence[str], b3: str | BElement | None = None,
                  coeff: int = 1) -> TorelliClass:
    """The class (coeff * u∧v∧w, b3); b3 defaults to ūv̄w̄ (or its multiple mod 2).

    ``torelli_class(3, ["x1", "y1", "y2"], "x1 y1 y2 + x1 y1")`` is the
    image of the bounding-pair map T_{c_2} T_{d_2}^{-1}.
    """
    if b3 is None:
        b3 = " ".join(names) if coeff % 2 else "0"
    if isinstance(b3, str):
        b3 = BElement.parse(g, b3)
    return TorelliClass.from_pair(g, wedge3_vector(g, (coeff, names)), b3)


def torsion_class(g: int, beta: str | BElement) -> TorelliClass:
    """The order-2 class (0, beta) with beta in B^2."""
    if isinstance(beta, str):
        beta = BElement.parse(g, beta)
    return TorelliClass(g, (0,) * comb(2 * g, 3), beta)


def canonical_generators(g: int) -> list[TorelliClass]:
    """(e, b_e) for each basis triple e, then (0, β) for each monomial β of degree <= 2."""
    if g < 3:
        raise UnsupportedGenus("the Torelli model is used for g >= 3")
    N = comb(2 * g, 3)
    zero_b = BElement.zero(g)
    free = []
    for k in range(N):
        n = [0] * N
        n[k] = 1
        free.append(TorelliClass(g, tuple(n), zero_b))
    tors = [TorelliClass(g, (0,) * N, BElement(g, frozenset({m}))) for m in b2_monomials(g)]
    return free + tors


class _Action:
    """Cached action data of one symplectic matrix on the model."""

    def __init__(self, s: SpMatrix):
        g = s.g
        self.g = g
        self.w3 = induced_rep(s.m, "wedge3")
        self.var_images = [bar_expand(g, [x % 2 for x in s.m.column(i)]) for i in range(2 * g)]
        self._mono: dict[int, BElement] = {}

    def monomial(self, mask: int) -> BElement:
        out = self._mono.get(mask)
        if out is None:
            out = BElement.one(self.g)
            for i in range(2 * self.g):
                if mask >> i & 1:
                    out = out * self.var_images[i]
            self._mono[mask] = out
        return out

    def algebra(self, b: BElement) -> BElement:
        out = BElement.zero(self.g)
        for m in b.terms:
            out = out + self.monomial(m)
        return out

    def act(self, t: TorelliClass) -> TorelliClass:
        n = self.w3 @ list(t.n)
        b3 = self.algebra(t.b3())
        return TorelliClass.from_pair(self.g, n, b3)


@lru_cache(maxsize=256)
def _action(s: SpMatrix) -> _Action:
    return _Action(s)


def sp_act(s: SpMatrix, t: TorelliClass) -> TorelliClass:
    """Diagonal action: ∧^3 of s on the lattice part, f(v̄) = (s v)‾ on B^3.

    Fiber-product compatibility is re-checked on every call.
    """
    if s.g != t.g:
        raise DimensionMismatch("genus mismatch")
    return _action(s).act(t)


def sp_act_b(s: SpMatrix, b: BElement) -> BElement:
    """Algebra automorphism of B induced by s."""
    return _action(s).algebra(b)


def torelli_action_module(g: int, elements: Sequence[SpMatrix]) -> ActionModule:
    """The model Z^{C(2g,3)} ⊕ (Z/2)^{dim B^2} with the given acting matrices."""
    gens = canonical_generators(g)
    a = comb(2 * g, 3)
    b = len(gens) - a
    actions = []
    for s in elements:
        if s.g != g:
            raise DimensionMismatch("genus mismatch")
        act = _action(s)
        free_img = [act.act(x).coordinates() for x in gens[:a]]
        tors_img = [act.act(x).coordinates() for x in gens[a:]]
        A = IntMatrix.from_columns([c[:a] for c in free_img], rows=a)
        Bm = IntMatrix.from_columns([c[a:] for c in free_img], rows=b)
        if any(any(c[:a]) for c in tors_img):
            raise CompatibilityViolation("a torsion class acquired a lattice part")
        C = IntMatrix.from_columns([c[a:] for c in tors_img], rows=b)
        actions.append((A, Bm, C))
    return ActionModule(a, b, tuple(actions))
