"""Infinite periodic words and Bergman's quotient onto k[v].

Generators are totally ordered by an explicit ``order``: a sequence listing
generator indices from smallest to largest (``None`` means z0 < z1 < ...).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

from .errors import DomainError, PreconditionError
from .freealg import FreePoly, Word, word_text
from .unipoly import UniPoly


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class RzClass(enum.Enum):
    UNIT = "unit"
    IN_IDEAL = "in_ideal"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


def primitive_root(w: Sequence) -> tuple:
    """Return ``(root, exponent)`` with root primitive and root**exponent == w."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise DomainError("the empty word has no primitive root")
    # failure function; smallest period is n - border
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    period = n - fail[-1]
    if n % period:
        period = n
    return w[:period], n // period


def is_primitive(w: Sequence) -> bool:
    return primitive_root(w)[1] == 1


def _translate(w, order):
    if order is None:
        return tuple(w)
    rank = {g: r for r, g in enumerate(order)}
    return tuple(rank[g] for g in w)


def inf_cmp(u: Sequence, v: Sequence, order: Sequence | None = None) -> Cmp:
    """Compare u^inf with v^inf lexicographically.

    Two periodic words agreeing on a prefix of length |u| + |v| are equal
    (Fine and Wilf), so that prefix decides.
    """
    if not u or not v:
        raise DomainError("inf_cmp needs nonempty words")
    u = _translate(u, order)
    v = _translate(v, order)
    n = len(u) + len(v)
    pu = (u * (n // len(u) + 1))[:n]
    pv = (v * (n // len(v) + 1))[:n]
    if pu < pv:
        return Cmp.LT
    if pu > pv:
        return Cmp.GT
    return Cmp.EQ


@dataclass(frozen=True)
class OmegaClass:
    """The infinite word u^inf, stored by the primitive root of u."""

    primitive: Word
    order: tuple | None = None

    def __post_init__(self):
        root, e = primitive_root(self.primitive)
        if e != 1:
            raise DomainError(f"{self.primitive} is a proper power of {root}")

    @classmethod
    def of(cls, w: Sequence, order: Sequence | None = None) -> "OmegaClass":
        return cls(primitive_root(w)[0], None if order is None else tuple(order))

    def to_text(self) -> str:
        return f"({word_text(self.primitive)})^inf"

    __str__ = to_text


def in_Rz(w: Sequence, z: OmegaClass) -> RzClass:
    """Where the word w sits relative to R_(z) and I_(z)."""
    w = tuple(w)
    if not w:
        return RzClass.UNIT
    c = inf_cmp(w, z.primitive, z.order)
    if c is Cmp.LT:
        return RzClass.IN_IDEAL
    if c is Cmp.EQ:
        return RzClass.ON_BOUNDARY
    return RzClass.OUTSIDE


def bergman_quotient(f: FreePoly, z: OmegaClass) -> UniPoly:
    """Image of f under R_(z) -> R_(z)/I_(z) = k[v], with root(z)^m -> v^m."""
    field = f.field
    coeffs: dict = {}
    plen = len(z.primitive)
    for w, c in f:
        cls = in_Rz(w, z)
        if cls is RzClass.OUTSIDE:
            raise PreconditionError(f"word {word_text(w)} lies outside R_{z.to_text()}")
        if cls is RzClass.IN_IDEAL:
            continue
        m = len(w) // plen
        coeffs[m] = field.add(coeffs.get(m, field.zero), c)
    if not coeffs:
        return UniPoly(field, [])
    return UniPoly(field, [coeffs.get(i, field.zero) for i in range(max(coeffs) + 1)])


def max_class(words: Iterable[Sequence], order: Sequence | None = None) -> OmegaClass:
    words = [tuple(w) for w in words if w]
    if not words:
        raise DomainError("no nonempty word to take a maximum over")
    key = cmp_to_key(lambda a, b: int(inf_cmp(a, b, order)))
    return OmegaClass.of(max(words, key=key), order)


def bergman_projection(G: Sequence[FreePoly], order: Sequence | None = None):
    """Map the algebra generated by G homomorphically onto a nonconstant k[v].

    z is the largest u^inf over all nonidentity support words of G, so G lies
    in R_(z) and every generator is sent through the quotient by I_(z).
    """
    G = list(G)
    support = [w for g in G for w, _ in g if w]
    if not support:
        raise DomainError("all generators are constant")
    z = max_class(support, order)
    images = [bergman_quotient(g, z) for g in G]
    return z, images
