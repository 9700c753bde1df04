"""Sparse commutative polynomials in the generic-matrix indeterminates.

A variable is a triple ``(nu, i, j)`` (all 0-based) standing for the (i, j)
entry of the nu-th generic matrix.  A monomial is a sorted tuple of
``(variable, exponent)`` pairs with positive exponents.
"""
from __future__ import annotations

from types import MappingProxyType
from typing import Mapping

from .errors import DomainError, StructuralError
from .fields import Field

ONE_MONO = ()


def var_text(v) -> str:
    nu, i, j = v
    return f"x{nu}_{i + 1}{j + 1}"


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class CommPoly:
    __slots__ = ("field", "_terms")

    def __init__(self, field: Field, terms: Mapping | None = None, *, _clean=False):
        self.field = field
        if _clean:
            self._terms = terms
        else:
            clean = {}
            for m, c in (terms or {}).items():
                m = tuple(sorted((tuple(v), e) for v, e in m if e))
                if any(e < 0 for _, e in m):
                    raise DomainError("negative exponent")
                c = field.reduce(clean.get(m, 0) + field(c))
                if c:
                    clean[m] = c
                else:
                    clean.pop(m, None)
            self._terms = clean

    @classmethod
    def var(cls, field, v):
        return cls(field, {((tuple(v), 1),): field.one}, _clean=True)

    @classmethod
    def const(cls, field, c):
        c = field(c)
        return cls(field, {ONE_MONO: c} if c else {}, _clean=True)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, CommPoly):
            if other.field != self.field:
                raise StructuralError(f"field mismatch: {self.field} vs {other.field}")
            return other
        return CommPoly.const(self.field, other)

    def _reduced(self, acc):
        red = self.field.reduce
        out = {}
        for m, c in acc.items():
            c = red(c)
            if c != 0:
                out[m] = c
        return CommPoly(self.field, out, _clean=True)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return self._reduced(acc)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return CommPoly(self.field, {m: neg(c) for m, c in self._terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        acc: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return self._reduced(acc)

    __rmul__ = __mul__

    def __pow__(self, e):
        r = CommPoly.const(self.field, 1)
        for _ in range(e):
            r = r * self
        return r

    def __eq__(self, other):
        if isinstance(other, CommPoly):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, int):
            return self == CommPoly.const(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def eval(self, point: Mapping):
        """Evaluate at ``point``: variable triple -> scalar."""
        f = self.field
        acc = 0
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                try:
                    x = point[v]
                except KeyError:
                    raise DomainError(f"no value assigned to {var_text(v)}") from None
                t = t * (x ** e if e > 1 else x)
            acc += t
        return f.reduce(acc)

    def to_text(self):
        if not self._terms:
            return "0"
        f = self.field
        out = ""
        for m, c in sorted(self._terms.items(), key=lambda t: (-sum(e for _, e in t[0]), t[0])):
            mono = "*".join(var_text(v) if e == 1 else f"{var_text(v)}^{e}" for v, e in m)
            neg = f.is_negative(c)
            mag = f.neg(c) if neg else c
            body = f.to_text(mag) if not mono else (mono if mag == 1 else f"{f.to_text(mag)}*{mono}")
            if not out:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    __str__ = to_text

    def __repr__(self):
        return f"CommPoly({self.to_text()})"


def cp_mul(a: CommPoly, b: CommPoly) -> CommPoly:
    return a * b


def cp_eval(p: CommPoly, point: Mapping):
    return p.eval(point)


class CommPolyRing:
    """Ring interface over CommPoly, for the generic algorithms."""

    def __init__(self, field: Field):
        self.field = field
        self.zero = CommPoly(field, {}, _clean=True)
        self.one = CommPoly.const(field, 1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a.is_zero()

    def from_int(self, i):
        return CommPoly.const(self.field, i)

    def to_text(self, a):
        return a.to_text()

    def to_json(self, a):
        return a.to_text()

    def __eq__(self, other):
        return isinstance(other, CommPolyRing) and other.field == self.field

    def __hash__(self):
        return hash(("CommPolyRing", self.field))
