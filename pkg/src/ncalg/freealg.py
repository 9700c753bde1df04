"""Words and noncommutative polynomials of the free associative algebra.

A word is a tuple of generator indices; the empty tuple is the identity.
Monomials are compared degree-lexicographically with z0 < z1 < ..., which is
a multiplicative order: lw(a*b) == lw(a) + lw(b).
"""
from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import StructuralError, DomainError
from .fields import Field

Word = tuple
NEG_INF = float("-inf")  # degree of the zero polynomial


def deglex_key(w: Word):
    return (len(w), w)


def word_text(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(f"z{i}" for i in w)


class FreePoly:
    """An element of k<z0, ..., z_{s-1}>, immutable.

    ``terms`` maps words to nonzero field scalars.
    """

    __slots__ = ("field", "nvars", "_terms", "_hash", "_lead")

    def __init__(self, field: Field, nvars: int, terms: Mapping | None = None, *, _clean=False):
        self.field = field
        self.nvars = nvars
        if _clean:
            self._terms = terms
        else:
            clean = {}
            for w, c in (terms or {}).items():
                w = tuple(w)
                if any(not 0 <= i < nvars for i in w):
                    raise StructuralError(f"word {w} uses a generator outside the alphabet of size {nvars}")
                c = field(c)
                if c != 0:
                    clean[w] = c
            self._terms = clean
        self._hash = None
        self._lead = None

    # construction helpers
    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars, {}, _clean=True)

    @classmethod
    def constant(cls, field, nvars, c=1):
        return cls(field, nvars, {(): c})

    @classmethod
    def gen(cls, field, nvars, i):
        if not 0 <= i < nvars:
            raise DomainError(f"generator z{i} outside alphabet of size {nvars}")
        return cls(field, nvars, {(i,): field.one}, _clean=True)

    @classmethod
    def monomial(cls, field, nvars, word, c=1):
        return cls(field, nvars, {tuple(word): c})

    @classmethod
    def gens(cls, field, nvars):
        return [cls.gen(field, nvars, i) for i in range(nvars)]

    def _new(self, terms):
        return FreePoly(self.field, self.nvars, terms, _clean=True)

    def _reduced(self, acc):
        red = self.field.reduce
        out = {}
        for w, c in acc.items():
            c = red(c)
            if c != 0:
                out[w] = c
        return self._new(out)

    def _check(self, other):
        if self.field != other.field or self.nvars != other.nvars:
            raise StructuralError(
                f"operands over {self.field}/{self.nvars} and {other.field}/{other.nvars}")

    def _coerce(self, other):
        if isinstance(other, FreePoly):
            self._check(other)
            return other
        return FreePoly.constant(self.field, self.nvars, other)

    # inspection
    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def coeff(self, w) -> object:
        return self._terms.get(tuple(w), self.field.zero)

    @property
    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(len(w) for w in self._terms)

    @property
    def leading_word(self) -> Word:
        if not self._terms:
            raise DomainError("zero polynomial has no leading word")
        if self._lead is None:
            self._lead = max(self._terms, key=deglex_key)
        return self._lead

    @property
    def leading_coeff(self):
        return self._terms[self.leading_word]

    def constant_term(self):
        return self._terms.get((), self.field.zero)

    def is_constant(self):
        return all(not w for w in self._terms)

    def sorted_terms(self, descending=True):
        return sorted(self._terms.items(), key=lambda t: deglex_key(t[0]), reverse=descending)

    def homogeneous_part(self, d: int) -> "FreePoly":
        if d < 0:
            raise DomainError("degree must be nonnegative")
        return self._new({w: c for w, c in self._terms.items() if len(w) == d})

    def homogeneous_parts(self) -> dict:
        parts: dict = {}
        for w, c in self._terms.items():
            parts.setdefault(len(w), {})[w] = c
        return {d: self._new(t) for d, t in parts.items()}

    def is_homogeneous(self):
        return len({len(w) for w in self._terms}) <= 1

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return self._reduced(acc)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return self._new({w: neg(c) for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = self.field(c)
        if c == 0:
            return self._new({})
        mul = self.field.mul
        return self._new({w: mul(c, a) for w, a in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FreePoly):
            return self.scale(self.field(other))
        self._check(other)
        acc: dict = {}
        get = acc.get
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                acc[w] = get(w, 0) + c1 * c2
        return self._reduced(acc)

    def __rmul__(self, other):
        return self.scale(self.field(other))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result = FreePoly.constant(self.field, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return (self.field == other.field and self.nvars == other.nvars
                    and self._terms == other._terms)
        if isinstance(other, int):
            return self == FreePoly.constant(self.field, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self._terms.items())))
        return self._hash

    # text
    def to_text(self) -> str:
        """Canonical text: deglex-descending ``coeff*z0 z1`` terms."""
        if not self._terms:
            return "0"
        f = self.field
        out = []
        for w, c in self.sorted_terms():
            neg = f.is_negative(c)
            mag = f.neg(c) if neg else c
            if not w:
                body = f.to_text(mag)
            elif mag == 1:
                body = word_text(w)
            else:
                body = f"{f.to_text(mag)}*{word_text(w)}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    __str__ = to_text

    def __repr__(self):
        return f"FreePoly({self.to_text()!r}, {self.field!r}, s={self.nvars})"


def nc_mul(a: FreePoly, b: FreePoly) -> FreePoly:
    return a * b


def commutator(a: FreePoly, b: FreePoly) -> FreePoly:
    """ab - ba."""
    a._check(b)
    acc: dict = {}
    get = acc.get
    for w1, c1 in a._terms.items():
        for w2, c2 in b._terms.items():
            p = c1 * c2
            w = w1 + w2
            acc[w] = get(w, 0) + p
            w = w2 + w1
            acc[w] = get(w, 0) - p
    return a._reduced(acc)


def homogeneous_part(f: FreePoly, d: int) -> FreePoly:
    return f.homogeneous_part(d)


def substitute(f: FreePoly, images: Sequence[FreePoly]) -> FreePoly:
    """Image of ``f`` under the endomorphism z_i -> images[i]."""
    images = list(images)
    if len(images) != f.nvars:
        raise StructuralError(f"expected {f.nvars} images, got {len(images)}")
    if not images:
        return f
    field, nvars = images[0].field, images[0].nvars
    for g in images:
        if g.field != field or g.nvars != nvars:
            raise StructuralError("images must share one field and alphabet")
    if field != f.field:
        raise StructuralError("images live over a different field than f")
    one = FreePoly.constant(field, nvars)
    cache = {(): one}

    def prod(w):
        r = cache.get(w)
        if r is None:
            r = prod(w[:-1]) * images[w[-1]]
            cache[w] = r
        return r

    acc: dict = {}
    for w, c in f._terms.items():
        for w2, c2 in prod(w)._terms.items():
            acc[w2] = acc.get(w2, 0) + c * c2
    return one._reduced(acc)


def standard_polynomial(field: Field, m: int, nvars: int | None = None) -> FreePoly:
    """S_m = sum over permutations of sgn(sigma) z_sigma(0) ... z_sigma(m-1)."""
    from itertools import permutations

    nvars = m if nvars is None else nvars
    terms = {}
    for perm in permutations(range(m)):
        inv = sum(1 for i in range(m) for j in range(i + 1, m) if perm[i] > perm[j])
        terms[perm] = -1 if inv % 2 else 1
    return FreePoly(field, nvars, terms)


def random_freepoly(field: Field, nvars: int, max_degree: int, rng, nterms: int = 4,
                    min_degree: int = 0) -> FreePoly:
    """Random polynomial with up to ``nterms`` terms; ``rng`` is a numpy Generator."""
    terms = {}
    for _ in range(nterms):
        d = int(rng.integers(min_degree, max_degree + 1))
        w = tuple(int(i) for i in rng.integers(0, nvars, size=d))
        terms[w] = field.random(rng)
    return FreePoly(field, nvars, terms)


def words_of_length(nvars: int, d: int) -> Iterable[Word]:
    """All words of length d in lexicographic (z0 < z1 < ...) order."""
    from itertools import product

    return product(range(nvars), repeat=d)


def words_up_to(nvars: int, d: int) -> list:
    """All words of length <= d in ascending deglex order."""
    out = []
    for k in range(d + 1):
        out.extend(words_of_length(nvars, k))
    return out
