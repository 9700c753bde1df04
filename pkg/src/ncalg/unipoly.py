"""Univariate polynomials over a field or a commutative coefficient ring.

Coefficients are stored low degree first.  Anything exposing the ring
interface of :class:`ncalg.fields.Field` (zero, one, add, sub, mul, neg,
is_zero) can serve as the coefficient ring; division-based operations
(divmod, gcd, irreducibility) additionally need ``inv``.
"""
from __future__ import annotations

from typing import Sequence

from sympy import factorint

from .errors import DomainError


class UniPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Sequence = ()):
        self.ring = ring
        cs = list(coeffs)
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, ring, e, c=None):
        c = ring.one if c is None else c
        return cls(ring, [ring.zero] * e + [c])

    @classmethod
    def from_roots(cls, ring, roots):
        p = cls(ring, [ring.one])
        for r in roots:
            p = p * cls(ring, [ring.neg(r), ring.one])
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        r = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(r, [r.add(self[i], other[i]) for i in range(n)])

    def __neg__(self):
        return UniPoly(self.ring, [self.ring.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        r = self.ring
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(r, [r.sub(self[i], other[i]) for i in range(n)])

    def __mul__(self, other):
        r = self.ring
        if not isinstance(other, UniPoly):
            return UniPoly(r, [r.mul(c, other) for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly(r, [])
        out = [r.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if r.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = r.add(out[i + j], r.mul(a, b))
        return UniPoly(r, out)

    def __pow__(self, e):
        result = UniPoly(self.ring, [self.ring.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element."""
        r = self.ring
        acc = r.zero
        for c in reversed(self.coeffs):
            acc = r.add(r.mul(acc, x), c)
        return acc

    def derivative(self):
        r = self.ring
        return UniPoly(r, [r.mul(c, r.from_int(i)) for i, c in enumerate(self.coeffs)][1:])

    def is_monic(self):
        return bool(self.coeffs) and self.lead == self.ring.one

    # field-only operations
    def monic(self):
        if not self.coeffs:
            return self
        inv = self.ring.inv(self.lead)
        return self * inv

    def __divmod__(self, other):
        r = self.ring
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(r, []), self
        quot = [r.zero] * (dq + 1)
        inv = r.inv(other.lead)
        m = len(other.coeffs)
        for k in range(dq, -1, -1):
            c = r.mul(rem[k + m - 1], inv)
            quot[k] = c
            if r.is_zero(c):
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = r.sub(rem[k + j], r.mul(c, b))
        return UniPoly(r, quot), UniPoly(r, rem[: m - 1])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, modulus: "UniPoly"):
        result = UniPoly(self.ring, [self.ring.one]) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def is_squarefree(self):
        """gcd(p, p') == 1; over F_q also requires p' != 0."""
        d = self.derivative()
        if not d:
            return self.degree <= 0
        return self.gcd(d).degree == 0

    def to_json(self):
        to_json = getattr(self.ring, "to_json", None)
        if to_json is None:
            return [str(c) for c in self.coeffs]
        return [to_json(c) for c in self.coeffs]

    def to_text(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if self.ring.is_zero(c):
                continue
            txt = str(c) if not hasattr(self.ring, "to_text") else self.ring.to_text(c)
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            if not mono:
                parts.append(f"({txt})" if " " in txt else txt)
            elif c == self.ring.one:
                parts.append(mono)
            elif txt == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({txt})*{mono}" if " " in txt else f"{txt}*{mono}")
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out

    def __repr__(self):
        return f"UniPoly({self.to_text()})"


def irreducible_fq(p: UniPoly) -> bool:
    """Rabin's irreducibility test over a prime field.

    p of degree n is irreducible iff t^(q^n) = t mod p and, for every prime r
    dividing n, gcd(t^(q^(n/r)) - t, p) = 1.
    """
    field = p.ring
    q = getattr(field, "p", None)
    if q is None:
        raise DomainError("irreducibility test needs a prime field")
    if p.degree < 1:
        raise DomainError("irreducibility is defined for degree >= 1")
    p = p.monic()
    n = p.degree
    if n == 1:
        return True
    t = UniPoly(field, [0, 1])

    def frob_iter(k):
        x = t
        for _ in range(k):
            x = x.powmod(q, p)
        return x

    if frob_iter(n) != t % p:
        return False
    for r in factorint(n):
        h = frob_iter(n // r) - t
        if p.gcd(h).degree != 0:
            return False
    return True
