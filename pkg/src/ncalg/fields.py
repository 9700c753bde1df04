"""Exact ground fields.

Scalars are stored raw: ``Fraction`` for the rationals and ``int`` residues in
``[0, p)`` for a prime field.  Both support Python's ``+ - *`` directly, so hot
loops accumulate with native operators and call :meth:`reduce` once at the end.
Division always goes through the field object.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import isprime
from sympy.ntheory.residue_ntheory import nthroot_mod
from sympy import integer_nthroot

from .errors import DomainError

MERSENNE31 = 2**31 - 1


class Field:
    zero = 0
    one = 1

    def __call__(self, x):
        raise NotImplementedError

    # ring interface used by generic algorithms (Berkowitz, UniPoly, ...)
    def add(self, a, b):
        return self.reduce(a + b)

    def sub(self, a, b):
        return self.reduce(a - b)

    def mul(self, a, b):
        return self.reduce(a * b)

    def neg(self, a):
        return self.reduce(-a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def from_int(self, i: int):
        return self(i)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r


class RationalField(Field):
    """The field of rational numbers, exact via ``fractions.Fraction``."""

    characteristic = 0
    name = "q"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, str):
            return Fraction(x)
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot convert {x!r} to a rational")

    def reduce(self, a):
        return a if isinstance(a, Fraction) else Fraction(a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def kth_root(self, a, k):
        """Rational k-th root with the sign of ``a`` kept, or None."""
        a = Fraction(a)
        if a == 0:
            return Fraction(0)
        if a < 0:
            if k % 2 == 0:
                return None
            r = self.kth_root(-a, k)
            return None if r is None else -r
        num, exact_n = integer_nthroot(a.numerator, k)
        den, exact_d = integer_nthroot(a.denominator, k)
        if not (exact_n and exact_d):
            return None
        return Fraction(int(num), int(den))

    def random(self, rng, bound=9):
        return Fraction(int(rng.integers(-bound, bound + 1)))

    def to_json(self, a):
        a = Fraction(a)
        return a.numerator if a.denominator == 1 else str(a)

    def to_text(self, a):
        return str(Fraction(a))

    def is_negative(self, a):
        return a < 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """The prime field of order ``p``; elements are residues in ``[0, p)``."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or not isprime(p):
            raise DomainError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"p:{p}"

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DomainError(f"{x} is not representable modulo {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, int):
            return x % self.p
        raise TypeError(f"cannot convert {x!r} to GF({self.p})")

    def reduce(self, a):
        return a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        return pow(a, e, self.p)

    def kth_root(self, a, k):
        """Least nonnegative residue whose k-th power is ``a``, or None."""
        a %= self.p
        if a == 0:
            return 0
        if k == 1:
            return a
        roots = nthroot_mod(a, k, self.p, all_roots=True)
        if not roots:
            return None
        return min(int(r) for r in roots)

    def random(self, rng):
        return int(rng.integers(0, self.p))

    def to_json(self, a):
        return int(a)

    def to_text(self, a):
        return str(a)

    def is_negative(self, a):
        # symmetric representative for display only
        return a > self.p // 2

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """Parse the CLI spelling ``q`` or ``p:<prime>``."""
    text = text.strip().lower()
    if text in ("q", "qq"):
        return QQ
    if text.startswith("p:"):
        try:
            p = int(text[2:])
        except ValueError:
            raise DomainError(f"bad field {text!r}") from None
        return GF(p)
    raise DomainError(f"bad field {text!r}; expected 'q' or 'p:<prime>'")
