"""Expression syntax for free polynomials.

Grammar::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*        # juxtaposition multiplies
    factor := atom ['^' nat]
    atom   := rational | ident | '(' poly ')'
    ident  := 'x' | 'y' | 'z' | 'z' nat | 'S4'

``x``, ``y``, ``z`` are aliases for z0, z1, z2; ``S4`` is the standard
polynomial of degree 4 in z0..z3.  There are no inverses: ``x^(-1)`` is a
syntax error.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NcalgError
from .fields import Field
from .freealg import FreePoly, standard_polynomial

MAX_EXPONENT = 1000
ALIASES = {"x": 0, "y": 1, "z": 2}


class ParseError(NcalgError):
    def __init__(self, message, line, col, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(expected))
        exp = f"; expected one of: {', '.join(self.expected)}" if self.expected else ""
        super().__init__(f"{line}:{col}: {message}{exp}")


# AST

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Macro:
    name: str


@dataclass(frozen=True)
class Power:
    base: object
    exp: int


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, expr), sign in {1, -1}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str):
    toks = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start = col
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(Token("NUM", text[i:j], line, start))
        elif text.startswith("S4", i):
            j = i + 2
            toks.append(Token("MACRO", "S4", line, start))
        elif ch == "z" and i + 1 < len(text) and text[i + 1].isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(Token("GEN", text[i:j], line, start))
        elif ch in ALIASES:
            j = i + 1
            toks.append(Token("GEN", ch, line, start))
        elif ch in "+-*^()/":
            j = i + 1
            toks.append(Token(ch, ch, line, start))
        else:
            raise ParseError(f"unexpected character {ch!r}", line, start)
        col += j - i
        i = j
    toks.append(Token("EOF", "", line, col))
    return toks


_ATOM_START = {"NUM", "GEN", "MACRO", "("}


class _Parser:
    def __init__(self, text, nvars):
        self.toks = tokenize(text)
        self.pos = 0
        self.nvars = nvars

    @property
    def tok(self):
        return self.toks[self.pos]

    def advance(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, msg, expected=()):
        t = self.tok
        raise ParseError(msg, t.line, t.col, expected)

    def expect(self, kind, expected_desc=None):
        if self.tok.kind != kind:
            what = self.tok.text or "end of input"
            self.fail(f"unexpected {what!r}", [expected_desc or kind])
        return self.advance()

    def parse(self):
        e = self.poly()
        if self.tok.kind != "EOF":
            self.fail(f"unexpected {self.tok.text!r}", ["+", "-", "*", "^", "end of input"])
        return e

    def poly(self):
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
        terms = [(sign, self.term())]
        while self.tok.kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while True:
            if self.tok.kind == "*":
                self.advance()
                factors.append(self.factor())
            elif self.tok.kind in _ATOM_START:
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        base = self.atom()
        if self.tok.kind == "^":
            self.advance()
            t = self.expect("NUM", "natural number")
            e = int(t.text)
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent overflow: {e} > {MAX_EXPONENT}", t.line, t.col)
            return Power(base, e)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "NUM":
            self.advance()
            value = Fraction(int(t.text))
            if self.tok.kind == "/":
                self.advance()
                d = self.expect("NUM", "natural number")
                if int(d.text) == 0:
                    raise ParseError("zero denominator", d.line, d.col)
                value = Fraction(int(t.text), int(d.text))
            return Num(value)
        if t.kind == "GEN":
            self.advance()
            idx = ALIASES[t.text] if t.text in ALIASES else int(t.text[1:])
            if self.nvars is not None and idx >= self.nvars:
                raise ParseError(f"unknown generator {t.text} (alphabet size {self.nvars})",
                                 t.line, t.col)
            return Gen(idx)
        if t.kind == "MACRO":
            self.advance()
            if self.nvars is not None and self.nvars < 4:
                raise ParseError(f"S4 needs 4 generators, alphabet size is {self.nvars}",
                                 t.line, t.col)
            return Macro(t.text)
        if t.kind == "(":
            self.advance()
            e = self.poly()
            self.expect(")", ")")
            return e
        what = t.text or "end of input"
        self.fail(f"unexpected {what!r}", ["number", "generator", "S4", "("])


def parse_expr(text: str, nvars: int | None = None):
    """Parse ``text``; ``nvars`` bounds generator indices (None: unbounded)."""
    return _Parser(text, nvars).parse()


def max_generator(e) -> int:
    """Largest generator index referenced by e, or -1."""
    if isinstance(e, Gen):
        return e.index
    if isinstance(e, Macro):
        return 3
    if isinstance(e, Power):
        return max_generator(e.base)
    if isinstance(e, Product):
        return max((max_generator(x) for x in e.factors), default=-1)
    if isinstance(e, Sum):
        return max((max_generator(x) for _, x in e.terms), default=-1)
    return -1


def lower(e, field: Field, nvars: int) -> FreePoly:
    """Expand an expression into a canonical FreePoly."""
    if isinstance(e, Num):
        return FreePoly.constant(field, nvars, field(e.value))
    if isinstance(e, Gen):
        return FreePoly.gen(field, nvars, e.index)
    if isinstance(e, Macro):
        return standard_polynomial(field, 4, nvars)
    if isinstance(e, Power):
        return lower(e.base, field, nvars) ** e.exp
    if isinstance(e, Product):
        acc = FreePoly.constant(field, nvars)
        for x in e.factors:
            acc = acc * lower(x, field, nvars)
        return acc
    if isinstance(e, Sum):
        acc = FreePoly.zero(field, nvars)
        for sign, x in e.terms:
            t = lower(x, field, nvars)
            acc = acc + t if sign > 0 else acc - t
        return acc
    raise TypeError(f"not an expression node: {e!r}")


def parse_poly(text: str, field: Field, nvars: int | None = None) -> FreePoly:
    """Parse and lower; with ``nvars`` None the alphabet is inferred (at least 2)."""
    e = parse_expr(text, nvars)
    if nvars is None:
        nvars = max(2, max_generator(e) + 1)
    return lower(e, field, nvars)


def unparse(e) -> str:
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Gen):
        return f"z{e.index}"
    if isinstance(e, Macro):
        return e.name
    if isinstance(e, Power):
        b = unparse(e.base)
        if not isinstance(e.base, (Gen, Macro)) and not (isinstance(e.base, Num) and e.base.value.denominator == 1):
            b = f"({b})"
        return f"{b}^{e.exp}"
    if isinstance(e, Product):
        return "*".join(f"({unparse(x)})" if isinstance(x, (Sum, Product)) else unparse(x)
                        for x in e.factors)
    if isinstance(e, Sum):
        out = ""
        for i, (sign, x) in enumerate(e.terms):
            body = unparse(x)
            if isinstance(x, Sum):
                body = f"({body})"
            if i == 0:
                out = ("-" if sign < 0 else "") + body
            else:
                out += (" - " if sign < 0 else " + ") + body
        return out
    raise TypeError(f"not an expression node: {e!r}")
