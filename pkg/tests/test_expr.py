from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ncalg.errors import DomainError
from ncalg.expr import (Gen, Num, ParseError, Power, Product, Sum, lower, parse_expr, parse_poly,
                        unparse)
from ncalg.fields import GF, QQ
from ncalg.freealg import FreePoly, commutator, random_freepoly, standard_polynomial

x, y = FreePoly.gens(QQ, 2)


def test_examples():
    e = parse_expr("x*y - y*x")
    assert e == Sum(((1, Product((Gen(0), Gen(1)))), (-1, Product((Gen(1), Gen(0))))))
    assert lower(e, QQ, 2) == commutator(x, y)
    e = parse_expr("(x+y)^3")
    assert isinstance(e, Power) and e.exp == 3 and isinstance(e.base, Sum)
    assert parse_poly("(x+y)^2", QQ) == x * x + x * y + y * x + y * y
    assert parse_poly("x*y + y*x", QQ) == x * y + y * x
    assert parse_poly("2*(x+y)", GF(2)).is_zero()
    assert parse_poly("z0 z1", QQ) == x * y
    assert parse_poly("3/4 z2", QQ).nvars == 3
    assert parse_poly("S4", QQ) == standard_polynomial(QQ, 4)


def test_inverse_is_syntax_error():
    with pytest.raises(ParseError) as err:
        parse_expr("x^(-1)")
    assert (err.value.line, err.value.col) == (1, 3)
    assert "natural number" in err.value.expected


@pytest.mark.parametrize("text,line,col", [
    ("x +", 1, 4),
    ("x\n  + * y", 2, 5),
    ("(x + y", 1, 7),
    ("x $ y", 1, 3),
    ("x)", 1, 2),
])
def test_error_positions(text, line, col):
    with pytest.raises(ParseError) as err:
        parse_expr(text)
    assert (err.value.line, err.value.col) == (line, col)


def test_semantic_errors():
    with pytest.raises(ParseError, match="unknown generator"):
        parse_expr("z2", 2)
    with pytest.raises(ParseError, match="exponent overflow"):
        parse_expr("x^100000")
    with pytest.raises(ParseError):
        parse_expr("1/0")
    with pytest.raises(DomainError):
        lower(parse_expr("1/2 x"), GF(2), 2)


def test_lower_is_ring_homomorphism():
    rng = np.random.default_rng(0)
    F = GF(101)
    for _ in range(100):
        a, b = (random_freepoly(F, 2, 2, rng, nterms=3) for _ in range(2))
        ta, tb = a.to_text(), b.to_text()
        assert parse_poly(f"({ta})*({tb})", F) == a * b
        assert parse_poly(f"({ta}) - ({tb})", F) == a - b
        assert parse_poly(f"({ta})^2", F) == a * a


def asts(depth=3):
    leaves = st.one_of(
        st.builds(Gen, st.integers(0, 2)),
        st.builds(Num, st.fractions(min_value=0, max_value=50, max_denominator=7)),
    )
    return st.recursive(
        leaves,
        lambda kids: st.one_of(
            st.builds(Power, kids, st.integers(0, 3)),
            st.builds(lambda fs: Product(tuple(fs)), st.lists(kids, min_size=2, max_size=3)),
            st.builds(lambda ts: Sum(tuple(ts)),
                      st.lists(st.tuples(st.sampled_from([1, -1]), kids), min_size=1, max_size=3)),
        ),
        max_leaves=8,
    )


@settings(max_examples=200, deadline=None)
@given(asts())
def test_roundtrip_random_asts(e):
    text = unparse(e)
    e2 = parse_expr(text)
    assert unparse(parse_expr(unparse(e2))) == unparse(e2)
    assert parse_expr(unparse(e2)) == e2
    assert lower(e2, QQ, 3) == lower(e, QQ, 3)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_canonical_text_roundtrip(seed):
    rng = np.random.default_rng(seed)
    for F in (QQ, GF(7)):
        f = random_freepoly(F, 3, 3, rng, nterms=4)
        assert parse_poly(f.to_text(), F, 3) == f
