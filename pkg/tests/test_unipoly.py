import itertools

import numpy as np
import pytest

from ncalg.fields import GF, QQ
from ncalg.oracles import brute_irreducible
from ncalg.unipoly import UniPoly, irreducible_fq


def P(field, *coeffs):
    return UniPoly(field, list(coeffs))


def test_irreducible_examples():
    F3, F2 = GF(3), GF(2)
    assert irreducible_fq(P(F3, 1, 0, 1)) and brute_irreducible(P(F3, 1, 0, 1))
    assert not irreducible_fq(P(F3, -1 % 3, 0, 1))
    assert irreducible_fq(P(F2, 1, 1, 1)) and brute_irreducible(P(F2, 1, 1, 1))
    # exhaustively, x^2 + x + 1 is the only irreducible quadratic over F2
    quads = [c for c in itertools.product(range(2), repeat=2) if irreducible_fq(P(F2, *c, 1))]
    assert quads == [(1, 1)]


@pytest.mark.parametrize("q,deg", [(2, 4), (3, 3), (5, 2), (5, 3)])
def test_rabin_matches_brute_force(q, deg):
    F = GF(q)
    for tail in itertools.product(range(q), repeat=deg):
        p = UniPoly(F, list(tail) + [1])
        assert irreducible_fq(p) == brute_irreducible(p)


def test_divmod_and_gcd():
    F = GF(7)
    a = UniPoly.from_roots(F, [1, 2, 3])
    b = UniPoly.from_roots(F, [2, 5])
    q, r = divmod(a, b)
    assert q * b + r == a and r.degree < b.degree
    assert a.gcd(b) == UniPoly.from_roots(F, [2])


def test_squarefree():
    F = GF(7)
    assert UniPoly.from_roots(F, [1, 2]).is_squarefree()
    assert not UniPoly.from_roots(F, [1, 1]).is_squarefree()
    assert not UniPoly(F, [0] * 7 + [1]).is_squarefree()  # t^7, derivative vanishes


def test_eval_and_pow():
    p = UniPoly(QQ, [1, 2, 3])
    assert p(QQ(2)) == 17
    assert (p ** 2)(QQ(2)) == 289
