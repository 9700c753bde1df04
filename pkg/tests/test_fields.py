from fractions import Fraction

import pytest

from ncalg.errors import DomainError
from ncalg.fields import GF, QQ, parse_field


def test_prime_field_rejects_composite():
    with pytest.raises(DomainError):
        GF(15)


def test_residues_and_fractions():
    F = GF(7)
    assert F(-1) == 6
    assert F(Fraction(1, 2)) == 4
    assert F.mul(F(3), F.inv(3)) == 1
    with pytest.raises(DomainError):
        F(Fraction(1, 7))


def test_rationals_lowest_terms():
    a = QQ(Fraction(6, -4))
    assert a.numerator == -3 and a.denominator == 2


def test_kth_roots():
    assert QQ.kth_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert QQ.kth_root(Fraction(-8), 3) == -2
    assert QQ.kth_root(Fraction(-4), 2) is None
    assert QQ.kth_root(Fraction(2), 2) is None
    F = GF(7)
    assert F.kth_root(2, 2) == 3  # 3^2 = 9 = 2, the other root is 4
    assert F.kth_root(3, 2) is None


def test_parse_field():
    assert parse_field("q") == QQ
    assert parse_field("p:65537") == GF(65537)
    with pytest.raises(DomainError):
        parse_field("r:5")
