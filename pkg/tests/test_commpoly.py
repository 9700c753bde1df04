import numpy as np
import pytest

from ncalg.commpoly import CommPoly, cp_eval, cp_mul
from ncalg.errors import DomainError, StructuralError
from ncalg.fields import GF, QQ

F7 = GF(7)
a_var, b_var = (0, 0, 0), (0, 1, 1)


def test_product_of_variables():
    p = cp_mul(CommPoly.var(QQ, (1, 0, 0)), CommPoly.var(QQ, (1, 1, 1)))
    assert dict(p.terms) == {(((1, 0, 0), 1), ((1, 1, 1), 1)): 1}


def test_binomial_square():
    a, b = CommPoly.var(QQ, a_var), CommPoly.var(QQ, b_var)
    assert (a + b) ** 2 == a * a + 2 * a * b + b * b
    a2, b2 = CommPoly.var(GF(2), a_var), CommPoly.var(GF(2), b_var)
    assert (a2 + b2) ** 2 == a2 * a2 + b2 * b2


def test_field_mismatch():
    with pytest.raises(StructuralError):
        CommPoly.var(QQ, a_var) * CommPoly.var(F7, a_var)


def test_eval_examples():
    p = CommPoly.var(F7, a_var) + CommPoly.var(F7, (0, 0, 1))
    assert cp_eval(p, {a_var: 2, (0, 0, 1): 3}) == 5
    assert cp_eval(CommPoly.const(F7, 4), {}) == 4
    with pytest.raises(DomainError, match="x0_12"):
        cp_eval(p, {a_var: 1})


def _random(rng, field, vars_):
    terms = {}
    for _ in range(4):
        mono = tuple((vars_[int(i)], int(e)) for i, e in
                     zip(rng.integers(0, len(vars_), 2), rng.integers(1, 3, 2)))
        d = {}
        for v, e in mono:
            d[v] = d.get(v, 0) + e
        terms[tuple(sorted(d.items()))] = int(rng.integers(0, field.p))
    return CommPoly(field, terms)


def test_ring_axioms_and_eval_homomorphism():
    rng = np.random.default_rng(0)
    vars_ = [(0, i, j) for i in range(2) for j in range(2)]
    for _ in range(1000):
        p, q, r = (_random(rng, F7, vars_) for _ in range(3))
        pt = {v: int(rng.integers(0, 7)) for v in vars_}
        assert p * q == q * p
        assert cp_eval(p * q, pt) == F7.mul(cp_eval(p, pt), cp_eval(q, pt))
        assert cp_eval(p + q, pt) == F7.add(cp_eval(p, pt), cp_eval(q, pt))
    for _ in range(50):
        p, q, r = (_random(rng, F7, vars_) for _ in range(3))
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
