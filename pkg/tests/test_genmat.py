import numpy as np
import pytest

from ncalg.commpoly import CommPoly
from ncalg.errors import DomainError, PreconditionError
from ncalg.fields import GF, QQ, MERSENNE31
from ncalg.freealg import FreePoly, commutator, random_freepoly, standard_polynomial, substitute
from ncalg.genmat import (ConcreteMatrix, charpoly, evaluate, generic_generators, minpoly, pi_map,
                          pi_test, specialize, spectral_probe, ut_eval, word_trace)
from ncalg.linalg import det
from ncalg.oracles import (cofactor_charpoly, exhaustive_identity_check, strict_upper_generic,
                           symbolic_eval)
from ncalg.unipoly import UniPoly

FM = GF(MERSENNE31)
F7 = GF(7)


def random_point(rng, variables, q):
    return {v: int(rng.integers(0, q)) for v in variables}


def test_generic_generators():
    X = generic_generators(1, 2)
    assert X[0][0, 0] != X[1][0, 0]
    (Y,) = generic_generators(2, 1)
    assert len(Y.variables()) == 4
    assert len(set().union(*(M.variables() for M in generic_generators(3, 2)))) == 18
    with pytest.raises(DomainError):
        generic_generators(0, 1)


def test_pi_map_basics():
    x, y = FreePoly.gens(FM, 2)
    X = generic_generators(2, 2, FM)
    assert pi_map(x, 2) == X[0]
    assert pi_map(commutator(x, y), 1).is_zero()
    assert not pi_map(commutator(x, y), 2).is_zero()


def test_pi_map_homomorphism():
    rng = np.random.default_rng(0)
    for _ in range(10):
        f = random_freepoly(FM, 2, 2, rng, nterms=3)
        g = random_freepoly(FM, 2, 2, rng, nterms=3)
        assert pi_map(f * g, 2) == pi_map(f, 2) * pi_map(g, 2)
        assert pi_map(f + g, 2) == pi_map(f, 2) + pi_map(g, 2)
    one = FreePoly.constant(FM, 2)
    assert pi_map(one, 2) == pi_map(one, 2) * pi_map(one, 2)


def test_specialize_matches_evaluation():
    rng = np.random.default_rng(1)
    X = generic_generators(2, 2, FM)
    variables = X[0].variables() | X[1].variables()
    x, y = FreePoly.gens(FM, 2)
    for _ in range(50):
        pt = random_point(rng, variables, MERSENNE31)
        A, B = specialize(X[0], pt), specialize(X[1], pt)
        assert A == ConcreteMatrix(FM, [[pt[(0, i, j)] for j in range(2)] for i in range(2)])
        assert specialize(pi_map(x * y, 2), pt) == A * B
        f = random_freepoly(FM, 2, 3, rng)
        assert specialize(pi_map(f, 2), pt) == evaluate(f, [A, B])
    assert specialize(pi_map(FreePoly.zero(FM, 2), 2), {}).is_zero()


def test_pi_test_examples():
    x, y = FreePoly.gens(FM, 2)
    r = pi_test(commutator(x, y), 2, samples=5, seed=1)
    assert r.verdict == "NonIdentity"
    assert not evaluate(commutator(x, y), r.witness).is_zero()
    assert pi_test(commutator(x, y), 1).is_identity
    S4 = standard_polynomial(FM, 4)
    r = pi_test(S4, 2, samples=50, seed=7)
    assert r.is_identity and r.confidence_bound <= (4 / MERSENNE31) ** 50
    assert exhaustive_identity_check(standard_polynomial(GF(2), 4), 2, 2)
    assert not pi_test(S4, 3, samples=10).is_identity
    with pytest.raises(DomainError):
        pi_test(S4, 2, q=MERSENNE31 - 1)


def test_pi_test_json_schema():
    x, y = FreePoly.gens(FM, 2)
    out = pi_test(commutator(x, y), 2, samples=3, seed=9).to_json()
    assert {"verdict", "samples", "seed", "q", "confidence_bound", "witness"} <= set(out)
    assert len(out["witness"]) == 2 and len(out["witness"][0]) == 2


def test_pi_test_large_modulus():
    q = 2**61 - 1
    F = GF(q)
    x, y = FreePoly.gens(F, 2)
    assert not pi_test(commutator(x, y), 3, samples=2, q=q).is_identity
    assert pi_test(standard_polynomial(F, 4), 2, samples=3, q=q).is_identity


def test_amitsur_domain_property():
    rng = np.random.default_rng(2)
    for _ in range(100):
        f = random_freepoly(FM, 2, 2, rng, nterms=2, min_degree=1)
        g = random_freepoly(FM, 2, 2, rng, nterms=2, min_degree=1)
        if f and g:
            assert not (pi_map(f, 2) * pi_map(g, 2)).is_zero()


def test_charpoly_examples():
    (X,) = generic_generators(2, 1, FM)
    a, b, c, d = X[0, 0], X[0, 1], X[1, 0], X[1, 1]
    cp = charpoly(X)
    assert cp.coeffs == (a * d - b * c, -(a + d), CommPoly.const(FM, 1))
    I3 = ConcreteMatrix.identity(QQ, 3)
    assert charpoly(I3) == UniPoly.from_roots(QQ, [1, 1, 1])


def test_charpoly_against_cofactor_oracle():
    rng = np.random.default_rng(3)
    for _ in range(100):
        n = int(rng.integers(1, 6))
        M = ConcreteMatrix(F7, rng.integers(0, 7, (n, n)).tolist())
        cp = charpoly(M)
        assert cp == cofactor_charpoly(M.rows, F7)
        assert cp[n - 1] == F7.neg(M.trace())
        assert cp[0] == F7.mul(F7((-1) ** n), det(F7, M.rows))


def test_charpoly_commutes_with_specialization():
    rng = np.random.default_rng(4)
    x, y = FreePoly.gens(FM, 2)
    for _ in range(5):
        f = random_freepoly(FM, 2, 2, rng, nterms=3)
        M = pi_map(f, 2)
        pt = random_point(rng, {(nu, i, j) for nu in range(2) for i in range(2) for j in range(2)},
                          MERSENNE31)
        generic = charpoly(M)
        assert charpoly(specialize(M, pt)) == UniPoly(FM, [c.eval(pt) for c in generic.coeffs])


def test_minpoly_examples():
    assert minpoly(ConcreteMatrix.identity(F7, 3)) == UniPoly(F7, [6, 1])
    J = ConcreteMatrix(F7, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert minpoly(J) == UniPoly(F7, [0, 0, 0, 1])
    D = ConcreteMatrix(F7, [[1, 0], [0, 2]])
    assert minpoly(D) == UniPoly.from_roots(F7, [1, 2])


def test_minpoly_divides_charpoly():
    rng = np.random.default_rng(5)
    for _ in range(200):
        n = int(rng.integers(1, 5))
        if rng.random() < 0.5:
            # low-rank-ish matrices exercise minpoly != charpoly
            M = ConcreteMatrix(F7, (rng.integers(0, 2, (n, n)) * rng.integers(0, 2)).tolist())
        else:
            M = ConcreteMatrix(F7, rng.integers(0, 7, (n, n)).tolist())
        mp, cp = minpoly(M), charpoly(M)
        assert mp.is_monic() and not (cp % mp)
        if cp.is_squarefree():
            assert mp == cp


def test_minpoly_annihilates():
    rng = np.random.default_rng(6)
    for _ in range(50):
        n = int(rng.integers(1, 5))
        M = ConcreteMatrix(F7, rng.integers(0, 7, (n, n)).tolist())
        acc = ConcreteMatrix.zero(F7, n)
        for e, c in enumerate(minpoly(M).coeffs):
            acc = acc + (M ** e) * c
        assert acc.is_zero()


def test_common_eigenbasis_commutes():
    rng = np.random.default_rng(7)
    q = 65537
    F = GF(q)
    for _ in range(1000):
        n = int(rng.integers(2, 4))
        while True:
            S = ConcreteMatrix(F, rng.integers(0, q, (n, n)).tolist())
            if det(F, S.rows):
                break
        Si = S.inverse()
        D1 = ConcreteMatrix(F, np.diag(rng.integers(0, q, n)).tolist())
        D2 = ConcreteMatrix(F, np.diag(rng.integers(0, q, n)).tolist())
        A, B = S * D1 * Si, S * D2 * Si
        assert A * B == B * A


def test_t_ideal_stability():
    rng = np.random.default_rng(8)
    S4 = standard_polynomial(FM, 4)
    assert pi_test(S4, 2).is_identity
    for t in range(20):
        images = [random_freepoly(FM, 4, 2, rng, nterms=3) for _ in range(4)]
        assert pi_test(substitute(S4, images), 2, samples=10, seed=t).is_identity


def test_spectral_probe():
    F = GF(65537)
    x = FreePoly.gen(F, 2, 0)
    r = spectral_probe(x, 2, trials=200, seed=1)
    assert r.irreducible_found and r.witness is not None
    with pytest.raises(DomainError):
        spectral_probe(x, 4)
    with pytest.raises(PreconditionError):
        spectral_probe(FreePoly.constant(F, 2, 1), 2)


def test_spectral_squarefree_fraction_of_square():
    # exact fraction over F5 of 2x2 A with A^2 having distinct eigenvalues,
    # via discriminant tr^2 - 4 det (odd characteristic)
    q = 5
    good = 0
    for e in np.ndindex(*(q,) * 4):
        a, b, c, d = e
        sq = [[a * a + b * c, a * b + b * d], [c * a + d * c, c * b + d * d]]
        tr, dt = sq[0][0] + sq[1][1], sq[0][0] * sq[1][1] - sq[0][1] * sq[1][0]
        good += (tr * tr - 4 * dt) % q != 0
    exact = good / q ** 4
    x = FreePoly.gen(GF(q), 2, 0)
    probe = spectral_probe(x * x, 2, trials=4000, seed=2, q=q)
    assert abs(probe.squarefree_fraction - exact) < 0.03
    big = spectral_probe(FreePoly.gen(GF(65537), 2, 0) ** 2, 2, trials=200, seed=3)
    assert big.squarefree_fraction >= 0.9


def test_word_trace():
    rng = np.random.default_rng(9)
    q = 65537
    F = GF(q)
    mats = [ConcreteMatrix(F, rng.integers(0, q, (3, 3)).tolist()) for _ in range(2)]
    assert word_trace((), mats) == 3
    for _ in range(1000):
        u = tuple(rng.integers(0, 2, int(rng.integers(1, 4))).tolist())
        v = tuple(rng.integers(0, 2, int(rng.integers(1, 4))).tolist())
        assert word_trace(u + v, mats) == word_trace(v + u, mats)
    with pytest.raises(DomainError):
        word_trace((2,), mats)


def test_trace_algebra_axioms():
    rng = np.random.default_rng(10)
    F = GF(65537)
    for _ in range(100):
        A = ConcreteMatrix(F, rng.integers(0, 65537, (3, 3)).tolist())
        B = ConcreteMatrix(F, rng.integers(0, 65537, (3, 3)).tolist())
        tA = ConcreteMatrix.identity(F, 3) * A.trace()
        assert (A * B).trace() == (B * A).trace()
        assert tA * B == B * tA
        assert (tA * B).trace() == F.mul(A.trace(), B.trace())


def test_ut_eval():
    x, y = FreePoly.gens(FM, 2)
    f = x * y - 2 * y * x * x + x
    img = ut_eval(f, 5, seed=1)
    assert img.trace() == 0 and img.is_strictly_upper()
    assert ut_eval(x * y * x + y * y * y, 3, seed=2).is_zero()
    g = x * y * x * y * y - 3 * y * x * x + x * y + 5 * x
    assert any(not ut_eval(g, 6, seed=s).is_zero() for s in range(20))
    assert not symbolic_eval(g, strict_upper_generic(6, 2, FM)).is_zero()


def test_strict_upper_local_injectivity_symbolic():
    # every nonzero f of degree < n has a nonzero generic strictly-upper image
    rng = np.random.default_rng(11)
    U = strict_upper_generic(4, 2, FM)
    for _ in range(20):
        f = random_freepoly(FM, 2, 3, rng, nterms=3, min_degree=1)
        if f:
            assert not symbolic_eval(f, U).is_zero()
