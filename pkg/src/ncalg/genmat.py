"""The algebra of generic matrices and its concrete specializations.

``pi_map`` sends a free polynomial to its image in M_n(k[x_ij^(nu)]).  Since
evaluating at concrete matrices is the composite of ``pi_map`` and
``specialize``, the randomized routines evaluate free polynomials at batches
of random matrices directly (numpy, exact modular integer arithmetic).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

import numpy as np
from sympy import isprime

from .commpoly import CommPoly, CommPolyRing
from .errors import DomainError, PreconditionError, StructuralError
from .fields import GF, Field, PrimeField, MERSENNE31
from .freealg import FreePoly, Word
from .linalg import Echelon, identity as _identity, inverse as _inverse, mat_mul as _mat_mul
from .unipoly import UniPoly, irreducible_fq

__all__ = [
    "GenericMatrix", "ConcreteMatrix", "generic_generators", "pi_map", "specialize",
    "evaluate", "pi_test", "PiTestResult", "charpoly", "berkowitz", "minpoly",
    "irreducible_fq", "spectral_probe", "SpectralReport", "word_trace", "ut_eval",
    "random_matrices", "random_strict_upper",
]


class GenericMatrix:
    """Square matrix over the commutative ring k[x_ij^(nu)]."""

    __slots__ = ("n", "field", "entries")

    def __init__(self, field: Field, entries):
        self.field = field
        self.entries = tuple(tuple(row) for row in entries)
        self.n = len(self.entries)
        if any(len(row) != self.n for row in self.entries):
            raise StructuralError("generic matrix must be square")

    @classmethod
    def scalar(cls, field, n, c):
        z = CommPoly.const(field, 0)
        cc = CommPoly.const(field, c)
        return cls(field, [[cc if i == j else z for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other):
        return GenericMatrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                          for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return GenericMatrix(self.field, [[a - b for a, b in zip(r1, r2)]
                                          for r1, r2 in zip(self.entries, other.entries)])

    def __mul__(self, other):
        if not isinstance(other, GenericMatrix):
            return GenericMatrix(self.field, [[a * other for a in row] for row in self.entries])
        n = self.n
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = CommPoly.const(self.field, 0)
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return GenericMatrix(self.field, out)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def trace(self):
        acc = CommPoly.const(self.field, 0)
        for i in range(self.n):
            acc = acc + self.entries[i][i]
        return acc

    def variables(self):
        return set().union(*(e.variables() for row in self.entries for e in row))

    def __eq__(self, other):
        return isinstance(other, GenericMatrix) and self.entries == other.entries

    def to_json(self):
        return [[e.to_text() for e in row] for row in self.entries]


class ConcreteMatrix:
    """Square matrix over a field (normally F_q), immutable."""

    __slots__ = ("n", "field", "rows")

    def __init__(self, field: Field, rows):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in row) for row in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise StructuralError("matrix must be square")

    @classmethod
    def identity(cls, field, n):
        return cls(field, _identity(field, n))

    @classmethod
    def zero(cls, field, n):
        return cls(field, [[0] * n for _ in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other):
        if self.field != other.field or self.n != other.n:
            raise StructuralError("matrices over different fields or orders")

    def __add__(self, other):
        self._check(other)
        f = self.field
        return ConcreteMatrix(f, [[f.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        f = self.field
        return ConcreteMatrix(f, [[f.sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if not isinstance(other, ConcreteMatrix):
            c = self.field(other)
            return ConcreteMatrix(self.field, [[self.field.mul(c, a) for a in r] for r in self.rows])
        self._check(other)
        return ConcreteMatrix(self.field, _mat_mul(self.field, self.rows, other.rows))

    __rmul__ = __mul__

    def __pow__(self, e):
        r = ConcreteMatrix.identity(self.field, self.n)
        for _ in range(e):
            r = r * self
        return r

    def inverse(self):
        return ConcreteMatrix(self.field, _inverse(self.field, self.rows))

    def trace(self):
        return self.field.reduce(sum(self.rows[i][i] for i in range(self.n)))

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def is_strictly_upper(self):
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(i + 1))

    def __eq__(self, other):
        return (isinstance(other, ConcreteMatrix) and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def to_json(self):
        return [[self.field.to_json(x) for x in r] for r in self.rows]

    def __repr__(self):
        return f"ConcreteMatrix({self.to_json()}, {self.field!r})"


def generic_generators(n: int, s: int, field: Field | None = None) -> list:
    """X_0, ..., X_{s-1}: entry (i, j) of X_nu is the variable (nu, i, j)."""
    if n < 1 or s < 1:
        raise DomainError("need n >= 1 and s >= 1")
    field = GF(MERSENNE31) if field is None else field
    return [GenericMatrix(field, [[CommPoly.var(field, (nu, i, j)) for j in range(n)]
                                  for i in range(n)])
            for nu in range(s)]


def _trie(f: FreePoly):
    root = [0, {}]
    for w, c in f:
        node = root
        for g in w:
            node = node[1].setdefault(g, [0, {}])
        node[0] = c
    return root


def pi_map(f: FreePoly, n: int) -> GenericMatrix:
    """Image of f in the algebra of n x n generic matrices."""
    gens = generic_generators(n, f.nvars, f.field)
    zero = GenericMatrix.scalar(f.field, n, 0)

    def walk(node):
        acc = zero
        for g, child in node[1].items():
            acc = acc + gens[g] * walk(child)
        if node[0]:
            acc = acc + GenericMatrix.scalar(f.field, n, node[0])
        return acc

    return walk(_trie(f))


def specialize(M: GenericMatrix, point: Mapping, q: int | None = None) -> ConcreteMatrix:
    field = M.field if q is None else GF(q)
    if field != M.field:
        raise StructuralError(f"matrix lives over {M.field}, not {field}")
    return ConcreteMatrix(field, [[e.eval(point) for e in row] for row in M.entries])


def evaluate(f: FreePoly, mats: Sequence[ConcreteMatrix]) -> ConcreteMatrix:
    """f(mats) for one tuple of concrete matrices."""
    if len(mats) < f.nvars:
        raise StructuralError(f"need {f.nvars} matrices, got {len(mats)}")
    field, n = mats[0].field, mats[0].n
    eye = ConcreteMatrix.identity(field, n)
    zero = ConcreteMatrix.zero(field, n)

    def walk(node):
        acc = zero
        for g, child in node[1].items():
            acc = acc + mats[g] * walk(child)
        if node[0]:
            acc = acc + eye * field(node[0])
        return acc

    return walk(_trie(f))


# batched modular evaluation

def _bmatmul(a, b, q):
    if a.dtype == object:
        return (a @ b) % q
    lo = b & 0xFFFF
    hi = b >> 16
    return ((a @ lo) % q + (((a @ hi) % q) << 16)) % q


def _as_batch(arr, q):
    arr = np.asarray(arr)
    if q >= 2**31:
        return arr.astype(object)
    return arr.astype(np.int64)


def batch_evaluate(f: FreePoly, mats, q: int):
    """Evaluate f at ``mats[g]`` of shape (B, n, n) for each generator g."""
    mats = [_as_batch(m, q) for m in mats]
    shape = mats[0].shape
    eye = np.broadcast_to(np.eye(shape[-1], dtype=np.int64), shape).astype(mats[0].dtype)
    zero = np.zeros(shape, dtype=mats[0].dtype)

    def walk(node):
        acc = zero
        for g, child in node[1].items():
            acc = (acc + _bmatmul(mats[g], walk(child), q)) % q
        if node[0]:
            c = int(GF(q)(node[0]))
            acc = (acc + eye * c) % q
        return acc

    return walk(_trie(f))


def random_matrices(rng, s: int, batch: int, n: int, q: int):
    if q <= 2**63:
        return rng.integers(0, q, size=(s, batch, n, n), dtype=np.int64)
    vals = [int.from_bytes(rng.bytes(16), "little") % q for _ in range(s * batch * n * n)]
    return np.array(vals, dtype=object).reshape(s, batch, n, n)


def random_strict_upper(rng, s: int, batch: int, n: int, q: int):
    m = random_matrices(rng, s, batch, n, q)
    return m * np.triu(np.ones((n, n), dtype=np.int64), 1)


def _to_concrete(arr, q) -> ConcreteMatrix:
    return ConcreteMatrix(GF(q), [[int(x) for x in row] for row in arr])


def _field_for(f: FreePoly, q: int):
    if isinstance(f.field, PrimeField) and f.field.p != q:
        raise StructuralError(f"polynomial over {f.field} evaluated modulo {q}")


@dataclass
class PiTestResult:
    verdict: str
    samples: int
    seed: int
    q: int
    degree: int
    confidence_bound: float
    witness: list | None = None
    value: ConcreteMatrix | None = None

    @property
    def is_identity(self):
        return self.verdict == "Identity"

    def to_json(self):
        out = {
            "verdict": self.verdict,
            "samples": self.samples,
            "seed": self.seed,
            "q": self.q,
            "degree": self.degree,
            "confidence_bound": self.confidence_bound,
            "confidence_bound_formula": "(degree/q)^samples",
        }
        if self.witness is not None:
            out["witness"] = [m.to_json() for m in self.witness]
            out["witness_value"] = self.value.to_json()
        return out


def pi_test(f: FreePoly, n: int, samples: int = 50, seed: int = 0, q: int = MERSENNE31) -> PiTestResult:
    """Randomized test of whether f vanishes identically on M_n(F_q).

    A nonzero evaluation is a certificate of NonIdentity.  All-zero
    evaluations give Identity with false-positive probability at most
    (deg f / q)^samples by the polynomial-zero-test bound.
    """
    if not isprime(q):
        raise DomainError(f"q = {q} is not prime")
    if samples < 1:
        raise DomainError("need at least one sample")
    _field_for(f, q)
    deg = f.degree
    if deg != float("-inf") and q <= deg:
        raise PreconditionError(f"q = {q} must exceed deg f = {deg}")
    rng = np.random.default_rng(seed)
    mats = random_matrices(rng, max(f.nvars, 1), samples, n, q)
    deg_i = 0 if deg == float("-inf") else int(deg)
    if f.is_zero():
        return PiTestResult("Identity", samples, seed, q, deg_i, 0.0)
    vals = batch_evaluate(f, mats, q)
    nonzero = np.flatnonzero(np.any(vals.reshape(samples, -1) != 0, axis=1))
    if nonzero.size:
        t = int(nonzero[0])
        witness = [_to_concrete(mats[g][t], q) for g in range(f.nvars)]
        return PiTestResult("NonIdentity", samples, seed, q, deg_i, 0.0,
                            witness, _to_concrete(vals[t], q))
    bound = math.exp(samples * (math.log(deg_i) - math.log(q))) if deg_i else 0.0
    return PiTestResult("Identity", samples, seed, q, deg_i, bound)


# characteristic and minimal polynomials

def berkowitz(A, ring) -> list:
    """Coefficients of det(tI - A), highest power first, without division."""
    n = len(A)
    vect = [ring.one]
    for k in range(n):
        row = A[k][:k]
        v = [A[i][k] for i in range(k)]
        col = [ring.one, ring.neg(A[k][k])]
        for _ in range(k):
            acc = ring.zero
            for x, y in zip(row, v):
                acc = ring.add(acc, ring.mul(x, y))
            col.append(ring.neg(acc))
            nv = []
            for i in range(k):
                acc = ring.zero
                for j in range(k):
                    acc = ring.add(acc, ring.mul(A[i][j], v[j]))
                nv.append(acc)
            v = nv
        new = []
        for i in range(k + 2):
            acc = ring.zero
            for j in range(max(0, i - len(col) + 1), min(i, len(vect) - 1) + 1):
                acc = ring.add(acc, ring.mul(col[i - j], vect[j]))
            new.append(acc)
        vect = new
    return vect


def charpoly(M) -> UniPoly:
    """Monic characteristic polynomial det(tI - M) via Berkowitz."""
    if isinstance(M, GenericMatrix):
        ring = CommPolyRing(M.field)
        coeffs = berkowitz([list(r) for r in M.entries], ring)
    elif isinstance(M, ConcreteMatrix):
        ring = M.field
        coeffs = berkowitz([list(r) for r in M.rows], ring)
    else:
        raise TypeError(f"not a matrix: {M!r}")
    return UniPoly(ring, coeffs[::-1])


def minpoly(M: ConcreteMatrix) -> UniPoly:
    """Least-degree monic polynomial annihilating M (Krylov on I, M, M^2, ...)."""
    f, n = M.field, M.n
    ech = Echelon(f)
    P = ConcreteMatrix.identity(f, n)
    for i in range(n * n + 1):
        vec = {k: x for k, x in enumerate(x for r in P.rows for x in r) if x != 0}
        dep = ech.insert(vec, {i: f.one})
        if dep is not None:
            return UniPoly(f, [dep.get(j, f.zero) for j in range(i + 1)])
        P = P * M
    raise AssertionError("Cayley-Hamilton violated")  # unreachable


@dataclass
class SpectralReport:
    n: int
    q: int
    seed: int
    trials: int
    squarefree_count: int
    irreducible_count: int
    irreducible_found: bool
    witness: dict | None = None

    @property
    def squarefree_fraction(self):
        return self.squarefree_count / self.trials

    def to_json(self):
        return {
            "n": self.n, "q": self.q, "seed": self.seed, "trials": self.trials,
            "squarefree_count": self.squarefree_count,
            "squarefree_fraction": self.squarefree_fraction,
            "irreducible_count": self.irreducible_count,
            "irreducible_found": self.irreducible_found,
            "witness": self.witness,
        }


def spectral_probe(f: FreePoly, n: int, trials: int = 200, seed: int = 0, q: int = 65537) -> SpectralReport:
    """Probe the characteristic polynomial of pi(f) at prime order n.

    A squarefree specialization certifies pairwise distinct eigenvalues; an
    irreducible one certifies irreducibility of the generic characteristic
    polynomial, since a factorization would survive specialization.
    """
    if not isprime(n):
        raise DomainError(f"order n = {n} is not prime")
    g = f - f.constant_term()
    if pi_test(g, n, samples=8, seed=seed, q=q).is_identity:
        raise PreconditionError("f is scalar modulo the identities of M_n")
    rng = np.random.default_rng(seed)
    mats = random_matrices(rng, f.nvars, trials, n, q)
    vals = batch_evaluate(f, mats, q)
    F = GF(q)
    squarefree = irreducible = 0
    witness = None
    for t in range(trials):
        cp = charpoly(_to_concrete(vals[t], q))
        if cp.is_squarefree():
            squarefree += 1
            if irreducible_fq(cp):
                irreducible += 1
                if witness is None:
                    witness = {
                        "trial": t,
                        "matrices": [_to_concrete(mats[g][t], q).to_json() for g in range(f.nvars)],
                        "charpoly": cp.to_json(),
                    }
    return SpectralReport(n, q, seed, trials, squarefree, irreducible, witness is not None, witness)


def word_trace(w: Word, mats: Sequence[ConcreteMatrix]):
    """Trace of the product of ``mats`` along the word w."""
    if not mats:
        raise DomainError("need at least one matrix")
    field, n = mats[0].field, mats[0].n
    P = ConcreteMatrix.identity(field, n)
    for g in w:
        if not 0 <= g < len(mats):
            raise DomainError(f"generator index {g} out of range for {len(mats)} matrices")
        P = P * mats[g]
    return P.trace()


def ut_eval(f: FreePoly, n: int, seed: int = 0, q: int = MERSENNE31) -> ConcreteMatrix:
    """Evaluate f at random strictly upper triangular n x n matrices over F_q."""
    _field_for(f, q)
    rng = np.random.default_rng(seed)
    mats = random_strict_upper(rng, max(f.nvars, 1), 1, n, q)
    vals = batch_evaluate(f, mats, q)
    return _to_concrete(vals[0], q)
