"""Independent brute-force oracles used to cross-check the main algorithms.

Each oracle takes a deliberately different route from the code it checks:
explicit long prefixes instead of the two-period bound, dense row reduction
instead of sparse column elimination, Laplace expansion instead of
Berkowitz, full enumeration instead of random sampling.
"""
from __future__ import annotations

import itertools

import numpy as np

from .commpoly import CommPoly
from .fields import Field
from .freealg import FreePoly, words_up_to
from .genmat import GenericMatrix
from .unipoly import UniPoly


def prefix_cmp(u, v, order=None) -> int:
    """Compare u^inf and v^inf on a prefix of length 2|u||v| + |u| + |v|."""
    rank = (lambda g: g) if order is None else {g: r for r, g in enumerate(order)}.__getitem__
    n = 2 * len(u) * len(v) + len(u) + len(v)
    a = [rank(u[i % len(u)]) for i in range(n)]
    b = [rank(v[i % len(v)]) for i in range(n)]
    return (a > b) - (a < b)


def _dense_rank_profile(mat: np.ndarray, p: int) -> list:
    """Row-reduce mod p (p < 2^31) left to right; return the pivot columns."""
    m = mat.astype(np.int64) % p
    nrows, ncols = m.shape
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        below = r + 1 + np.flatnonzero(m[r + 1:, c])
        if below.size:
            factors = m[below, c][:, None]
            m[below] = (m[below] - (factors * m[r]) % p) % p
        pivots.append(c)
        r += 1
    return pivots


def dense_centralizer_dims(f: FreePoly, D: int) -> dict:
    """dim of C(f) in each exact degree d <= D, via a dense matrix of [f, w]."""
    p = f.field.p
    cols = words_up_to(f.nvars, D)
    rows = words_up_to(f.nvars, D + int(f.degree))
    row_index = {w: i for i, w in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, w in enumerate(cols):
        for u, c in f:
            mat[row_index[u + w], j] += c
            mat[row_index[w + u], j] -= c
    pivots = set(_dense_rank_profile(mat, p))
    dims = {d: 0 for d in range(D + 1)}
    for j, w in enumerate(cols):
        if j not in pivots:
            dims[len(w)] += 1
    return dims


def cofactor_charpoly(rows, field: Field) -> UniPoly:
    """det(tI - M) by Laplace expansion along the first row."""
    n = len(rows)
    t = UniPoly(field, [field.zero, field.one])
    ent = [[(t if i == j else UniPoly(field, [])) - UniPoly(field, [rows[i][j]])
            for j in range(n)] for i in range(n)]

    def det(m):
        if len(m) == 1:
            return m[0][0]
        acc = UniPoly(field, [])
        for j in range(len(m)):
            if not m[0][j]:
                continue
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            term = m[0][j] * det(minor)
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    return det(ent)


def exhaustive_identity_check(f: FreePoly, n: int, q: int) -> bool:
    """True iff f vanishes on every tuple of n x n matrices over F_q.

    Enumerates all q^(n^2 s) tuples and sums the terms of f word by word,
    memoizing products of word prefixes.
    """
    s = f.nvars
    per = q ** (n * n)
    all_mats = np.array(list(itertools.product(range(q), repeat=n * n)),
                        dtype=np.int64).reshape(per, n, n)
    grids = np.meshgrid(*[np.arange(per)] * s, indexing="ij")
    mats = [all_mats[g.ravel()] for g in grids]
    total = np.zeros((per ** s, n, n), dtype=np.int64)
    eye = np.broadcast_to(np.eye(n, dtype=np.int64), total.shape)
    prefix = {(): eye}

    def prod(w):
        r = prefix.get(w)
        if r is None:
            r = prefix[w] = (prod(w[:-1]) @ mats[w[-1]]) % q
        return r

    for w, c in f:
        total = (total + int(c) % q * prod(w)) % q
    return not total.any()


def brute_irreducible(p: UniPoly) -> bool:
    """Irreducible iff no monic factor of degree 1..deg/2 divides p."""
    field = p.ring
    q = field.p
    n = p.degree
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(q), repeat=d):
            cand = UniPoly(field, list(tail) + [1])
            if not (p % cand):
                return False
    return True


def strict_upper_generic(n: int, s: int, field: Field):
    """Generic strictly upper triangular matrices (zero on and below the diagonal)."""
    z = CommPoly.const(field, 0)
    return [GenericMatrix(field, [[CommPoly.var(field, (nu, i, j)) if j > i else z
                                   for j in range(n)] for i in range(n)])
            for nu in range(s)]


def symbolic_eval(f: FreePoly, mats) -> GenericMatrix:
    """f at generic matrices by summing word products one term at a time."""
    n = mats[0].n
    acc = GenericMatrix.scalar(f.field, n, 0)
    for w, c in f:
        prod = GenericMatrix.scalar(f.field, n, 1)
        for g in w:
            prod = prod * mats[g]
        acc = acc + prod * CommPoly.const(f.field, c)
    return acc
