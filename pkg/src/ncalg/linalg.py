"""Exact linear algebra over a field: sparse echelon forms and small dense helpers."""
from __future__ import annotations

from typing import Callable, Hashable, Mapping

from .errors import DomainError


def _axpy(field, y: dict, a, x: Mapping):
    """y += a*x in place on sparse dicts, dropping zeros."""
    red = field.reduce
    for k, v in x.items():
        s = red(y.get(k, 0) + a * v)
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class Echelon:
    """Incremental sparse echelon basis with optional combination tracking.

    Each stored row has a distinct leading key (max under ``key``) with
    coefficient 1.  A row carries a ``tag``: a sparse vector recording which
    inserted vectors it is a combination of.
    """

    def __init__(self, field, key: Callable = lambda k: k):
        self.field = field
        self.key = key
        self.pivots: dict = {}

    def lead(self, vec: Mapping):
        return max(vec, key=self.key)

    def reduce(self, vec: Mapping, tag: Mapping | None = None):
        """Reduce until the leading key is not a pivot; return (vec, tag)."""
        vec = dict(vec)
        tag = dict(tag or {})
        f = self.field
        while vec:
            lw = self.lead(vec)
            piv = self.pivots.get(lw)
            if piv is None:
                break
            c = f.neg(vec[lw])
            _axpy(f, vec, c, piv[0])
            _axpy(f, tag, c, piv[1])
        return vec, tag

    def insert(self, vec: Mapping, tag: Mapping | None = None):
        """Add vec to the basis.  Returns None if independent, else the
        dependency tag (a combination whose vector reduces to zero)."""
        vec, tag = self.reduce(vec, tag)
        if not vec:
            return tag
        lw = self.lead(vec)
        inv = self.field.inv(vec[lw])
        f = self.field
        vec = {k: f.mul(inv, v) for k, v in vec.items()}
        tag = {k: f.mul(inv, v) for k, v in tag.items()}
        self.pivots[lw] = (vec, tag)
        return None

    def __len__(self):
        return len(self.pivots)


def solve_sparse(field, columns: Mapping[Hashable, Mapping], rhs: Mapping, key=lambda k: k):
    """Find x with sum_j x_j * columns[j] == rhs, or None if inconsistent.

    Free variables are set to zero.
    """
    ech = Echelon(field, key)
    for j, col in columns.items():
        ech.insert(col, {j: field.one})
    rem, tag = ech.reduce(rhs)
    if rem:
        return None
    return {j: field.neg(c) for j, c in tag.items()}


# dense helpers: matrices are lists of lists of raw field scalars

def identity(field, n):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_mul(field, a, b):
    red = field.reduce
    bt = list(zip(*b))
    return [[red(sum(x * y for x, y in zip(row, col))) for col in bt] for row in a]


def row_reduce(field, rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                a = m[i][c]
                m[i] = [field.sub(x, field.mul(a, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def det(field, a):
    """Determinant by Gaussian elimination."""
    m = [list(r) for r in a]
    n = len(m)
    d = field.one
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return field.zero
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = field.neg(d)
        d = field.mul(d, m[c][c])
        inv = field.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c] != 0:
                a_ = field.mul(m[i][c], inv)
                m[i] = [field.sub(x, field.mul(a_, y)) for x, y in zip(m[i], m[c])]
    return d


def rank(field, rows):
    return len(row_reduce(field, rows)[1])


def inverse(field, a):
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(field, n))]
    red, piv = row_reduce(field, aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise DomainError("matrix is singular")
    return [row[n:] for row in red]


def nullspace(field, rows):
    """Basis of {x : rows * x = 0} as a list of dense vectors."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, piv = row_reduce(field, rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        x = [field.zero] * ncols
        x[fc] = field.one
        for r, pc in enumerate(piv):
            x[pc] = field.neg(red[r][fc])
        basis.append(x)
    return basis
