"""Centralizers of free polynomials up to a degree bound, and k-th roots.

The centralizer is found as the kernel of g -> [f, g] on words of length
<= D.  Columns are processed in ascending deglex order, so every kernel
vector found at column w has leading word w; distinct columns give distinct
leading words for free.  All computations are exact: a basis element g
satisfies [f, g] = 0 as a polynomial, with no truncation.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .errors import DomainError, PreconditionError
from .fields import PrimeField
from .freealg import FreePoly, commutator, deglex_key, words_of_length, words_up_to
from .linalg import Echelon, solve_sparse
from .unipoly import UniPoly
from .words import primitive_root


@dataclass
class GradedBasis:
    f: FreePoly
    D: int
    by_degree: dict

    def elements(self):
        return [g for d in sorted(self.by_degree) for g in self.by_degree[d]]

    def dims(self):
        return {d: len(self.by_degree.get(d, [])) for d in range(self.D + 1)}

    def __len__(self):
        return sum(len(v) for v in self.by_degree.values())


def _bracket_with_word(f: FreePoly, w) -> dict:
    acc: dict = {}
    for u, c in f:
        a = u + w
        acc[a] = acc.get(a, 0) + c
        b = w + u
        acc[b] = acc.get(b, 0) - c
    red = f.field.reduce
    return {k: v for k, v in ((k, red(v)) for k, v in acc.items()) if v}


def centralizer_basis(f: FreePoly, D: int) -> GradedBasis:
    """Basis of C(f) restricted to polynomials of degree <= D.

    ``by_degree[d]`` lists the elements of degree exactly d, fully reduced
    against each other and with leading coefficient 1.
    """
    if f.is_constant():
        raise DomainError("the centralizer of a scalar is the whole algebra")
    if D < 1:
        raise DomainError("degree bound must be at least 1")
    F = f.field
    if isinstance(F, PrimeField) and F.p <= D + f.degree:
        raise PreconditionError(f"characteristic {F.p} must exceed D + deg f = {D + f.degree}")
    ech = Echelon(F, key=deglex_key)
    found = []
    for w in words_up_to(f.nvars, D):
        dep = ech.insert(_bracket_with_word(f, w), {w: F.one})
        if dep is not None:
            found.append(FreePoly(F, f.nvars, dep, _clean=True))
    # back-substitute to reduced echelon form; found is sorted by leading word
    leads = [g.leading_word for g in found]
    reduced = []
    for i, g in enumerate(found):
        for j in range(i - 1, -1, -1):
            c = g.coeff(leads[j])
            if c != 0:
                g = g - reduced[j].scale(c)
        reduced.append(g)
    by_degree = {d: [] for d in range(D + 1)}
    for g in reduced:
        by_degree[len(g.leading_word)].append(g)
    return GradedBasis(f, D, by_degree)


def is_in_centralizer(g: FreePoly, f: FreePoly) -> bool:
    return commutator(f, g).is_zero()


def poly_in(q: UniPoly, h: FreePoly) -> FreePoly:
    """q(h) by Horner."""
    acc = FreePoly.zero(h.field, h.nvars)
    for c in reversed(q.coeffs):
        acc = acc * h + c
    return acc


@dataclass
class CentralizerReport:
    basis: GradedBasis
    h: FreePoly | None
    certificates: list  # (element, UniPoly) pairs
    recognized: bool
    commutative: bool
    boundary_degree: int
    diagnostic: str = ""
    counterexample: FreePoly | None = None

    def to_json(self):
        f = self.basis.f
        out = {
            "f": f.to_text(),
            "field": f.field.name,
            "D": self.basis.D,
            "basis": [[d, [g.to_text() for g in gs]]
                      for d, gs in sorted(self.basis.by_degree.items()) if gs],
            "dims": [len(self.basis.by_degree.get(d, [])) for d in range(self.basis.D + 1)],
            "h": None if self.h is None else self.h.to_text(),
            "certificates": [{"element": g.to_text(), "q": q.to_json()}
                             for g, q in self.certificates],
            "recognized": self.recognized,
            "commutative": self.commutative,
            "boundary_degree": self.boundary_degree,
            "claim": f"C(f) and k[h] agree on polynomials of degree <= {self.basis.D}",
        }
        if self.diagnostic:
            out["diagnostic"] = self.diagnostic
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_text()
        return out


def _reduce_by_powers(b: FreePoly, h: FreePoly, powers: dict):
    """Write b as q(h) by leading-word elimination, or return None."""
    F = b.field
    e = h.degree
    lw_h = h.leading_word
    q: dict = {}
    r = b
    while r:
        lw = r.leading_word
        m, rem = divmod(len(lw), e)
        if rem or lw != lw_h * m:
            return None
        if m not in powers:
            powers[m] = powers[m - 1] * h
        c = r.leading_coeff
        r = r - powers[m].scale(c)
        q[m] = F.add(q.get(m, F.zero), c)
    return UniPoly(F, [q.get(i, F.zero) for i in range(max(q, default=-1) + 1)])


def recognize_generator(basis: GradedBasis) -> CentralizerReport:
    """Find h with every basis element a polynomial in h."""
    elems = basis.elements()
    commutative = all(commutator(a, b).is_zero()
                      for i, a in enumerate(elems) for b in elems[i + 1:])
    nonscalar = [g for g in elems if g.degree > 0]
    if not nonscalar:
        return CentralizerReport(basis, None, [], False, commutative, 0,
                                 diagnostic="insufficient degree: no nonscalar element up to D")
    e = min(g.degree for g in nonscalar)
    h = min((g for g in nonscalar if g.degree == e), key=lambda g: deglex_key(g.leading_word))
    h = h - h.constant_term()
    h = h.scale(h.field.inv(h.leading_coeff))
    powers = {0: FreePoly.constant(h.field, h.nvars), 1: h}
    certs = []
    for b in elems:
        q = _reduce_by_powers(b, h, powers)
        if q is None:
            return CentralizerReport(
                basis, h, certs, False, commutative, (basis.D // e) * e,
                diagnostic="basis element is not a polynomial in h; contradicts C = k[h]",
                counterexample=b)
        certs.append((b, q))
    return CentralizerReport(basis, h, certs, True, commutative, (basis.D // e) * e)


def centralizer(f: FreePoly, D: int) -> CentralizerReport:
    return recognize_generator(centralizer_basis(f, D))


def centralizer_auto(f: FreePoly, start: int | None = None, max_degree: int = 16) -> CentralizerReport:
    """Raise D until h is unchanged over two consecutive increments."""
    D = start if start is not None else max(int(f.degree), 1)
    history = []
    rep = None
    while D <= max_degree:
        rep = centralizer(f, D)
        history.append(rep.h if rep.recognized else None)
        if len(history) >= 3 and history[-1] is not None and history[-1] == history[-2] == history[-3]:
            break
        D += 1
    return rep


def _candidate_words(nvars, length, target: FreePoly, m, k):
    if nvars ** length <= 4096:
        return list(words_of_length(nvars, length))
    cands = set()
    for w, _ in target:
        for i in range(k):
            v = w[i * m: i * m + length]
            if len(v) == length:
                cands.add(v)
    return sorted(cands)


def nc_root(h: FreePoly, k: int) -> FreePoly | None:
    """g with g**k == h, or None if h has no k-th root in the free algebra.

    The top homogeneous part is read off h directly: in a product of k
    homogeneous factors of degree m, a word of length k*m splits uniquely
    into k blocks, so the coefficient of u^(k-1) w is c^(k-1) times the
    coefficient of w.  Each lower part enters g**k linearly at its degree
    and is found by an exact linear solve.
    """
    if not isinstance(k, int) or k < 2:
        raise DomainError("root index k must be an integer >= 2")
    if h.is_zero():
        raise DomainError("nc_root needs a nonzero polynomial")
    F = h.field
    N = int(h.degree)
    if N % k:
        return None
    m = N // k
    top = h.homogeneous_part(N)
    uk = top.leading_word
    u = uk[:m]
    if u * k != uk:
        return None
    c = F.kth_root(top.leading_coeff, k)
    if c is None:
        return None
    inv = F.inv(F.pow(c, k - 1))
    prefix = u * (k - 1)
    gterms = {u: c}
    for w, a in top:
        if w[: m * (k - 1)] == prefix and w[m * (k - 1):] != u:
            gterms[w[m * (k - 1):]] = F.mul(a, inv)
    g_top = FreePoly(F, h.nvars, gterms, _clean=True)
    if g_top ** k != top:
        return None
    gpow = [FreePoly.constant(F, h.nvars)]
    for _ in range(k - 1):
        gpow.append(gpow[-1] * g_top)
    g = g_top
    for j in range(1, N + 1):
        target = (h - g ** k).homogeneous_part(N - j)
        length = m - j
        if length < 0:
            if target:
                return None
            continue
        if not target:
            continue
        cols = {}
        for v in _candidate_words(h.nvars, length, target, m, k):
            mono = FreePoly(F, h.nvars, {v: F.one}, _clean=True)
            col = FreePoly.zero(F, h.nvars)
            for i in range(k):
                col = col + gpow[i] * mono * gpow[k - 1 - i]
            if col:
                cols[v] = dict(col)
        sol = solve_sparse(F, cols, dict(target), key=deglex_key)
        if sol is None:
            return None
        g = g + FreePoly(F, h.nvars, sol)
    return g if g ** k == h else None


@dataclass
class ClosureProbeReport:
    f: FreePoly
    h: FreePoly | None
    D: int
    trials: int
    passed: int = 0
    failed: int = 0
    non_members: int = 0
    failures: list = dc_field(default_factory=list)
    controls: list = dc_field(default_factory=list)

    def to_json(self):
        return {
            "f": self.f.to_text(),
            "h": None if self.h is None else self.h.to_text(),
            "D": self.D,
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.failed,
            "non_members": self.non_members,
            "failures": self.failures,
            "controls": self.controls,
        }


def integral_closure_probe(f: FreePoly, D: int, trials: int = 100, seed: int = 0,
                           controls: Sequence[tuple] = ()) -> ClosureProbeReport:
    """Check "g^k in C(f) implies g in C(f)" on random g = q(h).

    ``controls`` holds extra (g, k) pairs; when g^k falls outside C(f) the
    pair is recorded as a non-member instead of a failure.
    """
    rep = centralizer(f, max(int(f.degree), 1))
    out = ClosureProbeReport(f, rep.h, D, trials)
    if not rep.recognized:
        out.failed = trials
        out.failures.append({"reason": rep.diagnostic})
        return out
    h = rep.h
    e = int(h.degree)
    pairs = [(dq, k) for k in range(2, D // e + 1) for dq in range(1, D // (e * k) + 1)]
    if not pairs:
        raise DomainError(f"D = {D} leaves no room for q(h)^k with deg h = {e}")
    F = f.field
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        dq, k = pairs[int(rng.integers(len(pairs)))]
        coeffs = [F.random(rng) for _ in range(dq)] + [F.random(rng) or F.one]
        q = UniPoly(F, coeffs)
        g = poly_in(q, h)
        a = g ** k
        root = nc_root(a, k) if is_in_centralizer(a, f) else None
        if root is not None and root ** k == a and is_in_centralizer(root, f):
            out.passed += 1
        else:
            out.failed += 1
            out.failures.append({"g": g.to_text(), "k": k})
    for g, k in controls:
        a = g ** k
        member = is_in_centralizer(a, f)
        if not member:
            out.non_members += 1
        out.controls.append({"g": g.to_text(), "k": k, "power_in_centralizer": member,
                             "g_in_centralizer": is_in_centralizer(g, f)})
    return out
