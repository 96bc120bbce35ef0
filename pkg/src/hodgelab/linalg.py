"""Exact linear algebra over Q and Q[nu].

Matrices are lists of row lists.  Field routines work on anything with
exact division (``mpq``); the fraction-free routines work over the
polynomial ring Q[nu] and never leave it.
"""
from __future__ import annotations

from dataclasses import dataclass

import sympy

from .algebra import QQ, NuPoly


def rref(matrix):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    rows = [[QQ(x) for x in r] for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix):
    return len(rref(matrix)[1])


def nullspace(matrix, ncols=None):
    """Basis of {v : M v = 0}."""
    if not matrix:
        return [[QQ(int(i == j)) for j in range(ncols)] for i in range(ncols or 0)]
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [QQ(0)] * ncols
        v[f] = QQ(1)
        for r, p in zip(rows, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis


def transpose(matrix, ncols=None):
    if not matrix:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*matrix)]


def left_kernel(matrix, nrows=None, ncols=None):
    """Basis of {w : w^T M = 0}."""
    if not matrix or not matrix[0]:
        n = len(matrix) if matrix else (nrows or 0)
        return [[QQ(int(i == j)) for j in range(n)] for i in range(n)]
    return nullspace(transpose(matrix))


def solve(matrix, rhs):
    """One solution of M x = rhs, or None."""
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    n = len(matrix[0])
    if n in pivots:
        return None
    x = [QQ(0)] * n
    for r, p in zip(rows, pivots):
        x[p] = r[n]
    return x


def mat_vec_left(w, matrix):
    """w^T M for a rational row vector and a rational matrix."""
    if not matrix:
        return []
    out = [QQ(0)] * len(matrix[0])
    for wi, row in zip(w, matrix):
        if wi:
            for j, x in enumerate(row):
                if x:
                    out[j] += wi * x
    return out


# ---------------------------------------------------------------------------
# fraction-free elimination over Q[nu]

@dataclass
class BareissResult:
    rank: int
    pivots: list          # pivot polynomials, the last one is a rank x rank minor
    pivot_rows: list
    pivot_cols: list

    @property
    def minor(self):
        return self.pivots[-1] if self.pivots else NuPoly((1,))


def bareiss(matrix):
    """Fraction-free echelon form over Q[nu] with row and column skipping.

    Every intermediate entry is a minor of the input, so divisions are exact
    and the final pivot is a nonzero maximal minor (up to sign).
    """
    M = [[NuPoly.lift(x) for x in row] for row in matrix]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    order = list(range(nrows))
    prev = NuPoly((1,))
    r = 0
    pivots, prow, pcol = [], [], []
    for c in range(ncols):
        if r == nrows:
            break
        # prefer a constant pivot, then the lowest degree
        cands = [i for i in range(r, nrows) if M[i][c]]
        if not cands:
            continue
        piv = min(cands, key=lambda i: (M[i][c].degree(), i))
        M[r], M[piv] = M[piv], M[r]
        order[r], order[piv] = order[piv], order[r]
        p = M[r][c]
        for i in range(r + 1, nrows):
            a = M[i][c]
            for j in range(c + 1, ncols):
                val = p * M[i][j]
                if a:
                    val = val - a * M[r][j]
                M[i][j] = val.exact_div(prev) if prev.degree() > 0 or prev.coeffs != (1,) else val
            M[i][c] = NuPoly()
        prev = p
        pivots.append(p)
        prow.append(order[r])
        pcol.append(c)
        r += 1
    return BareissResult(r, pivots, prow, pcol)


def evaluate_matrix(matrix, nu0):
    return [[NuPoly.lift(x).evaluate(nu0) for x in row] for row in matrix]


# ---------------------------------------------------------------------------
# roots of pivot polynomials

def _to_sympy(p, symbol):
    return sympy.Poly([sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(p.coeffs)],
                      symbol, domain="QQ")


def _from_sympy(poly):
    coeffs = list(reversed(poly.all_coeffs()))
    return NuPoly(QQ(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in coeffs)


def factor_roots(p):
    """Split p into rational roots and irreducible factors of degree >= 2.

    Returns ``(rational_roots, irreducible_factors)`` with factors monic.
    """
    if p.degree() <= 0:
        return [], []
    nu = sympy.Symbol("nu")
    _, factors = _to_sympy(p, nu).factor_list()
    roots, others = [], []
    for fac, _mult in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            r = -sympy.Rational(b) / sympy.Rational(a)
            roots.append(QQ(int(r.p), int(r.q)))
        else:
            others.append(_from_sympy(fac.monic()))
    roots.sort()
    others.sort(key=lambda f: (f.degree(), f.coeffs))
    return roots, others


def real_root_intervals(p):
    """Rational isolating intervals for the real roots of p."""
    nu = sympy.Symbol("nu")
    out = []
    for (a, b), _m in _to_sympy(p, nu).intervals():
        out.append((QQ(int(a.p), int(a.q)), QQ(int(b.p), int(b.q))))
    return out


class NumberFieldElement:
    """Element of Q[nu]/(m) for an irreducible m."""

    __slots__ = ("poly", "modulus")

    def __init__(self, poly, modulus):
        self.modulus = modulus
        self.poly = NuPoly.lift(poly).divmod(modulus)[1]

    def __bool__(self):
        return bool(self.poly)

    def __sub__(self, other):
        return NumberFieldElement(self.poly - other.poly, self.modulus)

    def __mul__(self, other):
        return NumberFieldElement(self.poly * other.poly, self.modulus)

    def inverse(self):
        # extended Euclid: s*poly + t*modulus = 1
        r0, r1 = self.modulus, self.poly
        s0, s1 = NuPoly(), NuPoly((1,))
        while r1:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree() != 0:
            raise ZeroDivisionError("not invertible modulo a reducible polynomial")
        return NumberFieldElement(s0 * NuPoly((1 / r0.coeffs[0],)), self.modulus)


def rank_over_number_field(matrix, modulus):
    """Rank of a Q[nu] matrix after specializing nu to a root of ``modulus``."""
    rows = [[NumberFieldElement(x, modulus) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
