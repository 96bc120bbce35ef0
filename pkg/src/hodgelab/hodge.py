"""Ideals attached to Hodge classes of hypersurfaces in P^{2k+1}.

Two constructions are provided.  For the class of a k-plane
Pi = V(l_0, ..., l_k) on X = V(sum l_i g_i) the ideal is <l_0..l_k, g_0..g_k>.
In general the ideal is read off from a representative f_gamma of degree
s = (k+1)(d-2): its degree-s piece is the annihilator of f_gamma under the
multiplication pairing of S/J into the top degree 2s, and lower pieces are
everything that multiplies into it.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import QQ, Polynomial, count_monomials, mono_mul
from .ideals import Ideal, IntersectionIdeal, jacobian_ideal, monomials_avoiding
from .linalg import left_kernel, rank, rref, solve


class HodgeIdealError(ValueError):
    pass


class GorensteinError(HodgeIdealError):
    def __init__(self, degree, reason):
        super().__init__(f"degree {degree}: {reason}")
        self.degree = degree
        self.reason = reason


@dataclass(frozen=True)
class LinearSpacePlane:
    """Pi = V(l_0, ..., l_k) cut out by independent linear forms."""

    forms: tuple

    def __post_init__(self):
        forms = tuple(self.forms)
        object.__setattr__(self, "forms", forms)
        if not forms:
            raise HodgeIdealError("a plane needs at least one linear form")
        for l in forms:
            if l.homogeneous_degree() != 1:
                raise HodgeIdealError(f"{l} is not a linear form")
        if rank(self.coefficient_matrix()) != len(forms):
            raise HodgeIdealError("linear forms are dependent")

    @classmethod
    def coordinate(cls, nvars, indices):
        return cls(tuple(Polynomial.variable(nvars, i) for i in indices))

    @property
    def nvars(self):
        return self.forms[0].nvars

    @property
    def k(self):
        return len(self.forms) - 1

    def coefficient_matrix(self):
        n = self.forms[0].nvars
        out = []
        for l in self.forms:
            row = [QQ(0)] * n
            for m, c in l.terms.items():
                row[m.index(1)] = c
            out.append(row)
        return out

    def __str__(self):
        return "V(" + ", ".join(str(l) for l in self.forms) + ")"


def plane_decomposition(f, plane):
    """Cofactors g_i with f = sum l_i g_i.

    The forms are brought to reduced echelon form l'_i = x_{p_i} + (other
    variables); each term of f is charged to the first l'_i whose pivot
    variable divides it, until no pivot variable remains.  The cofactors of
    the original forms follow by transposing the change of basis.
    """
    d = f.homogeneous_degree()
    if d is None:
        raise HodgeIdealError("f must be homogeneous and nonzero")
    n = f.nvars
    if plane.nvars != n:
        raise HodgeIdealError("plane and polynomial live in different rings")
    A = plane.coefficient_matrix()
    m = len(A)
    aug = [row + [QQ(int(i == j)) for j in range(m)] for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if len(pivots) < m or any(p >= n for p in pivots):
        raise HodgeIdealError("linear forms are dependent")
    reduced = [Polynomial(n, {tuple(int(j == c) for j in range(n)): row[c] for c in range(n) if row[c]})
               for row in R]
    transform = [row[n:] for row in R]       # reduced_i = sum_j transform[i][j] * l_j
    quotients = [dict() for _ in range(m)]
    rem = dict(f.terms)
    while True:
        hit = None
        for mono in sorted(rem, key=lambda x: tuple(-e for e in x)):
            for i, p in enumerate(pivots):
                if mono[p]:
                    hit = (mono, i, p)
                    break
            if hit:
                break
        if hit is None:
            break
        mono, i, p = hit
        c = rem[mono]
        q = mono[:p] + (mono[p] - 1,) + mono[p + 1:]
        quotients[i][q] = quotients[i].get(q, 0) + c
        for lm, lc in reduced[i].terms.items():
            mm = mono_mul(lm, q)
            v = rem.get(mm, 0) - c * lc
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    if rem:
        raise HodgeIdealError("f does not vanish on the plane")
    qpolys = [Polynomial(n, q) for q in quotients]
    gs = []
    for j in range(m):
        g = Polynomial.zero(n)
        for i in range(m):
            if transform[i][j]:
                g = g + qpolys[i].scale(transform[i][j])
        gs.append(g)
    total = Polynomial.zero(n)
    for l, g in zip(plane.forms, gs):
        total = total + l * g
    if total != f:
        raise HodgeIdealError("decomposition failed to reproduce f")
    return list(plane.forms), gs


@dataclass
class AssociatedIdeal:
    """The ideal of a Hodge class with its Gorenstein data."""

    ideal: object
    k: int
    d: int
    socle_degree: int
    socle_generator: tuple
    hilbert: list = field(default_factory=list)
    origin: str = "decomposition"

    @property
    def nvars(self):
        return self.ideal.nvars

    def hilbert_function(self, t, method=None):
        return self.ideal.hilbert_function(t, method)

    def length(self):
        return sum(self.hilbert)


def _check_kd(k, d):
    if k < 1:
        raise HodgeIdealError("k must be positive")
    if k * (d - 2) < 2:
        raise HodgeIdealError(f"need d >= 2 + 2/k, got k={k}, d={d}")


def associated_ideal_from_decomposition(ls, gs, method="degreewise", name=None, check=True):
    """<l_0..l_k, g_0..g_k> for a regular sequence of linear forms and cofactors."""
    if len(ls) != len(gs) or not ls:
        raise HodgeIdealError("need as many cofactors as linear forms")
    k = len(ls) - 1
    n = ls[0].nvars
    if n != 2 * k + 2:
        raise HodgeIdealError(f"a k-plane class needs {2 * k + 2} variables, got {n}")
    degs = {g.homogeneous_degree() for g in gs}
    if len(degs) != 1 or None in degs:
        raise HodgeIdealError("cofactors must be nonzero forms of one common degree")
    d = degs.pop() + 1
    _check_kd(k, d)
    ideal = Ideal(list(ls) + list(gs), n, method=method, name=name)
    s = (k + 1) * (d - 2)
    hilb = ideal.hilbert_vector(s + 1)
    expected = (d - 1) ** (k + 1)
    if hilb[s + 1] != 0 or sum(hilb) != expected:
        raise HodgeIdealError(
            f"not a regular sequence: quotient length {sum(hilb)} (expected {expected}), "
            f"h({s + 1}) = {hilb[s + 1]}")
    top = ideal.quotient_basis(s)
    ai = AssociatedIdeal(ideal, k, d, s, top[0] if len(top) == 1 else None, hilb[:s + 1])
    if check:
        check_gorenstein(ai)
    return ai


def associated_ideal_of_plane(f, plane, method="degreewise", name=None, check=True):
    ls, gs = plane_decomposition(f, plane)
    return associated_ideal_from_decomposition(ls, gs, method, name, check)


# ---------------------------------------------------------------------------
# Gorenstein structure

@dataclass
class GorensteinReport:
    socle_degree: int
    socle_generator: tuple
    hilbert: list
    pairing_ranks: list

    @property
    def symmetric(self):
        s = self.socle_degree
        return all(self.hilbert[t] == self.hilbert[s - t] for t in range(s + 1))


def socle_value(ideal, generator, m, method=None):
    """Coefficient of the socle generator in the normal form of monomial m."""
    return ideal.reduce_monomial(m, method).get(generator, QQ(0))


def pairing_matrix(ideal, generator, rows, cols, method=None):
    return [[socle_value(ideal, generator, mono_mul(a, b), method) for b in cols] for a in rows]


def check_gorenstein(ai, method=None):
    """Hilbert symmetry, one-dimensional socle, perfect pairings in every degree."""
    I, s = ai.ideal, ai.socle_degree
    hilb = [I.hilbert_function(t, method) for t in range(s + 2)]
    if hilb[0] != 1:
        raise GorensteinError(0, f"h(0) = {hilb[0]}")
    if hilb[s] != 1:
        raise GorensteinError(s, f"socle has dimension {hilb[s]}")
    if hilb[s + 1] != 0:
        raise GorensteinError(s + 1, f"h({s + 1}) = {hilb[s + 1]} is not zero")
    for t in range(s + 1):
        if hilb[t] != hilb[s - t]:
            raise GorensteinError(t, f"h({t}) = {hilb[t]} but h({s - t}) = {hilb[s - t]}")
    gen = I.quotient_basis(s, method)[0]
    ranks = []
    for t in range(s // 2 + 1):
        rows = I.quotient_basis(t, method)
        cols = I.quotient_basis(s - t, method)
        r = rank(pairing_matrix(I, gen, rows, cols, method))
        if r != len(rows):
            raise GorensteinError(t, f"pairing into the socle has rank {r} < {len(rows)}")
        ranks.append(r)
    ranks += list(reversed(ranks[: (s + 1) // 2]))
    ai.socle_generator = gen
    ai.hilbert = hilb[: s + 1]
    return GorensteinReport(s, gen, hilb[: s + 1], ranks)


# ---------------------------------------------------------------------------
# general construction from a class representative

class _JacobianQuotient:
    """S/J with its top-degree functional, for a smooth hypersurface."""

    def __init__(self, f):
        self.f = f
        self.nvars = f.nvars
        self.d = f.homogeneous_degree()
        self.J = jacobian_ideal(f)
        gb = self.J.groebner()
        if gb.missing_pure_powers():
            raise HodgeIdealError("hypersurface is singular (S/J is not Artinian)")
        self.gb = gb
        self.top = self.nvars * (self.d - 2)
        socle = gb.standard_monomials(self.top)
        if len(socle) != 1:
            raise HodgeIdealError("S/J does not have a one-dimensional top degree")
        self.socle = socle[0]
        self._sigma = {}

    def sigma(self, m):
        v = self._sigma.get(m)
        if v is None:
            v = self.gb.reduce_monomial(m).get(self.socle, QQ(0))
            self._sigma[m] = v
        return v

    def sigma_poly(self, terms):
        return sum((c * self.sigma(m) for m, c in terms.items()), QQ(0))

    def basis(self, t):
        return self.gb.standard_monomials(t)


class AncestorIdeal:
    """Graded pieces of the largest ideal with a prescribed piece in degree s.

    Piece t (t <= s) is J_t plus the kernel of (S/J)_t -> dual of (S/J)_{s-t},
    h -> (m -> sigma(h m f_gamma)); pieces above s are everything.
    """

    def __init__(self, quotient, f_gamma, s):
        self.q = quotient
        self.f_gamma = f_gamma
        self.s = s
        self.nvars = quotient.nvars
        self._pieces = {}

    def piece(self, t):
        if t in self._pieces:
            return self._pieces[t]
        rows = self.q.basis(t)
        cols = self.q.basis(self.s - t)
        mult = []
        for m in cols:
            prod = self.q.gb.reduce_terms({mono_mul(a, m): c for a, c in self.f_gamma.terms.items()})
            mult.append(prod)
        matrix = [[self.q.sigma_poly({mono_mul(b, u): c for u, c in F.items()}) for F in mult]
                  for b in rows]
        kernel = left_kernel(matrix, nrows=len(rows)) if rows else []
        if cols and rows:
            r = rank(matrix)
        else:
            r = 0
        self._pieces[t] = (rows, kernel, matrix, r)
        return self._pieces[t]

    def hilbert_function(self, t):
        if t > self.s:
            return 0
        return self.piece(t)[3]

    def contains(self, p):
        for t, terms in _by_degree(p).items():
            if t > self.s:
                continue
            rows, _, matrix, _ = self.piece(t)
            nf = self.q.gb.reduce_terms(terms)
            index = {b: i for i, b in enumerate(rows)}
            vec = [QQ(0)] * len(rows)
            for m, c in nf.items():
                vec[index[m]] = c
            for j in range(len(matrix[0]) if matrix else 0):
                if sum((vec[i] * matrix[i][j] for i in range(len(rows))), QQ(0)):
                    return False
        return True

    def basis_polynomials(self, t):
        """Kernel vectors lifted to S_t (together with J_t they span the piece)."""
        rows, kernel, _, _ = self.piece(t)
        return [Polynomial(self.nvars, {b: c for b, c in zip(rows, v) if c}) for v in kernel]


def _by_degree(p):
    out = {}
    for m, c in p.terms.items():
        out.setdefault(sum(m), {})[m] = c
    return out


def associated_ideal_general(f, f_gamma, method="degreewise", name=None, check=True):
    """The ideal of a Hodge class given by a representative f_gamma in degree (k+1)(d-2)."""
    n = f.nvars
    if n % 2:
        raise HodgeIdealError("ambient space must be P^{2k+1}")
    k = (n - 2) // 2
    d = f.homogeneous_degree()
    if d is None:
        raise HodgeIdealError("f must be homogeneous")
    _check_kd(k, d)
    s = (k + 1) * (d - 2)
    if f_gamma.homogeneous_degree() != s:
        raise HodgeIdealError(f"representative must have degree {s}")
    q = _JacobianQuotient(f)
    if not q.gb.reduce(f_gamma):
        raise HodgeIdealError("representative lies in J: the primitive part vanishes")
    anc = AncestorIdeal(q, f_gamma, s)
    # J_s lies in W: sigma(j f_gamma) = 0 holds by construction since j f_gamma is in J.
    gens = list(q.J.gens)
    ideal = Ideal(gens, n, method=method, name=name)
    for t in range(1, s + 1):
        for p in anc.basis_polynomials(t):
            if not ideal.contains(p):
                gens.append(p)
                ideal = Ideal(gens, n, method=method, name=name)
    if ideal.hilbert_function(s + 1) != 0:
        missing = [m for m in ideal.quotient_basis(s + 1)]
        gens.extend(Polynomial.monomial(m) for m in missing)
        ideal = Ideal(gens, n, method=method, name=name)
    top = ideal.quotient_basis(s)
    ai = AssociatedIdeal(ideal, k, d, s, top[0] if len(top) == 1 else None,
                         ideal.hilbert_vector(s), origin="representative")
    ai.ancestor = anc
    if check:
        check_gorenstein(ai)
    return ai


def class_representative(f, ai):
    """A representative f_gamma (up to scale) whose annihilator is I_s.

    Solves P y = c where P is the degree-s self-pairing of S/J and c_b is the
    socle coordinate of the standard monomial b modulo the given ideal.
    """
    q = _JacobianQuotient(f)
    s = ai.socle_degree
    basis = q.basis(s)
    gen = ai.socle_generator
    c = [socle_value(ai.ideal, gen, b) for b in basis]
    P = [[q.sigma(mono_mul(a, b)) for b in basis] for a in basis]
    y = solve(P, c)
    if y is None:
        raise HodgeIdealError("degree-s pairing of S/J is degenerate")
    return Polynomial(f.nvars, {b: v for b, v in zip(basis, y) if v})


def jacobian_in_ideal(f, ai, t):
    """Check J_t is contained in I_t, generator by generator."""
    J = jacobian_ideal(f)
    for g in J.gens:
        e = g.homogeneous_degree()
        if e is None or e > t:
            continue
        for m in monomials_avoiding(f.nvars, t - e):
            if not ai.ideal.contains(g.mul_term(m)):
                return False
    return True


# ---------------------------------------------------------------------------
# tangent spaces

def lemma_applies(k, d):
    """The identification codim T NL = codim I_d is asserted for k >= 2, d != 2 + 2/k."""
    return k >= 2 and k * (d - 2) != 2


def tangent_codim(ai, d=None, method=None):
    """codim of I_d in S_d, i.e. h_I(d)."""
    ideal = ai.ideal if isinstance(ai, AssociatedIdeal) else ai
    if d is None:
        d = ai.d
    return ideal.hilbert_function(d, method)


def joint_tangent_codim(ideals, d, method=None):
    """codim in S_d of the intersection of the degree-d pieces."""
    raw = [a.ideal if isinstance(a, AssociatedIdeal) else a for a in ideals]
    if not raw:
        raise HodgeIdealError("need at least one ideal")
    if len(raw) == 1:
        return raw[0].hilbert_function(d, method)
    return IntersectionIdeal(*raw, method=method).hilbert_function(d)


def ambient_dim(nvars, t):
    return count_monomials(nvars, t)
