"""Socle pairings and the parametric Gram matrix of psi_1 + nu psi_2.

Rows of the Gram matrix are standard monomials of (S/(I_1 cap I_2))_d and
columns those of degree s - d, where s is the common socle degree.  The
pattern of nonzero entries splits into bipartite components; everything
(rank, critical parameters, kernels) is computed block by block.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import QQ, NuPoly, format_monomial, mono_mul
from .hodge import AssociatedIdeal, HodgeIdealError
from .ideals import IntersectionIdeal, ideal_sum
from .linalg import (bareiss, evaluate_matrix, factor_roots, left_kernel, mat_vec_left,
                     rank, rank_over_number_field, real_root_intervals)


class PairingError(ValueError):
    pass


def _raw(ideal):
    return ideal.ideal if isinstance(ideal, AssociatedIdeal) else ideal


def socle_generator(ai, method=None):
    """Standard monomial spanning (S/I)_s."""
    basis = ai.ideal.quotient_basis(ai.socle_degree, method)
    if len(basis) != 1:
        raise PairingError(f"(S/I)_{ai.socle_degree} has dimension {len(basis)}, not 1")
    return basis[0]


class SoclePairing:
    """(p, q) -> coefficient of the socle monomial in NF_I(p q)."""

    def __init__(self, ai, method=None):
        self.ai = ai
        self.ideal = ai.ideal
        self.socle_degree = ai.socle_degree
        self.generator = socle_generator(ai, method)
        self.method = method
        self._cache = {}

    def monomial_value(self, m):
        v = self._cache.get(m)
        if v is None:
            v = self.ideal.reduce_monomial(m, self.method).get(self.generator, QQ(0))
            self._cache[m] = v
        return v

    def value_terms(self, terms):
        total = QQ(0)
        for m, c in terms.items():
            if sum(m) != self.socle_degree:
                raise PairingError(f"degree {sum(m)} is not the socle degree {self.socle_degree}")
            total += c * self.monomial_value(m)
        return total

    def __call__(self, p, q):
        return pairing_value(self, p, q)


def pairing_value(P, p, q):
    dp, dq = p.homogeneous_degree(), q.homogeneous_degree()
    if p.is_zero() or q.is_zero():
        return QQ(0)
    if dp is None or dq is None or dp + dq != P.socle_degree:
        raise PairingError(f"degrees {dp} + {dq} do not add up to {P.socle_degree}")
    return P.value_terms((p * q).terms)


# ---------------------------------------------------------------------------
# block structure

NAMED_SHAPES = {
    "(1)": [[NuPoly((1,))]],
    "(nu)": [[NuPoly((0, 1))]],
    "(1 nu)": [[NuPoly((1,)), NuPoly((0, 1))]],
    "3x3": [[NuPoly(()), NuPoly((1,)), NuPoly((0, 1))],
            [NuPoly((1,)), NuPoly((-1,)), NuPoly(())],
            [NuPoly((0, 1)), NuPoly(()), NuPoly((0, -1))]],
}


def _entry_key(p, sign):
    c = tuple(sign * x for x in p.coeffs) if p else ()
    return tuple((int(x.numerator), int(x.denominator)) for x in c)


def canonical_form(matrix, limit=4):
    """Smallest entry tuple over row/column permutations and sign flips.

    Two small blocks are equivalent under these moves iff their canonical
    forms agree.  Returns None when a side exceeds ``limit``.
    """
    r = len(matrix)
    c = len(matrix[0]) if r else 0
    if r > limit or c > limit:
        return None
    best = None
    for rp in itertools.permutations(range(r)):
        for cp in itertools.permutations(range(c)):
            for rs in itertools.product((1, -1), repeat=r):
                for cs in itertools.product((1, -1), repeat=c):
                    key = tuple(_entry_key(matrix[rp[i]][cp[j]], rs[i] * cs[j])
                                for i in range(r) for j in range(c))
                    if best is None or key < best:
                        best = key
    return (r, c, best)


_NAMED_KEYS = {canonical_form(m): name for name, m in NAMED_SHAPES.items()}


@dataclass
class Block:
    rows: list
    cols: list
    label: str
    entries: list = field(repr=False, default_factory=list)
    rank: int = 0
    minor: NuPoly = None

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))


def find_blocks(entries, nrows, ncols):
    """Connected components of the bipartite graph of nonzero entries."""
    parent = list(range(nrows + ncols))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(nrows):
        for j in range(ncols):
            if entries[i][j]:
                a, b = find(i), find(nrows + j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    groups = {}
    for v in range(nrows + ncols):
        groups.setdefault(find(v), []).append(v)
    out = []
    for root in sorted(groups):
        members = groups[root]
        rows = [v for v in members if v < nrows]
        cols = [v - nrows for v in members if v >= nrows]
        out.append((rows, cols))
    return out


def label_block(matrix):
    if not matrix or not matrix[0]:
        return f"{len(matrix)}x{len(matrix[0]) if matrix else 0}"
    key = canonical_form(matrix)
    name = _NAMED_KEYS.get(key)
    if name is not None:
        return name
    return f"{len(matrix)}x{len(matrix[0])}"


# ---------------------------------------------------------------------------
# Gram report

@dataclass
class CriticalValue:
    value: object            # Fraction for rational roots, else None
    polynomial: NuPoly       # minimal polynomial of the value (monic)
    corank: int
    intervals: list = field(default_factory=list)

    def __str__(self):
        if self.value is not None:
            return str(self.value)
        return f"root of {self.polynomial}"


@dataclass
class GramReport:
    rows: list
    cols: list
    entries: list = field(repr=False)
    row_degree: int
    col_degree: int
    blocks: list = field(default_factory=list)
    generic_rank: int | None = None
    critical: list | None = None
    certification: list = field(default_factory=list)

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))

    def zero_rows(self):
        return [i for i, row in enumerate(self.entries) if not any(row)]

    def census(self):
        counts = {}
        for b in self.blocks:
            counts[b.label] = counts.get(b.label, 0) + 1
        return dict(sorted(counts.items()))

    def max_nu_degree(self):
        return max((e.degree() for row in self.entries for e in row if e), default=-1)

    def evaluate(self, nu0):
        return evaluate_matrix(self.entries, nu0)

    def block_permuted(self):
        """Rows and columns reordered block by block."""
        rorder = [i for b in self.blocks for i in b.rows]
        corder = [j for b in self.blocks for j in b.cols]
        return [[self.entries[i][j] for j in corder] for i in rorder], rorder, corder


def gram_matrix(I1, I2, row_degree=None, col_degree=None, method=None, check=True):
    """Gram matrix of psi_1 + nu psi_2 on (S/I_1 cap I_2)_d x (S/I_1 cap I_2)_{s-d}."""
    if not isinstance(I1, AssociatedIdeal) or not isinstance(I2, AssociatedIdeal):
        raise PairingError("gram_matrix needs associated ideals")
    if I1.socle_degree != I2.socle_degree or I1.nvars != I2.nvars:
        raise PairingError("the two ideals have different socle degrees or rings")
    s = I1.socle_degree
    k, d = I1.k, I1.d
    if row_degree is None:
        row_degree = d
    if col_degree is None:
        col_degree = k * d - 2 * k - 2
    if row_degree + col_degree != s:
        raise PairingError(f"degrees {row_degree} + {col_degree} differ from socle degree {s}")
    if check:
        from .hodge import check_gorenstein
        for ai in (I1, I2):
            try:
                check_gorenstein(ai, method)
            except HodgeIdealError as exc:
                raise PairingError(f"input ideal is not Gorenstein: {exc}") from exc
    inter = IntersectionIdeal(I1.ideal, I2.ideal, method)
    rows = inter.quotient_basis(row_degree)
    cols = inter.quotient_basis(col_degree)
    p1, p2 = SoclePairing(I1, method), SoclePairing(I2, method)
    entries = []
    for r in rows:
        line = []
        for c in cols:
            m = mono_mul(r, c)
            line.append(NuPoly((p1.monomial_value(m), p2.monomial_value(m))))
        entries.append(line)
    G = GramReport(rows, cols, entries, row_degree, col_degree)
    G.intersection = inter
    for rws, cls in find_blocks(entries, len(rows), len(cols)):
        sub = [[entries[i][j] for j in cls] for i in rws]
        G.blocks.append(Block(rws, cls, label_block(sub), sub))
    return G


def _block_bareiss(G):
    for b in G.blocks:
        if b.minor is None:
            if b.rows and b.cols:
                res = bareiss(b.entries)
                b.rank, b.minor = res.rank, res.minor
            else:
                b.rank, b.minor = 0, NuPoly((1,))


def rank_at(G, nu0):
    """Exact rank at a rational parameter value, block by block."""
    total = 0
    for b in G.blocks:
        if b.rows and b.cols:
            total += rank(evaluate_matrix(b.entries, nu0))
    return total


def _rank_at_root(G, modulus):
    total = 0
    for b in G.blocks:
        if b.rows and b.cols:
            total += rank_over_number_field(b.entries, modulus)
    return total


def generic_rank(G, seed=0):
    """Rank over Q(nu): sum of the block ranks from fraction-free elimination.

    Certified by exact evaluation at two random rationals avoiding the
    critical set.
    """
    if G.generic_rank is not None:
        return G.generic_rank
    _block_bareiss(G)
    G.generic_rank = sum(b.rank for b in G.blocks)
    crit = critical_nu_values(G)
    bad = {c.value for c in crit if c.value is not None}
    rng = random.Random(seed)
    checks = []
    while len(checks) < 2:
        nu0 = Fraction(rng.randint(-997, 997), rng.randint(1, 97))
        if nu0 in bad or any(c.polynomial.evaluate(QQ(nu0)) == 0 for c in crit):
            continue
        r = rank_at(G, QQ(nu0))
        checks.append((nu0, r))
        if r != G.generic_rank:
            raise ArithmeticError(f"rank {r} at nu = {nu0} differs from generic rank {G.generic_rank}")
    G.certification = checks
    return G.generic_rank


def critical_nu_values(G):
    """Parameter values where the rank drops, with coranks.

    A drop at nu_0 forces every maximal minor of a block to vanish there, in
    particular the one returned by elimination; its roots are the candidates
    and each one is confirmed by an exact rank computation.
    """
    if G.critical is not None:
        return G.critical
    _block_bareiss(G)
    generic = sum(b.rank for b in G.blocks)
    candidates_rational = set()
    candidates_irrational = {}
    for b in G.blocks:
        if b.minor is None or b.minor.degree() <= 0:
            continue
        rational, factors = factor_roots(b.minor)
        candidates_rational.update(rational)
        for fac in factors:
            candidates_irrational[fac.coeffs] = fac
    out = []
    for v in sorted(candidates_rational):
        r = rank_at(G, QQ(v))
        if r < generic:
            out.append(CriticalValue(Fraction(int(QQ(v).numerator), int(QQ(v).denominator)),
                                     NuPoly((-QQ(v), QQ(1))), generic - r))
    for key in sorted(candidates_irrational):
        fac = candidates_irrational[key]
        r = _rank_at_root(G, fac)
        if r < generic:
            out.append(CriticalValue(None, fac, generic - r, real_root_intervals(fac)))
    G.critical = out
    return out


def left_kernel_at(G, nu0):
    """Basis of {w : w^T G(nu0) = 0}, each vector re-checked against the full matrix."""
    nu0 = QQ(nu0)
    n = len(G.rows)
    basis = []
    for b in G.blocks:
        if not b.rows:
            continue
        if not b.cols:
            sub_kernel = [[QQ(int(i == j)) for j in range(len(b.rows))] for i in range(len(b.rows))]
        else:
            sub_kernel = left_kernel(evaluate_matrix(b.entries, nu0))
        for v in sub_kernel:
            w = [QQ(0)] * n
            for i, x in zip(b.rows, v):
                w[i] = x
            basis.append(w)
    M = G.evaluate(nu0)
    for w in basis:
        if any(mat_vec_left(w, M)):
            raise ArithmeticError("left kernel vector failed verification")
    return basis


# ---------------------------------------------------------------------------
# nu-free criterion

@dataclass
class TspResult:
    holds: bool
    infeasible: bool
    reference: int
    row_degree: int
    col_degree: int
    rows: int
    cols: int
    rank: int | None
    witness: list | None = None

    @property
    def left_kernel_dim(self):
        return None if self.rank is None else self.rows - self.rank


def _relative_basis(ref, other_sum, t, method):
    """Basis of ((I_1 + I_2)/I_ref)_t as vectors over the standard monomials of I_ref."""
    std = ref.quotient_basis(t, method)
    target = other_sum.quotient_basis(t, method)
    index = {m: i for i, m in enumerate(target)}
    images = []
    for m in std:
        nf = other_sum.reduce_monomial(m, method)
        row = [QQ(0)] * len(target)
        for mm, c in nf.items():
            row[index[mm]] = c
        images.append(row)
    if not target:
        kernel = [[QQ(int(i == j)) for j in range(len(std))] for i in range(len(std))]
    else:
        kernel = left_kernel(images, nrows=len(std))
    return std, kernel


def thmTsp_criterion(I1, I2, d=None, k=None, reference=2, method=None):
    """Zero left kernel of ((I_1+I_2)/I_ref)_d x ((I_1+I_2)/I_ref)_{kd-2k-2} -> (S/I_ref)_s."""
    if d is None:
        d = I1.d
    if k is None:
        k = I1.k
    e = k * d - 2 * k - 2
    ref = I2 if reference == 2 else I1
    if d > e:
        return TspResult(False, True, reference, d, e, 0, 0, None)
    total = ideal_sum(I1.ideal, I2.ideal)
    pairing = SoclePairing(ref, method)
    std_d, U = _relative_basis(ref.ideal, total, d, method)
    std_e, V = _relative_basis(ref.ideal, total, e, method)
    P = [[pairing.monomial_value(mono_mul(a, b)) for b in std_e] for a in std_d]
    UP = [mat_vec_left(u, P) for u in U]
    G = [[sum((x * y for x, y in zip(row, v)), QQ(0)) for v in V] for row in UP]
    if not U:
        return TspResult(True, False, reference, d, e, 0, len(V), 0)
    r = rank(G) if V else 0
    witness = None
    if r < len(U):
        w = left_kernel(G, nrows=len(U))[0] if V else [QQ(int(i == 0)) for i in range(len(U))]
        vec = [QQ(0)] * len(std_d)
        for wi, u in zip(w, U):
            for j, x in enumerate(u):
                vec[j] += wi * x
        witness = [(format_monomial(m), c) for m, c in zip(std_d, vec) if c]
    return TspResult(r == len(U), False, reference, d, e, len(U), len(V), r, witness)


# ---------------------------------------------------------------------------
# excess

@dataclass
class ExcessSample:
    nu: Fraction
    rank: int
    excess: int
    combined_codim: int
    verdict: str


@dataclass
class ExcessReport:
    joint_codim: int
    rows: int
    generic_rank: int
    generic_excess: int
    critical: list
    samples: list

    def verdict_at(self, nu):
        for s in self.samples:
            if s.nu == nu:
                return s.verdict
        raise KeyError(nu)


def excess_report(G, nu_samples, joint_codim=None):
    """Left-kernel dimension and verdict for each sample value of nu.

    The combined tangent space has codimension rank(nu): the joint one has
    codimension |C_1| and the left kernel adds |C_1| - rank(nu) dimensions.
    """
    gr = generic_rank(G)
    crit = critical_nu_values(G)
    n = len(G.rows)
    if joint_codim is None:
        joint_codim = n
    samples = []
    for nu in nu_samples:
        nu = Fraction(nu)
        r = rank_at(G, QQ(nu))
        ex = n - r
        samples.append(ExcessSample(nu, r, ex, r, "EXCESS" if ex > 0 else "NO-EXCESS"))
    return ExcessReport(joint_codim, n, gr, n - gr, crit, samples)
