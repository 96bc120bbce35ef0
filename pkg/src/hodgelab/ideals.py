"""Graded ideals: Groebner bases, degreewise echelon spans, Hilbert functions.

Two engines compute the same quotient data.  The Groebner engine runs
Buchberger's algorithm; the degreewise engine row-reduces the span of all
monomial multiples of the generators inside S_t.  With pivots taken at
leading monomials both yield the same normal forms and standard monomials,
which is what the cross-checks rely on.
"""
from __future__ import annotations

import heapq
import logging

from dataclasses import dataclass, field

import numpy as np
import sympy

from .algebra import (
    GREVLEX, QQ, MonomialOrder, Polynomial, count_monomials, format_polynomial, mono_div,
    mono_divides, mono_lcm, mono_mul,
)

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# monomial enumeration avoiding a monomial ideal

def monomials_avoiding(nvars, degree, avoid=(), order=GREVLEX, variables=None):
    """Degree-``degree`` monomials not divisible by any monomial in ``avoid``.

    Returned ascending in ``order``.  The search prunes on divisibility, so
    the cost tracks the size of the answer rather than of S_t.
    """
    if degree < 0:
        return []
    allowed = [True] * nvars if variables is None else [i in set(variables) for i in range(nvars)]
    by_last = [[] for _ in range(nvars)]
    for a in avoid:
        support = [i for i, e in enumerate(a) if e]
        if not support:
            return []
        if all(allowed[i] for i in support):
            by_last[support[-1]].append(a)
    free = [i for i in range(nvars) if allowed[i]]
    if not free:
        return [(0,) * nvars] if degree == 0 else []
    last_free = free[-1]
    out = []
    exps = [0] * nvars

    def blocked(i):
        for a in by_last[i]:
            for j in range(i + 1):
                if a[j] > exps[j]:
                    break
            else:
                return True
        return False

    def rec(pos, remaining):
        i = free[pos]
        if i == last_free:
            exps[i] = remaining
            if not blocked(i):
                out.append(tuple(exps))
            exps[i] = 0
            return
        for e in range(remaining + 1):
            exps[i] = e
            if by_last[i] and blocked(i):
                break
            rec(pos + 1, remaining - e)
        exps[i] = 0

    rec(0, degree)
    return order.sort(out)


# ---------------------------------------------------------------------------
# reduction kernel shared by both engines

def _reverse_key(order):
    """Key under which heapq pops the *largest* monomial first."""
    if order.kind == "grevlex" and order.perm is None:
        return lambda m: (-sum(m), m[::-1])
    if order.kind == "grlex" and order.perm is None:
        return lambda m: (-sum(m), tuple(-e for e in m))

    def rk(m):
        deg, rest = order.key(m)[0], order.key(m)[1:]
        return (-deg,) + tuple(tuple(-x for x in r) if isinstance(r, tuple) else -r for r in rest)
    return rk


def _reduce_terms(terms, find_reducer, rkey):
    """Fully reduce ``terms`` (a dict, consumed) and return the remainder dict.

    ``find_reducer(m)`` returns ``(q, tail)`` where ``m = q * lead`` for a
    monic reducer whose non-leading terms are ``tail``, or None.
    """
    heap = [(rkey(m), m) for m in terms]
    heapq.heapify(heap)
    queued = set(terms)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = terms.pop(m, None)
        if not c:
            continue
        hit = find_reducer(m)
        if hit is None:
            rem[m] = c
            continue
        q, tail = hit
        for tm, tc in tail:
            mm = tuple(a + b for a, b in zip(tm, q)) if q is not None else tm
            v = terms.get(mm)
            if v is None:
                terms[mm] = -c * tc
                if mm not in queued:
                    queued.add(mm)
                    heapq.heappush(heap, (rkey(mm), mm))
            else:
                v -= c * tc
                if v:
                    terms[mm] = v
                else:
                    del terms[mm]
    return rem


def _reduce_terms_mod(terms, find_reducer, rkey, p):
    """``_reduce_terms`` with integer coefficients modulo the prime ``p``."""
    heap = [(rkey(m), m) for m in terms]
    heapq.heapify(heap)
    queued = set(terms)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = terms.pop(m, None)
        if not c:
            continue
        hit = find_reducer(m)
        if hit is None:
            rem[m] = c
            continue
        q, tail = hit
        for tm, tc in tail:
            mm = tuple(a + b for a, b in zip(tm, q))
            v = terms.get(mm)
            if v is None:
                terms[mm] = (-c * tc) % p
                if mm not in queued:
                    queued.add(mm)
                    heapq.heappush(heap, (rkey(mm), mm))
            else:
                v = (v - c * tc) % p
                if v:
                    terms[mm] = v
                else:
                    del terms[mm]
    return rem


def _support_mask(m):
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


# ---------------------------------------------------------------------------
# Groebner bases

class GroebnerBasis:
    """A reduced Groebner basis (monic elements, ascending leading monomials)."""

    def __init__(self, polys, order, nvars):
        self.order = order
        self.nvars = nvars
        self.basis = sorted(polys, key=lambda p: order.key(p.leading_term(order)[0]))
        self._rkey = _reverse_key(order)
        self._prepare()

    def _prepare(self):
        self.leading_monomials = [p.leading_term(self.order)[0] for p in self.basis]
        self._entries = []
        for p, lm in zip(self.basis, self.leading_monomials):
            tail = tuple((m, c) for m, c in p.terms.items() if m != lm)
            self._entries.append((lm, _support_mask(lm), tail))
        self._nf_cache = {}

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def _find_reducer(self, m):
        mask = _support_mask(m)
        for lm, lmask, tail in self._entries:
            if lmask & ~mask:
                continue
            if all(a <= b for a, b in zip(lm, m)):
                return tuple(b - a for a, b in zip(lm, m)), tail
        return None

    def reduce_terms(self, terms):
        return _reduce_terms(dict(terms), self._find_reducer, self._rkey)

    def reduce(self, p):
        """Normal form of ``p``: no remaining term is divisible by a leading monomial."""
        return Polynomial._raw(self.nvars, self.reduce_terms(p.terms))

    def reduce_monomial(self, m):
        r = self._nf_cache.get(m)
        if r is None:
            r = self.reduce_terms({m: QQ(1)})
            self._nf_cache[m] = r
        return r

    def contains(self, p):
        return not self.reduce_terms(p.terms)

    def standard_monomials(self, t):
        return monomials_avoiding(self.nvars, t, self.leading_monomials, self.order)

    def hilbert(self, t):
        return len(self.standard_monomials(t))

    def is_unit(self):
        return any(sum(m) == 0 for m in self.leading_monomials)

    def missing_pure_powers(self):
        """Variables with no pure power among the leading monomials (empty iff Artinian)."""
        have = set()
        for m in self.leading_monomials:
            support = [i for i, e in enumerate(m) if e]
            if len(support) == 1:
                have.add(support[0])
            elif not support:
                return []
        return [i for i in range(self.nvars) if i not in have]

    def is_artinian(self):
        return not self.missing_pure_powers()

    def check_criterion(self):
        """Buchberger's criterion: every S-polynomial reduces to zero."""
        for i in range(len(self.basis)):
            for j in range(i + 1, len(self.basis)):
                if self.reduce(s_polynomial(self.basis[i], self.basis[j], self.order)):
                    return False
        return True


def s_polynomial(f, g, order=GREVLEX):
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    return f.mul_term(mono_div(lcm, mf), 1 / cf) - g.mul_term(mono_div(lcm, mg), 1 / cg)


def _monic(terms, lm, p=None):
    c = terms[lm]
    if c == 1:
        return terms
    if p is not None:
        inv = pow(int(c), -1, p)
        return {m: v * inv % p for m, v in terms.items()}
    inv = 1 / c
    return {m: v * inv for m, v in terms.items()}


def _to_modular(poly, p):
    """Coefficients of poly as residues mod p; None if p divides a denominator."""
    out = {}
    for m, c in poly.terms.items():
        den = int(c.denominator)
        if den % p == 0:
            return None
        v = int(c.numerator) * pow(den, -1, p) % p
        if v:
            out[m] = v
    return out


def _variable_blocks(gens, nvars):
    """Partition generator indices into groups with pairwise disjoint variables."""
    parent = list(range(nvars))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    used = [g.variables_used() for g in gens]
    for vs in used:
        vs = sorted(vs)
        for a, b in zip(vs, vs[1:]):
            parent[find(a)] = find(b)
    groups = {}
    for idx, vs in enumerate(used):
        root = find(min(vs)) if vs else -1
        groups.setdefault(root, []).append(idx)
    return [groups[r] for r in sorted(groups)]


def buchberger(gens, order=GREVLEX, nvars=None, split=True):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed by ascending lcm (normal strategy) and pruned with
    the Gebauer-Moeller criteria.  Generators in disjoint sets of variables
    are handled independently: the union of the separate bases is already a
    Groebner basis since leading monomials from different blocks are coprime.
    """
    gens = [g for g in gens if g]
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required for an empty generator list")
        nvars = gens[0].nvars
    if not gens:
        return GroebnerBasis([], order, nvars)
    if split:
        blocks = _variable_blocks(gens, nvars)
        if len(blocks) > 1 and -1 not in [min(g.variables_used(), default=-1) for g in gens]:
            polys = []
            for blk in blocks:
                polys.extend(_buchberger([gens[i] for i in blk], order, nvars))
            if any(sum(p.leading_term(order)[0]) == 0 for p in polys):
                polys = [Polynomial.constant(nvars, 1)]
            return GroebnerBasis(polys, order, nvars)
    return GroebnerBasis(_buchberger(gens, order, nvars), order, nvars)


def modular_leading_monomials(gens, p, order=GREVLEX, nvars=None):
    """Leading monomials of a minimal Groebner basis of the reduction mod p.

    Generators are scaled to integer coefficients first; one whose
    reduction vanishes is dropped.  Returns None if p divides a denominator.
    """
    if nvars is None:
        nvars = gens[0].nvars
    reduced = []
    for g in gens:
        if not g:
            continue
        if _to_modular(g, p) is None:
            return None
        reduced.append(g)
    key = order.key
    out = []
    for blk in _variable_blocks(reduced, nvars) if reduced else []:
        for terms in _buchberger([reduced[i] for i in blk], order, nvars, modulus=p):
            out.append(max(terms, key=key))
    return out


def _buchberger(gens, order, nvars, modulus=None):
    key = order.key
    rkey = _reverse_key(order)
    polys = []      # dict terms, monic
    lms = []
    masks = []
    active = []     # indices of the current (non-redundant) basis
    pairs = set()
    queue = []      # (key(lcm), tiebreak, kind, payload)
    counter = 0

    # Any basis element whose leading monomial divides m is a valid reducer,
    # redundant ones included, so hits are cached for good and misses only
    # need to look at elements added since.
    seen = {}

    def find_reducer(m):
        hit = seen.get(m)
        if hit is not None and hit[0] is not None:
            return hit
        start = 0 if hit is None else hit[1]
        mask = _support_mask(m)
        for i in range(start, len(lms)):
            if masks[i] & ~mask:
                continue
            lm = lms[i]
            if all(a <= b for a, b in zip(lm, m)):
                res = (tuple(b - a for a, b in zip(lm, m)), tails[i])
                seen[m] = res
                return res
        seen[m] = (None, len(lms))
        return None

    tails = []

    for g in gens:
        terms = dict(g.terms) if modulus is None else _to_modular(g, modulus)
        if not terms:
            continue
        m = max(terms, key=key)
        heapq.heappush(queue, (key(m), counter, "gen", terms))
        counter += 1

    lm_rows = []    # numpy copy of leading monomials, row i <-> polys[i]
    pair_lcm = {}   # (i, j) -> lcm of leading monomials

    def update(ih):
        nonlocal counter
        mh = np.array(lms[ih], dtype=np.int64)
        act = np.array(active, dtype=np.int64)
        if len(act):
            A = np.array([lm_rows[i] for i in active], dtype=np.int64)
            L = np.maximum(A, mh)
            coprime = (L == A + mh).all(axis=1)
            # chain criterion M: some other lcm properly divides this one
            div = (L[:, None, :] <= L[None, :, :]).all(axis=2)   # div[a, b]: L_a | L_b
            eq = div & div.T
            proper = div & ~eq
            keep = ~proper.any(axis=0)
            # criterion F: one representative per lcm class; drop the class if any member is coprime
            chosen = []
            seen = {}
            for a in np.nonzero(keep)[0]:
                key_l = L[a].tobytes()
                if key_l in seen:
                    seen[key_l][1] = seen[key_l][1] or bool(coprime[a])
                    continue
                seen[key_l] = [a, bool(coprime[a])]
            for a, has_coprime in seen.values():
                if not has_coprime:
                    chosen.append(int(act[a]))
        else:
            chosen = []
        # drop old pairs made redundant by h
        if pair_lcm:
            keys = list(pair_lcm)
            P = np.array([pair_lcm[k] for k in keys], dtype=np.int64)
            Li = np.maximum(np.array([lm_rows[i] for i, _ in keys], dtype=np.int64), mh)
            Lj = np.maximum(np.array([lm_rows[j] for _, j in keys], dtype=np.int64), mh)
            hdiv = (mh <= P).all(axis=1)
            drop = hdiv & (Li != P).any(axis=1) & (Lj != P).any(axis=1)
            for k, dflag in zip(keys, drop):
                if dflag:
                    del pair_lcm[k]
                    pairs.discard(k)
        for ig in sorted(chosen):
            p = (ig, ih)
            lcm = mono_lcm(lms[ig], lms[ih])
            pairs.add(p)
            pair_lcm[p] = lcm
            heapq.heappush(queue, (key(lcm), counter, "pair", p))
            counter += 1
        active[:] = [ig for ig in active if not mono_divides(lms[ih], lms[ig])] + [ih]

    while queue:
        _, _, kind, payload = heapq.heappop(queue)
        if kind == "pair":
            if payload not in pairs:
                continue
            pairs.discard(payload)
            pair_lcm.pop(payload, None)
            i, j = payload
            lcm = mono_lcm(lms[i], lms[j])
            qi, qj = mono_div(lcm, lms[i]), mono_div(lcm, lms[j])
            terms = {}
            for m, c in polys[i].items():
                terms[mono_mul(m, qi)] = c
            for m, c in polys[j].items():
                mm = mono_mul(m, qj)
                v = terms.get(mm, 0) - c
                if modulus is not None:
                    v %= modulus
                if v:
                    terms[mm] = v
                else:
                    terms.pop(mm, None)
        else:
            terms = payload
        if modulus is None:
            rem = _reduce_terms(terms, find_reducer, rkey)
        else:
            rem = _reduce_terms_mod(terms, find_reducer, rkey, modulus)
        if not rem:
            continue
        lm = max(rem, key=key)
        rem = _monic(rem, lm, modulus)
        if sum(lm) == 0:
            return [{lm: 1}] if modulus is not None else [Polynomial.constant(nvars, 1)]
        lm_rows.append(lm)
        polys.append(rem)
        lms.append(lm)
        masks.append(_support_mask(lm))
        tails.append(tuple((m, c) for m, c in rem.items() if m != lm))
        update(len(polys) - 1)

    # minimal then interreduced
    basis = [i for i in active]
    basis.sort(key=lambda i: key(lms[i]))
    minimal = []
    for i in basis:
        if not any(mono_divides(lms[j], lms[i]) for j in minimal):
            minimal.append(i)
    if modulus is not None:
        return [polys[i] for i in minimal]
    result = []
    final = GroebnerBasis([Polynomial._raw(nvars, polys[i]) for i in minimal], order, nvars)
    for idx, i in enumerate(minimal):
        lm = lms[i]
        tail = {m: c for m, c in polys[i].items() if m != lm}
        red = final.reduce_terms(tail)
        red[lm] = QQ(1)
        result.append(Polynomial._raw(nvars, red))
    return result


# ---------------------------------------------------------------------------
# degreewise engine

class EchelonSpan:
    """Semi-echelon basis of a subspace of S_t, pivots at leading monomials.

    ``monomial_ideal`` lists monomials whose multiples are known to lie in the
    span; they act as implicit single-term pivot rows.
    """

    def __init__(self, nvars, order=GREVLEX, monomial_ideal=()):
        self.nvars = nvars
        self.order = order
        self.rows = {}
        self._masks = [(m, _support_mask(m)) for m in monomial_ideal]
        self.monomial_ideal = tuple(monomial_ideal)
        self._rkey = _reverse_key(order)

    def in_monomial_part(self, m):
        mask = _support_mask(m)
        for a, amask in self._masks:
            if amask & ~mask:
                continue
            if all(x <= y for x, y in zip(a, m)):
                return True
        return False

    def reduce_terms(self, terms):
        terms = {m: c for m, c in terms.items() if not self.in_monomial_part(m)}
        return _reduce_terms(terms, self._find_row, self._rkey)

    def _find_row(self, m):
        row = self.rows.get(m)
        return None if row is None else (None, row)

    def add(self, terms):
        rem = self.reduce_terms(terms)
        if not rem:
            return False
        lm = max(rem, key=self.order.key)
        rem = _monic(rem, lm)
        self.rows[lm] = tuple((m, c) for m, c in rem.items() if m != lm)
        return True

    def pivots(self):
        return set(self.rows)


class DegreePiece:
    """The degree-t piece of an ideal, row-reduced inside S_t."""

    def __init__(self, ideal, t):
        self.t = t
        self.nvars = ideal.nvars
        self.order = ideal.order
        mono_gens = [next(iter(g.terms)) for g in ideal.gens if len(g.terms) == 1]
        self.span = EchelonSpan(ideal.nvars, ideal.order, mono_gens)
        for g in ideal.gens:
            if len(g.terms) == 1:
                continue
            e = g.homogeneous_degree()
            if e is None or e > t:
                continue
            for m in monomials_avoiding(self.nvars, t - e, mono_gens, self.order):
                self.span.add({mono_mul(gm, m): c for gm, c in g.terms.items()})
        candidates = monomials_avoiding(self.nvars, t, mono_gens, self.order)
        pivots = self.span.rows
        self.standard = [m for m in candidates if m not in pivots]
        self._nf_cache = {}

    @property
    def dim_quotient(self):
        return len(self.standard)

    @property
    def dim_ideal(self):
        return count_monomials(self.nvars, self.t) - len(self.standard)

    def reduce_terms(self, terms):
        return self.span.reduce_terms(terms)

    def reduce_monomial(self, m):
        r = self._nf_cache.get(m)
        if r is None:
            r = self.span.reduce_terms({m: QQ(1)})
            self._nf_cache[m] = r
        return r

    def contains(self, terms):
        return not self.span.reduce_terms(terms)


# ---------------------------------------------------------------------------
# ideals

class Ideal:
    """Homogeneous ideal given by generators, with cached engines.

    ``method`` picks the default engine for quotient data: "degreewise"
    (echelon span of I_t) or "groebner".
    """

    def __init__(self, gens, nvars=None, order=GREVLEX, method="degreewise", name=None):
        gens = [g for g in gens if g]
        if nvars is None:
            if not gens:
                raise ValueError("nvars is required for the zero ideal")
            nvars = gens[0].nvars
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generators live in different rings")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
        self.gens = gens
        self.nvars = nvars
        self.order = order
        self.method = method
        self.name = name
        self._gb = None
        self._pieces = {}

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"<Ideal {label}{len(self.gens)} generators in {self.nvars} variables>"

    def with_order(self, order):
        return Ideal(self.gens, self.nvars, order, self.method, self.name)

    def groebner(self):
        if self._gb is None:
            self._gb = buchberger(self.gens, self.order, self.nvars)
        return self._gb

    def piece(self, t):
        p = self._pieces.get(t)
        if p is None:
            p = DegreePiece(self, t)
            self._pieces[t] = p
        return p

    def _method(self, method):
        method = method or self.method
        if method not in ("degreewise", "groebner"):
            raise ValueError(f"unknown method {method!r}")
        return method

    def hilbert_function(self, t, method=None):
        if t < 0:
            return 0
        if self._method(method) == "groebner":
            return self.groebner().hilbert(t)
        return self.piece(t).dim_quotient

    def hilbert_vector(self, upto, method=None):
        return [self.hilbert_function(t, method) for t in range(upto + 1)]

    def quotient_basis(self, t, method=None):
        if self._method(method) == "groebner":
            return self.groebner().standard_monomials(t)
        return list(self.piece(t).standard)

    def normal_form(self, p, method=None):
        if self._method(method) == "groebner":
            return self.groebner().reduce(p)
        out = {}
        by_degree = {}
        for m, c in p.terms.items():
            by_degree.setdefault(sum(m), {})[m] = c
        for t, terms in by_degree.items():
            out.update(self.piece(t).reduce_terms(terms))
        return Polynomial._raw(self.nvars, out)

    def reduce_monomial(self, m, method=None):
        """Normal form of a monomial as a dict (cached)."""
        if self._method(method) == "groebner":
            return self.groebner().reduce_monomial(m)
        return self.piece(sum(m)).reduce_monomial(m)

    def contains(self, p, method=None):
        return not self.normal_form(p, method)

    def degree_span_dim(self, t, method=None):
        return count_monomials(self.nvars, t) - self.hilbert_function(t, method)

    def __add__(self, other):
        return ideal_sum(self, other)


def ideal_sum(a, b):
    if a.nvars != b.nvars:
        raise ValueError("ideals live in different rings")
    return Ideal(a.gens + b.gens, a.nvars, a.order, a.method)


# ---------------------------------------------------------------------------
# quotient pieces presented through a linear map (used for intersections)

class _TrackedEchelon:
    """Echelon form of image vectors that remembers each row's preimage."""

    def __init__(self):
        self.rows = {}   # pivot key -> (image dict, preimage dict)

    def reduce(self, image, pre=None):
        image = dict(image)
        pre = dict(pre or {})
        while image:
            piv = min(image)
            row = self.rows.get(piv)
            if row is None:
                return image, pre
            c = image[piv]
            rimg, rpre = row
            for k, v in rimg.items():
                nv = image.get(k, 0) - c * v
                if nv:
                    image[k] = nv
                else:
                    image.pop(k, None)
            for k, v in rpre.items():
                nv = pre.get(k, 0) - c * v
                if nv:
                    pre[k] = nv
                else:
                    pre.pop(k, None)
        return image, pre

    def insert(self, image, pre):
        piv = min(image)
        inv = 1 / image[piv]
        self.rows[piv] = ({k: v * inv for k, v in image.items()},
                          {k: v * inv for k, v in pre.items()})


class IntersectionPiece:
    """(S/(I_1 cap I_2))_t via the embedding into (S/I_1)_t + (S/I_2)_t."""

    def __init__(self, ideals, t, method=None, avoid=()):
        self.t = t
        self.ideals = ideals
        self.method = method
        nvars = ideals[0].nvars
        order = ideals[0].order
        self.nvars = nvars
        self.echelon = _TrackedEchelon()
        self.standard = []
        self.new_leading = []
        for m in monomials_avoiding(nvars, t, avoid, order):
            img = self.image({m: QQ(1)})
            if not img:
                self.new_leading.append(m)
                continue
            res, pre = self.echelon.reduce(img, {m: QQ(1)})
            if res:
                self.echelon.insert(res, pre)
                self.standard.append(m)
            else:
                self.new_leading.append(m)
        self._std_set = set(self.standard)

    def image(self, terms):
        out = {}
        for tag, I in enumerate(self.ideals):
            acc = {}
            for m, c in terms.items():
                for mm, v in I.reduce_monomial(m, self.method).items():
                    nv = acc.get(mm, 0) + c * v
                    if nv:
                        acc[mm] = nv
                    else:
                        acc.pop(mm, None)
            for mm, v in acc.items():
                out[(tag, mm)] = v
        return out

    def reduce_terms(self, terms):
        """Unique combination of standard monomials congruent to ``terms``."""
        img = self.image(terms)
        res, pre = self.echelon.reduce(img, {})
        if res:
            raise ArithmeticError("image outside the span of standard monomials")
        return {m: -c for m, c in pre.items() if c}

    def contains(self, terms):
        return not self.image(terms)


class IntersectionIdeal:
    """I_1 cap I_2 handled one degree at a time (no generators are formed).

    Degrees are filled in ascending order so that leading monomials found in
    low degree prune the search in higher degree.
    """

    def __init__(self, a, b, method=None, name=None):
        if a.nvars != b.nvars:
            raise ValueError("ideals live in different rings")
        self.parts = (a, b)
        self.nvars = a.nvars
        self.order = a.order
        self.method = method
        self.name = name
        self._pieces = {}
        self._leading = []

    def piece(self, t):
        if t not in self._pieces:
            for s in range(len(self._pieces), t + 1):
                if s in self._pieces:
                    continue
                p = IntersectionPiece(self.parts, s, self.method, self._leading)
                self._leading.extend(p.new_leading)
                self._pieces[s] = p
        return self._pieces[t]

    def hilbert_function(self, t, method=None):
        return len(self.piece(t).standard) if t >= 0 else 0

    def hilbert_vector(self, upto):
        return [self.hilbert_function(t) for t in range(upto + 1)]

    def quotient_basis(self, t, method=None):
        return list(self.piece(t).standard)

    def normal_form(self, p, method=None):
        out = {}
        by_degree = {}
        for m, c in p.terms.items():
            by_degree.setdefault(sum(m), {})[m] = c
        for t, terms in by_degree.items():
            out.update(self.piece(t).reduce_terms(terms))
        return Polynomial._raw(self.nvars, out)

    def reduce_monomial(self, m, method=None):
        return self.piece(sum(m)).reduce_terms({m: QQ(1)})

    def contains(self, p, method=None):
        return all(self.piece(t).contains(terms) for t, terms in _by_degree(p).items())

    def degree_span_dim(self, t, method=None):
        return count_monomials(self.nvars, t) - self.hilbert_function(t)


def _by_degree(p):
    out = {}
    for m, c in p.terms.items():
        out.setdefault(sum(m), {})[m] = c
    return out


def ideal_intersection_degreewise(a, b, t, method=None):
    """Echelon basis of (I_1 cap I_2)_t inside S_t.

    Rows are ``m - NF(m)`` over the non-standard monomials m; returned as a
    dict pivot -> Polynomial together with the standard monomials.
    """
    piece = IntersectionPiece((a, b), t, method)
    rows = {}
    for m in monomials_avoiding(a.nvars, t, (), a.order):
        if m in piece._std_set:
            continue
        nf = piece.reduce_terms({m: QQ(1)})
        terms = {m: QQ(1)}
        for mm, c in nf.items():
            terms[mm] = terms.get(mm, 0) - c
        rows[m] = Polynomial(a.nvars, terms)
    return IntersectionSpan(t, piece.standard, rows)


@dataclass
class IntersectionSpan:
    degree: int
    standard: list
    rows: dict = field(repr=False)

    @property
    def dim(self):
        return len(self.rows)


# ---------------------------------------------------------------------------
# elimination oracle

def intersection_by_elimination(a, b):
    """Generators of I_1 cap I_2 from (u I_1 + (1-u) I_2) cap S.

    Uses an auxiliary last variable u and an order eliminating it.  Meant as
    an independent oracle on small inputs.
    """
    n = a.nvars
    order = MonomialOrder("grevlex")
    elim = EliminationOrder(n + 1, order)

    def lift(p, with_u=False, sign=1):
        terms = {}
        for m, c in p.terms.items():
            terms[m + (0,)] = sign * c
            if with_u:
                terms[m + (1,)] = -sign * c
        return Polynomial(n + 1, terms)

    gens = []
    for g in a.gens:
        gens.append(Polynomial(n + 1, {m + (1,): c for m, c in g.terms.items()}))
    for g in b.gens:
        gens.append(lift(g, with_u=True))
    gb = buchberger(gens, elim, n + 1, split=False)
    keep = []
    for p in gb.basis:
        if all(m[-1] == 0 for m in p.terms):
            keep.append(Polynomial(n, {m[:-1]: c for m, c in p.terms.items()}))
    return Ideal(keep, n, a.order, method="groebner")


class EliminationOrder(MonomialOrder):
    """Eliminates the last variable: compare its exponent first, then ``inner``."""

    def __init__(self, nvars, inner=GREVLEX):
        super().__init__(inner.kind, inner.perm)
        self.kind = "elim"
        self.inner = inner
        self.nvars = nvars

    def key(self, m):
        k = self._cache.get(m)
        if k is None:
            k = (m[-1],) + self.inner.key(m[:-1])
            self._cache[m] = k
        return k

    def __eq__(self, other):
        return isinstance(other, EliminationOrder) and other.inner == self.inner

    def __hash__(self):
        return hash(("elim", self.inner))


# ---------------------------------------------------------------------------
# Jacobian ideal and smoothness

def jacobian_ideal(f, order=GREVLEX):
    d = f.homogeneous_degree()
    if d is None or d < 2:
        raise ValueError("need a homogeneous polynomial of degree at least 2")
    return Ideal([f.derivative(i) for i in range(f.nvars)], f.nvars, order,
                 method="groebner", name="J")


@dataclass
class SmoothnessCertificate:
    smooth: bool
    vanishing_degree: int | None
    socle_value: int | None
    missing_variables: list
    groebner_size: int
    method: str = "groebner"
    branches: int = 1

    def __bool__(self):
        return self.smooth


def factor_polynomial(p):
    """Distinct irreducible factors of p over Q (constants dropped)."""
    n = p.nvars
    xs = sympy.symbols(f"x0:{n}")
    P = sympy.Poly.from_dict({m: sympy.Rational(int(c.numerator), int(c.denominator))
                              for m, c in p.terms.items()}, xs, domain="QQ")
    _, facs = P.factor_list()
    out = []
    for fac, _mult in facs:
        terms = {}
        for m, c in fac.as_dict().items():
            c = sympy.Rational(c)
            terms[tuple(int(e) for e in m)] = QQ(int(c.p), int(c.q))
        out.append(Polynomial(n, terms))
    out.sort(key=lambda q: (q.total_degree(), format_polynomial(q)))
    return out


def _linear_normalize(gens, nvars, order):
    """Echelonize the linear generators and reduce the rest modulo them."""
    linear = [g for g in gens if g.homogeneous_degree() == 1]
    other = [g for g in gens if g.homogeneous_degree() != 1]
    if not linear:
        return gens
    lgb = buchberger(linear, order, nvars, split=False)
    out = list(lgb.basis)
    seen = set()
    for g in other:
        r = lgb.reduce(g)
        if r and r not in seen:
            seen.add(r)
            out.append(r)
    # reduction can expose new linear forms only if degrees drop, which they do not
    return out


def zero_set_branches(gens, nvars, order=GREVLEX, max_branches=4096):
    """Split V(gens) along factorizations of the generators.

    Returns generator lists whose zero sets cover V(gens); none of the
    returned lists has a reducible generator.
    """
    cache = {}

    def factors(g):
        r = cache.get(g)
        if r is None:
            r = factor_polynomial(g)
            cache[g] = r
        return r

    stack = [list(gens)]
    leaves = []
    seen = set()
    while stack:
        G = _linear_normalize(stack.pop(), nvars, order)
        key = frozenset(G)
        if key in seen:
            continue
        seen.add(key)
        if any(g.homogeneous_degree() == 0 for g in G):
            continue
        split = None
        for i, g in enumerate(G):
            if g.homogeneous_degree() > 1:
                fs = factors(g)
                if len(fs) > 1 or (fs and fs[0].total_degree() < g.total_degree()):
                    split = (i, fs)
                    break
        if split is None:
            leaves.append(G)
            if len(leaves) > max_branches:
                raise RuntimeError("too many branches")
            continue
        i, fs = split
        for fac in reversed(fs):
            stack.append(G[:i] + [fac] + G[i + 1:])
    return leaves


SMOOTHNESS_PRIMES = (32003, 65521, 1000003)


def _artinian(lms, nvars):
    have = set()
    for m in lms:
        support = [i for i, e in enumerate(m) if e]
        if not support:
            return True
        if len(support) == 1:
            have.add(support[0])
    return len(have) == nvars


def is_smooth(f, order=GREVLEX, method="auto"):
    """Decide smoothness of V(f) through the Artinian property of S/J.

    For smooth f the partials form a regular sequence, S/J is a complete
    intersection with top degree n(d-2), and h_J vanishes from n(d-2)+1 on;
    that degree is returned as the certificate.

    ``method`` "groebner" computes one basis of J over Q and reads the
    certificate off it.  "split" first breaks V(J) into pieces along factors
    of the partials (a common zero of J is a common zero of one piece) and
    shows each piece empty.  A piece is first tried modulo a prime: a common
    zero over Q-bar reduces to one over F_p-bar, so emptiness mod p implies
    emptiness over Q.  Pieces that fail mod p are recomputed over Q.
    "modular" runs the prime test on J itself.  "auto" uses "split" above
    six variables; otherwise it tries "modular" and falls back to "groebner".
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    d = f.homogeneous_degree()
    if d is None:
        raise ValueError("polynomial is not homogeneous")
    n = f.nvars
    top = n * (d - 2)
    if method == "auto" and n > 6:
        method = "split"
    if method in ("auto", "modular"):
        partials = [p for p in (f.derivative(i) for i in range(n)) if p]
        for p in SMOOTHNESS_PRIMES:
            lms = modular_leading_monomials(partials, p, order, n)
            if lms is not None and _artinian(lms, n):
                return SmoothnessCertificate(True, top + 1, None, [], len(lms), "modular", 1)
        method = "groebner"
    if method == "split":
        partials = [p for p in (f.derivative(i) for i in range(n)) if p]
        leaves = zero_set_branches(partials, n, order)
        size = 0
        for G in leaves:
            done = False
            for p in SMOOTHNESS_PRIMES:
                lms = modular_leading_monomials(G, p, order, n)
                if lms is not None and _artinian(lms, n):
                    size += len(lms)
                    done = True
                    break
            if done:
                continue
            gb = buchberger(G, order, n)
            size += len(gb)
            missing = gb.missing_pure_powers()
            if missing:
                return SmoothnessCertificate(False, None, None, missing, size, "split", len(leaves))
        return SmoothnessCertificate(True, top + 1, None, [], size, "split", len(leaves))
    J = jacobian_ideal(f, order)
    gb = J.groebner()
    missing = gb.missing_pure_powers()
    if missing:
        return SmoothnessCertificate(False, None, None, missing, len(gb))
    vanishing = gb.hilbert(top + 1)
    socle = gb.hilbert(top)
    ok = vanishing == 0 and socle == 1
    return SmoothnessCertificate(ok, top + 1 if ok else None, socle, [], len(gb))
