"""Exact sparse polynomial arithmetic over Q and over Q[nu].

Monomials are plain tuples of non-negative exponents.  Coefficients are
``gmpy2.mpq`` rationals; nothing in this package ever touches floats.
"""
from __future__ import annotations

import re
from functools import reduce
from itertools import combinations_with_replacement
from math import comb

from gmpy2 import mpq

QQ = mpq


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a pole."""


# ---------------------------------------------------------------------------
# monomials

def mono_degree(m):
    return sum(m)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Return ``a / b``; ``b`` must divide ``a``."""
    q = tuple(x - y for x, y in zip(a, b))
    if min(q, default=0) < 0:
        raise ValueError(f"{b} does not divide {a}")
    return q


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def unit_monomial(n, i, power=1):
    e = [0] * n
    e[i] = power
    return tuple(e)


class MonomialOrder:
    """Graded monomial order, graded reverse lex (default) or graded lex.

    ``perm`` lists the variables from largest to smallest; the default is
    x0 > x1 > ... > x_{n-1}.  ``key(m)`` is a tuple that compares like the
    monomial does.
    """

    def __init__(self, kind="grevlex", perm=None):
        if kind not in ("grevlex", "grlex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.perm = tuple(perm) if perm is not None else None
        self._cache = {}

    def key(self, m):
        k = self._cache.get(m)
        if k is None:
            e = m if self.perm is None else tuple(m[p] for p in self.perm)
            if self.kind == "grevlex":
                k = (sum(e), tuple(-x for x in reversed(e)))
            else:
                k = (sum(e), e)
            if len(self._cache) < 2_000_000:
                self._cache[m] = k
        return k

    def sort(self, monos, reverse=False):
        return sorted(monos, key=self.key, reverse=reverse)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.perm) == (other.kind, other.perm)

    def __hash__(self):
        return hash((self.kind, self.perm))

    def __repr__(self):
        if self.perm is None:
            return f"MonomialOrder({self.kind!r})"
        return f"MonomialOrder({self.kind!r}, perm={list(self.perm)})"


GREVLEX = MonomialOrder("grevlex")
GRLEX = MonomialOrder("grlex")


def enumerate_monomials(nvars, degree, order=GREVLEX, variables=None):
    """All monomials of the given degree, ascending in ``order``.

    ``variables`` restricts the support to a subset of the variables.
    """
    if nvars <= 0:
        raise ValueError("nvars must be positive")
    if degree < 0:
        return []
    idx = range(nvars) if variables is None else sorted(variables)
    out = []
    for combo in combinations_with_replacement(idx, degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return order.sort(out)


def count_monomials(nvars, degree):
    return comb(nvars + degree - 1, degree) if degree >= 0 else 0


# ---------------------------------------------------------------------------
# polynomials

def _coerce(c):
    if isinstance(c, type(QQ())):
        return c
    return QQ(c)


class Polynomial:
    """Sparse polynomial with exact rational coefficients.

    Treat instances as immutable; ``terms`` maps exponent tuples to
    nonzero coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError(f"monomial {m} has wrong length for {nvars} variables")
                c = _coerce(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, m, c=1):
        return cls(len(m), {tuple(m): c})

    @classmethod
    def variable(cls, nvars, i):
        return cls._raw(nvars, {unit_monomial(nvars, i): QQ(1)})

    # -- queries -----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degrees(self):
        return {sum(m) for m in self.terms}

    def total_degree(self):
        return max(self.degrees(), default=-1)

    def homogeneous_degree(self):
        """The common degree of all terms, or None if not homogeneous (or zero)."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self):
        return not self.terms or self.homogeneous_degree() is not None

    def leading_term(self, order=GREVLEX):
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def coefficient(self, m):
        return self.terms.get(tuple(m), QQ(0))

    def variables_used(self):
        return {i for m in self.terms for i, e in enumerate(m) if e}

    # -- arithmetic --------------------------------------------------------
    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m)
            if v is None:
                t[m] = c
            else:
                v += c
                if v:
                    t[m] = v
                else:
                    del t[m]
        return Polynomial._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: c * v for m, v in self.terms.items()})

    def mul_term(self, mono, c=1):
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            self.nvars, {mono_mul(m, mono): c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = t.get(m)
                t[m] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw(self.nvars, {m: c for m, c in t.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, type(QQ()))):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def derivative(self, i):
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range")
        t = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                t[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Polynomial._raw(self.nvars, t)

    def substitute(self, values):
        """Substitute polynomials for variables; ``values`` maps index to Polynomial."""
        out = Polynomial.zero(self.nvars)
        powers = {}
        for m, c in self.terms.items():
            term = Polynomial.constant(self.nvars, c)
            keep = list(m)
            for i, e in enumerate(m):
                if e and i in values:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = values[i] ** e
                    term = term * powers[key]
                    keep[i] = 0
            out = out + term.mul_term(tuple(keep))
        return out

    def evaluate(self, point):
        total = QQ(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= QQ(x) ** e
            total += v
        return total

    def to_string(self, order=GREVLEX):
        return format_polynomial(self, order)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def partial_derivative(p, i):
    return p.derivative(i)


def poly_multiply(p, q):
    return p * q


def variables(nvars):
    return [Polynomial.variable(nvars, i) for i in range(nvars)]


def linear_form(coeffs):
    """The linear form sum c_i x_i."""
    n = len(coeffs)
    return Polynomial(n, {unit_monomial(n, i): c for i, c in enumerate(coeffs) if c})


# ---------------------------------------------------------------------------
# text grammar:  x0*x1*(x0^4+x1^4) - 3/2*x2^2

_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(\S))")


def _format_coefficient(c):
    return str(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m):
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_polynomial(p, order=GREVLEX):
    if not p.terms:
        return "0"
    out = []
    for m in sorted(p.terms, key=order.key, reverse=True):
        c = p.terms[m]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = format_monomial(m)
        if not mono:
            body = _format_coefficient(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coefficient(a)}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


class ParseError(ValueError):
    pass


class _Parser:
    def __init__(self, text, nvars):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if mt is None:
                raise ParseError(f"cannot tokenize at {text[pos:]!r}")
            pos = mt.end()
            num, var, op = mt.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif var is not None:
                self.tokens.append(("var", int(var)))
            elif op in "+-*^/()":
                self.tokens.append(("op", op))
            elif op is not None:
                raise ParseError(f"unexpected character {op!r}")
        self.i = 0
        self.nvars = nvars

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"expected {value or kind}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        p = self.expr()
        if self.peek()[0] is not None:
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        p = self.term().scale(sign)
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self):
        p = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            if op == "*":
                p = p * self.power()
            else:
                q = self.power()
                if q.homogeneous_degree() != 0 and not (q.terms and set(q.terms) == {(0,) * self.nvars}):
                    raise ParseError("division only by nonzero constants")
                p = p.scale(1 / q.terms[(0,) * self.nvars])
        return p

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            _, e = self.take("num")
            base = base ** e
        return base

    def atom(self):
        kind, value = self.peek()
        if kind == "num":
            self.take()
            return Polynomial.constant(self.nvars, value)
        if kind == "var":
            self.take()
            if value >= self.nvars:
                raise ParseError(f"variable x{value} outside ring with {self.nvars} variables")
            return Polynomial.variable(self.nvars, value)
        if (kind, value) == ("op", "("):
            self.take()
            p = self.expr()
            self.take("op", ")")
            return p
        if (kind, value) == ("op", "-"):
            self.take()
            return -self.power()
        raise ParseError(f"unexpected token {value!r}")


def infer_nvars(text):
    idx = [int(v) for v in re.findall(r"x(\d+)", text)]
    return max(idx, default=0) + 1


def parse_polynomial(text, nvars=None):
    """Parse the text grammar; ``nvars`` defaults to one more than the largest index."""
    if nvars is None:
        nvars = infer_nvars(text)
    return _Parser(text, nvars).parse()


# ---------------------------------------------------------------------------
# scalars in the parameter nu

class NuPoly:
    """Polynomial in the single parameter nu with rational coefficients.

    ``coeffs[i]`` is the coefficient of nu**i; trailing zeros are stripped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [_coerce(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def nu(cls):
        return cls((0, 1))

    @classmethod
    def lift(cls, x):
        return x if isinstance(x, NuPoly) else cls((x,))

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = NuPoly.lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (QQ(0),) * (n - len(self.coeffs))
        b = other.coeffs + (QQ(0),) * (n - len(other.coeffs))
        return NuPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return NuPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-NuPoly.lift(other))

    def __rsub__(self, other):
        return NuPoly.lift(other) - self

    def __mul__(self, other):
        other = NuPoly.lift(other)
        if not self.coeffs or not other.coeffs:
            return NuPoly()
        out = [QQ(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return NuPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        return reduce(lambda acc, _: acc * self, range(n), NuPoly((1,)))

    def divmod(self, other):
        other = NuPoly.lift(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        q = [QQ(0)] * max(len(r) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        dq = len(other.coeffs) - 1
        for i in range(len(r) - 1, dq - 1, -1):
            c = r[i] / lead
            if c:
                q[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    r[i - dq + j] -= c * b
        return NuPoly(q), NuPoly(r)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def gcd(self, other):
        a, b = self, NuPoly.lift(other)
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic() if a else a

    def monic(self):
        return NuPoly(c / self.coeffs[-1] for c in self.coeffs) if self.coeffs else self

    def evaluate(self, nu0):
        nu0 = _coerce(nu0)
        v = QQ(0)
        for c in reversed(self.coeffs):
            v = v * nu0 + c
        return v

    def derivative(self):
        return NuPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __eq__(self, other):
        if isinstance(other, (int, type(QQ()))):
            other = NuPoly.lift(other)
        if not isinstance(other, NuPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("nu" if i == 1 else f"nu^{i}")
            a = abs(c)
            if not mono:
                body = _format_coefficient(a)
            elif a == 1:
                body = mono
            else:
                body = f"{_format_coefficient(a)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


class NuRational:
    """Quotient of two NuPoly; only used where evaluation at poles matters."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        den = NuPoly.lift(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = NuPoly.lift(num)
        self.den = den

    def evaluate(self, nu0):
        d = self.den.evaluate(nu0)
        if not d:
            raise PoleError(f"pole at nu = {nu0}")
        return self.num.evaluate(nu0) / d

    def __str__(self):
        return f"({self.num})/({self.den})"


def evaluate_parameter(s, nu0):
    """Specialize a scalar (rational, NuPoly or NuRational) at nu = nu0."""
    if isinstance(s, (NuPoly, NuRational)):
        return s.evaluate(nu0)
    return _coerce(s)
