"""Built-in hypersurface families and the end-to-end pipeline.

Families
  dan-k1       f = x0 x1 g + x3 h in P^3, planes V(x0, x3) and V(x1, x3)
  x-kd         X_{k,d}, planes V(x0, x4, x5, x7, ...) and V(x1, x4, x5, x7, ...)
  lowdeg-*     the explicit low-degree examples with (d, k) in {(4,3), (5,3), (3,5)}
  custom       user supplied f and two planes
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .algebra import (GREVLEX, GRLEX, NuPoly, Polynomial, format_monomial, format_polynomial,
                      parse_polynomial)
from .hodge import (HodgeIdealError, LinearSpacePlane, associated_ideal_from_decomposition,
                    associated_ideal_general, plane_decomposition, check_gorenstein, class_representative,
                    jacobian_in_ideal, lemma_applies)
from .ideals import Ideal, IntersectionIdeal, ideal_sum, intersection_by_elimination, is_smooth
from .pairing import (NAMED_SHAPES, critical_nu_values, excess_report, generic_rank,
                      gram_matrix, left_kernel_at, thmTsp_criterion)

FAMILIES = ("dan-k1", "x-kd", "lowdeg-d4k3", "lowdeg-d5k3", "lowdeg-d3k5", "custom")
DEFAULT_NU = tuple(Fraction(x) for x in ("-2", "-1", "0", "1/3", "1", "2", "5"))
LOWDEG = {"lowdeg-d4k3": (3, 4), "lowdeg-d5k3": (3, 5), "lowdeg-d3k5": (5, 3)}
DEFAULTS = {"dan-k1": (1, 5), "x-kd": (2, 6), **LOWDEG}
ORDERS = {"grevlex": GREVLEX, "grlex": GRLEX}


class ScenarioError(Exception):
    """A stage of the pipeline failed; ``stage`` names it."""

    def __init__(self, stage, message, obj=None):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.obj = obj


@dataclass
class ScenarioConfig:
    family: str
    k: int | None = None
    d: int | None = None
    nu: tuple = DEFAULT_NU
    seed: int = 1
    oracle: bool = False
    order: str = "grevlex"
    f: str | None = None
    plane1: tuple | None = None
    plane2: tuple | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ScenarioError("config", f"unknown family {self.family!r}")
        if self.family in DEFAULTS:
            k0, d0 = DEFAULTS[self.family]
            if self.k is None:
                self.k = k0
            if self.d is None:
                self.d = d0
        self.nu = tuple(Fraction(x) for x in self.nu)
        if self.order not in ORDERS:
            raise ScenarioError("config", f"unknown monomial order {self.order!r}")
        self.validate()

    def validate(self):
        fam, k, d = self.family, self.k, self.d
        if fam == "dan-k1":
            if k != 1:
                raise ScenarioError("config", "dan-k1 has k = 1")
            if d < 5:
                raise ScenarioError("config", "dan-k1 needs d >= 5")
        elif fam == "x-kd":
            if k < 2 or d < 6:
                raise ScenarioError("config", f"x-kd needs k >= 2 and d >= 6, got k={k}, d={d}")
        elif fam in LOWDEG:
            if (k, d) != LOWDEG[fam]:
                raise ScenarioError("config", f"{fam} is defined only for (k, d) = {LOWDEG[fam]}")
        elif fam == "custom":
            if not self.f or not self.plane1 or not self.plane2:
                raise ScenarioError("config", "custom scenarios need f and two planes")

    def echo(self):
        out = {"family": self.family, "k": self.k, "d": self.d,
               "nu": [str(x) for x in self.nu], "seed": self.seed,
               "oracle": self.oracle, "order": self.order}
        if self.family == "custom":
            out.update(f=self.f, plane1=list(self.plane1), plane2=list(self.plane2))
        return out


@dataclass
class Scenario:
    config: ScenarioConfig
    f: Polynomial
    plane1: LinearSpacePlane
    plane2: LinearSpacePlane
    notes: list = field(default_factory=list)
    smoothness: object = None
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# polynomials of the families

def x_kd_polynomial(k, d):
    if d < 4:
        raise ScenarioError("build", "X_{k,d} needs d >= 4 for the monomial x2^(d-4) x3^2")
    n = 2 * k + 2
    text = (f"x0*x1*(x0^{d - 2}+x1^{d - 2}+x2^{d - 4}*x3^2)"
            f"+x4*x2^{d - 1}+x4^{d}+x5*x3^{d - 1}+x5^{d}")
    for j in range(3, k + 1):
        text += f"+x{2 * j + 1}^{d}+x{2 * j + 1}*x{2 * j}^{d - 1}"
    return parse_polynomial(text, n)


def x_kd_planes(k):
    n = 2 * k + 2
    rest = [4, 5] + [2 * j + 1 for j in range(3, k + 1)]
    return (LinearSpacePlane.coordinate(n, [0] + rest),
            LinearSpacePlane.coordinate(n, [1] + rest))


def lowdeg_polynomial(k, d):
    n = 2 * k + 2
    if (k, d) in ((3, 4), (3, 5)):
        inner = "+".join(f"x{i}^{d - 2}" for i in range(5))
        tail = "".join(f"+x{j}*(x{j - 3}^{d - 1}+x{j}^{d - 1})" for j in range(5, 8))
    elif (k, d) == (5, 3):
        inner = "+".join(f"x{i}" for i in range(7))
        tail = "".join(f"+x{j}*(x{j - 5}^{d - 1}+x{j}^{d - 1})" for j in range(7, 12))
    else:
        raise ScenarioError("build", f"no low-degree example for (k, d) = ({k}, {d})")
    return parse_polynomial(f"x0*x1*({inner}){tail}", n)


def lowdeg_planes(k):
    n = 2 * k + 2
    rest = list(range(k + 2, 2 * k + 2))
    return (LinearSpacePlane.coordinate(n, [0] + rest),
            LinearSpacePlane.coordinate(n, [1] + rest))


def dan_default_cofactors(d):
    """g = sum x_i^(d-2), h = sum x_i^(d-1) over x0..x3."""
    g = parse_polynomial("+".join(f"x{i}^{d - 2}" for i in range(4)), 4)
    h = parse_polynomial("+".join(f"x{i}^{d - 1}" for i in range(4)), 4)
    return g, h


def _random_form(rng, nvars, degree, nterms):
    from .algebra import enumerate_monomials
    monos = enumerate_monomials(nvars, degree)
    terms = {}
    for m in rng.sample(monos, min(nterms, len(monos))):
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        terms[m] = c
    return Polynomial(nvars, terms)


def dan_cofactors(d, seed=1, attempts=20):
    """Cofactors (g, h) for f = x0 x1 g + x3 h.

    Seed 1 gives the documented default.  Other seeds add a seeded sparse
    perturbation to it, retried until f is smooth.
    """
    g0, h0 = dan_default_cofactors(d)
    if seed == 1:
        return g0, h0
    rng = random.Random(seed)
    for _ in range(attempts):
        g = g0 + _random_form(rng, 4, d - 2, 3)
        h = h0 + _random_form(rng, 4, d - 1, 3)
        f = dan_polynomial(g, h)
        if f and is_smooth(f):
            return g, h
    raise ScenarioError("build", f"no smooth perturbation found for seed {seed}")


def dan_polynomial(g, h):
    x = [Polynomial.variable(4, i) for i in range(4)]
    return x[0] * x[1] * g + x[3] * h


def parse_plane(forms, nvars):
    if isinstance(forms, str):
        forms = [s for s in forms.split(",") if s.strip()]
    try:
        return LinearSpacePlane(tuple(parse_polynomial(s, nvars) for s in forms))
    except (ValueError, HodgeIdealError) as exc:
        raise ScenarioError("build", f"bad plane {forms}: {exc}") from exc


CORRECTED_PLANE_NOTE = ("second plane taken as V(x1, x4, x5, x7, ...), the image of the first "
                        "under x0 <-> x1; a second plane through x0 would coincide with the first")


def build_scenario(cfg: ScenarioConfig) -> Scenario:
    fam, k, d = cfg.family, cfg.k, cfg.d
    notes = []
    extra = {}
    if fam == "dan-k1":
        g, h = dan_cofactors(d, cfg.seed)
        f = dan_polynomial(g, h)
        p1 = LinearSpacePlane.coordinate(4, [0, 3])
        p2 = LinearSpacePlane.coordinate(4, [1, 3])
        extra.update(g=g, h=h)
    elif fam == "x-kd":
        f = x_kd_polynomial(k, d)
        p1, p2 = x_kd_planes(k)
        notes.append(CORRECTED_PLANE_NOTE)
    elif fam in LOWDEG:
        f = lowdeg_polynomial(k, d)
        p1, p2 = lowdeg_planes(k)
    else:
        try:
            f = parse_polynomial(cfg.f)
        except ValueError as exc:
            raise ScenarioError("build", f"cannot parse f: {exc}") from exc
        n = f.nvars
        if n % 2:
            f = Polynomial(n + 1, {m + (0,): c for m, c in f.terms.items()})
            n += 1
        p1 = parse_plane(cfg.plane1, n)
        p2 = parse_plane(cfg.plane2, n)
        cfg.k = n // 2 - 1
        cfg.d = f.homogeneous_degree()
        if cfg.d is None:
            raise ScenarioError("build", "f is not homogeneous")
    cert = is_smooth(f, ORDERS[cfg.order])
    if not cert.smooth:
        raise ScenarioError("smoothness", f"V(f) is singular ({cert})", cert)
    return Scenario(cfg, f, p1, p2, notes, cert, extra)


# ---------------------------------------------------------------------------
# pipeline

def _check(checks, name, expected, actual, passed=None):
    if passed is None:
        passed = expected == actual
    checks.append({"name": name, "expected": _plain(expected), "actual": _plain(actual),
                   "passed": bool(passed)})


def _plain(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted((_plain(x) for x in v), key=str)
    if isinstance(v, dict):
        return {str(a): _plain(b) for a, b in v.items()}
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


def box_basis(k, d, j, t):
    """Degree-t monomials x_{j}^{a} x2^{a2} x3^{a3} prod x_{2i}^{a_{2i}} with all a <= d-2.

    j is the index of the free variable among x0, x1 (x1 for I_1, x0 for I_2).
    """
    n = 2 * k + 2
    support = [j, 2, 3] + [2 * i for i in range(3, k + 1)]
    out = set()
    for exps in itertools.product(range(d - 1), repeat=len(support)):
        if sum(exps) == t:
            m = [0] * n
            for v, e in zip(support, exps):
                m[v] = e
            out.add(tuple(m))
    return out


def _ideal_summary(ai, label):
    return {
        "name": label,
        "generators": [format_polynomial(g) for g in ai.ideal.gens],
        "socle_degree": ai.socle_degree,
        "socle_generator": format_monomial(ai.socle_generator),
        "hilbert": list(ai.hilbert),
        "length": sum(ai.hilbert),
    }


def _same_ideal_upto(a, b, upto):
    return all(a.contains(g) for g in b.gens if g.homogeneous_degree() <= upto) and \
        all(b.contains(g) for g in a.gens if g.homogeneous_degree() <= upto) and \
        all(a.hilbert_function(t) == b.hilbert_function(t) for t in range(upto + 1))


def run_scenario(cfg: ScenarioConfig, timing=False) -> dict:
    t0 = time.perf_counter()
    stamps = {}

    def stamp(name):
        stamps[name] = round(time.perf_counter() - t0, 3)

    sc = build_scenario(cfg)
    stamp("build")
    k, d = cfg.k, cfg.d
    order = ORDERS[cfg.order]
    checks = []
    try:
        ls1, gs1 = plane_decomposition(sc.f, sc.plane1)
        ls2, gs2 = plane_decomposition(sc.f, sc.plane2)
        I1 = associated_ideal_from_decomposition(ls1, gs1, name="I1", check=False)
        I2 = associated_ideal_from_decomposition(ls2, gs2, name="I2", check=False)
    except HodgeIdealError as exc:
        raise ScenarioError("ideals", str(exc)) from exc
    if order != GREVLEX:
        for ai in (I1, I2):
            ai.ideal = ai.ideal.with_order(order)
            ai.socle_generator = ai.ideal.quotient_basis(ai.socle_degree)[0]
    s = I1.socle_degree
    gor = {}
    for label, ai in (("I1", I1), ("I2", I2)):
        try:
            rep = check_gorenstein(ai)
        except HodgeIdealError as exc:
            raise ScenarioError("gorenstein", f"{label}: {exc}", ai) from exc
        gor[label] = {"symmetric": rep.symmetric, "socle_dimension": rep.hilbert[s],
                      "vanishes_above_socle": ai.ideal.hilbert_function(s + 1) == 0,
                      "pairing_ranks": rep.pairing_ranks}
        _check(checks, f"{label} Gorenstein", True,
               rep.symmetric and rep.hilbert[s] == 1 and gor[label]["vanishes_above_socle"])
        _check(checks, f"J_d inside {label}_d", True, jacobian_in_ideal(sc.f, ai, d))
    stamp("ideals")
    inter = IntersectionIdeal(I1.ideal, I2.ideal, name="I1cap I2")
    total = ideal_sum(I1.ideal, I2.ideal)
    h_inter = inter.hilbert_vector(s + 1)
    h_sum = total.hilbert_vector(s + 1)
    joint = h_inter[d]
    stamp("hilbert")

    report = {
        "schema": "hodgelab.report/1",
        "engine": {"package": "hodgelab", "version": __version__},
        "config": cfg.echo(),
        "hypersurface": {
            "f": format_polynomial(sc.f),
            "nvars": sc.f.nvars,
            "degree": d,
            "smooth": sc.smoothness.smooth,
            "smoothness_certificate_degree": sc.smoothness.vanishing_degree,
            "jacobian_groebner_size": sc.smoothness.groebner_size,
        },
        "planes": {"Pi1": [format_polynomial(x) for x in sc.plane1.forms],
                   "Pi2": [format_polynomial(x) for x in sc.plane2.forms]},
        "notes": list(sc.notes),
        "ideals": {"I1": _ideal_summary(I1, "I1"), "I2": _ideal_summary(I2, "I2"),
                   "intersection": {"hilbert": h_inter[: s + 1]},
                   "sum": {"generators": [format_polynomial(g) for g in total.gens],
                           "hilbert": h_sum[: s + 1]}},
        "gorenstein": gor,
        "tangent": {
            "codim_I1_d": I1.ideal.hilbert_function(d),
            "codim_I2_d": I2.ideal.hilbert_function(d),
            "joint_codim": joint,
            "identification_asserted": lemma_applies(k, d),
        },
    }
    for t in range(s + 1):
        if h_inter[t] + h_sum[t] != I1.hilbert[t] + I2.hilbert[t]:
            _check(checks, f"inclusion-exclusion at degree {t}", True, False)
    if "g" in sc.extra:
        report["hypersurface"]["g"] = format_polynomial(sc.extra["g"])
        report["hypersurface"]["h"] = format_polynomial(sc.extra["h"])

    # parametric Gram matrix
    e = k * d - 2 * k - 2
    gram_info = None
    if e >= 0:
        try:
            G = gram_matrix(I1, I2, d, e, check=False)
            gr = generic_rank(G)
            crit = critical_nu_values(G)
            ex = excess_report(G, cfg.nu, joint)
        except (ValueError, ArithmeticError) as exc:
            raise ScenarioError("gram", str(exc)) from exc
        gram_info = G
        report["gram"] = {
            "row_degree": d, "col_degree": e,
            "rows": [format_monomial(m) for m in G.rows],
            "cols": [format_monomial(m) for m in G.cols],
            "shape": list(G.shape),
            "zero_rows": len(G.zero_rows()),
            "max_nu_degree": G.max_nu_degree(),
            "blocks": len(G.blocks),
            "census": G.census(),
            "block_shapes": _shape_census(G),
            "generic_rank": gr,
            "certified_at": [[str(a), b] for a, b in G.certification],
            "critical": [{"value": None if c.value is None else str(c.value),
                          "polynomial": str(c.polynomial), "corank": c.corank,
                          "intervals": [[str(a), str(b)] for a, b in c.intervals]}
                         for c in crit],
        }
        report["excess"] = {
            "joint_codim": ex.joint_codim,
            "generic_excess": ex.generic_excess,
            "samples": [{"nu": str(x.nu), "rank": x.rank, "excess": x.excess,
                         "combined_codim": x.combined_codim, "verdict": x.verdict}
                        for x in ex.samples],
        }
        stamp("gram")
    else:
        report["gram"] = None
        report["excess"] = None

    # nu-free criterion
    crit_info = {}
    for ref in (2, 1):
        res = thmTsp_criterion(I1, I2, d, k, reference=ref)
        crit_info[f"reference_I{ref}"] = {
            "holds": res.holds, "infeasible": res.infeasible,
            "row_degree": res.row_degree, "col_degree": res.col_degree,
            "shape": [res.rows, res.cols], "rank": res.rank,
            "witness": None if res.witness is None else [[m, str(c)] for m, c in res.witness],
        }
    report["criterion"] = crit_info
    stamp("criterion")

    report["assumptions"] = _assumptions(cfg)
    _family_checks(cfg, sc, I1, I2, inter, total, h_inter, gram_info, report, checks)
    if cfg.oracle:
        report["oracle"] = _oracle_checks(sc, I1, I2, inter, total, checks)
        stamp("oracle")
    report["checks"] = checks
    report["all_passed"] = all(c["passed"] for c in checks)
    if timing:
        report["timing"] = stamps
    return report


def _assumptions(cfg):
    """Facts the report relies on without computing them."""
    out = ["nu is treated as a free parameter; the map from lambda to nu is not modelled",
           "smoothness of the Hodge locus itself is not checked; only tangent codimensions are computed"]
    if cfg.family == "x-kd":
        out.append("critical values nu in {0, -1} are taken to correspond to lambda in {0, 1}; "
                   "this correspondence is cited, not computed")
    if cfg.family in LOWDEG:
        out.append("the critical nu set is listed as computed; it is not claimed to equal the "
                   "finite exceptional set of parameters")
    return out


def _shape_census(G):
    out = {}
    for b in G.blocks:
        key = f"{len(b.rows)}x{len(b.cols)}"
        out[key] = out.get(key, 0) + 1
    return dict(sorted(out.items()))


def _family_checks(cfg, sc, I1, I2, inter, total, h_inter, G, report, checks):
    fam, k, d = cfg.family, cfg.k, cfg.d
    if fam == "dan-k1":
        _check(checks, "h_{I1 cap I2}(d-4) = 2d-7", 2 * d - 7, h_inter[d - 4])
        _check(checks, "h_{I1 cap I2}(d) = 2d-6", 2 * d - 6, h_inter[d])
        _check(checks, "Gram shape (2d-6) x (2d-7)", [2 * d - 6, 2 * d - 7], list(G.shape))
        _check(checks, "generic rank below row count", True, G.generic_rank < len(G.rows))
        for smp in report["excess"]["samples"]:
            _check(checks, f"excess at nu={smp['nu']}", ">= 1", smp["excess"], smp["excess"] >= 1)
            _check(checks, f"combined codim at nu={smp['nu']} <= 2d-5", 2 * d - 5,
                   smp["combined_codim"], smp["combined_codim"] <= 2 * d - 5)
        x = [Polynomial.variable(4, i) for i in range(4)]
        expected_sum = Ideal([x[0], x[1], x[3], x[2] ** (d - 1)], 4)
        _check(checks, "I1 + I2 = <x0, x1, x3, x2^(d-1)>", True,
               _same_ideal_upto(total, expected_sum, 2 * d))
        g, h = sc.extra["g"], sc.extra["h"]
        expected_I1 = Ideal([x[0], x[3], x[1] * g, h], 4)
        _check(checks, "I1 = <x0, x3, x1 g, h>", True,
               _same_ideal_upto(I1.ideal, expected_I1, I1.socle_degree + 1))
        variant_x3 = Ideal([x[1], x[3], x[0] * g, h], 4)
        variant_x2 = Ideal([x[1], x[2], x[0] * g, h], 4)
        report["dan_I2_variants"] = {
            "<x1, x3, x0 g, h>": _same_ideal_upto(I2.ideal, variant_x3, I2.socle_degree + 1),
            "<x1, x2, x0 g, h>": _same_ideal_upto(I2.ideal, variant_x2, I2.socle_degree + 1),
        }
        _check(checks, "criterion infeasible for k = 1", True,
               report["criterion"]["reference_I2"]["infeasible"])
    elif fam == "x-kd":
        for t in range(I1.socle_degree + 1):
            b1 = box_basis(k, d, 1, t)
            b2 = box_basis(k, d, 0, t)
            if set(I1.ideal.quotient_basis(t)) != b1 or set(I2.ideal.quotient_basis(t)) != b2:
                _check(checks, f"quotient bases equal B1, B2 in degree {t}", True, False)
            if set(inter.quotient_basis(t)) != b1 | b2:
                _check(checks, f"quotient basis of I1 cap I2 equals B1 u B2 in degree {t}", True, False)
        _check(checks, "length of S/I1", (d - 1) ** (k + 1), sum(I1.hilbert))
        M1 = tuple(d - 2 if (i in (1, 2, 3) or (i >= 6 and i % 2 == 0)) else 0 for i in range(2 * k + 2))
        M2 = tuple(d - 2 if (i in (0, 2, 3) or (i >= 6 and i % 2 == 0)) else 0 for i in range(2 * k + 2))
        _check(checks, "socle generator of I1", format_monomial(M1), format_monomial(I1.socle_generator))
        _check(checks, "socle generator of I2", format_monomial(M2), format_monomial(I2.socle_generator))
        c1 = box_basis(k, d, 1, d) | box_basis(k, d, 0, d)
        _check(checks, "no zero rows", 0, len(G.zero_rows()))
        _check(checks, "generic rank = |C1|", len(c1), G.generic_rank)
        _check(checks, "all four block shapes occur", sorted(NAMED_SHAPES),
               sorted(x for x in G.census() if x in NAMED_SHAPES),
               all(x in G.census() for x in NAMED_SHAPES))
        nu = NuPoly.nu()
        dets = {str(b.minor) for b in G.blocks if b.label == "3x3"}
        _check(checks, "3x3 block determinant = +-nu(nu+1)", True,
               bool(dets) and dets <= {str(nu * (nu + 1)), str(-(nu * (nu + 1)))})
        crit = sorted(Fraction(c["value"]) for c in report["gram"]["critical"] if c["value"] is not None)
        _check(checks, "critical nu set", ["-1", "0"], [str(x) for x in crit],
               crit == [Fraction(-1), Fraction(0)] and
               all(c["value"] is not None for c in report["gram"]["critical"]))
        for smp in report["excess"]["samples"]:
            want = "EXCESS" if Fraction(smp["nu"]) in (0, -1) else "NO-EXCESS"
            _check(checks, f"verdict at nu={smp['nu']}", want, smp["verdict"])
        w = left_kernel_at(G, -1)
        supports = [{i for i, x in enumerate(v) if x} for v in w]
        blocks3 = [set(b.rows) for b in G.blocks if b.label == "3x3"]
        _check(checks, "kernel at nu=-1 supported on 3x3 blocks", True,
               bool(w) and all(any(sp <= b for b in blocks3) for sp in supports))
    elif fam in LOWDEG:
        _check(checks, "criterion: no left kernel", True,
               report["criterion"]["reference_I2"]["holds"])


def _oracle_checks(sc, I1, I2, inter, total, checks):
    out = {}
    s = I1.socle_degree
    for label, I in (("I1", I1.ideal), ("I2", I2.ideal), ("I1+I2", total)):
        ok = all(I.hilbert_function(t, "groebner") == I.hilbert_function(t, "degreewise")
                 for t in range(s + 2))
        out[f"groebner_vs_degreewise_{label}"] = ok
        _check(checks, f"oracle: Groebner vs degreewise Hilbert function of {label}", True, ok)
    if sc.f.nvars <= 6:
        elim = intersection_by_elimination(I1.ideal, I2.ideal)
        ok = all(elim.hilbert_function(t) == inter.hilbert_function(t) for t in range(s + 2))
        out["intersection_vs_elimination"] = ok
        _check(checks, "oracle: degreewise intersection vs elimination", True, ok)
    else:
        out["intersection_vs_elimination"] = "skipped"
    if sc.f.nvars <= 6 and s <= 8:
        rep = class_representative(sc.f, I1)
        gen = associated_ideal_general(sc.f, rep, check=True)
        ok = _same_ideal_upto(gen.ideal, I1.ideal, s + 1)
        out["general_vs_decomposition"] = ok
        _check(checks, "oracle: general construction vs plane decomposition", True, ok)
    else:
        out["general_vs_decomposition"] = "skipped"
    return out
