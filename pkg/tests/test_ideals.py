import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgelab.algebra import GREVLEX, GRLEX, Polynomial, enumerate_monomials, parse_polynomial
from hodgelab.ideals import (Ideal, IntersectionIdeal, buchberger, factor_polynomial,
                             ideal_intersection_degreewise, intersection_by_elimination, is_smooth,
                             jacobian_ideal, modular_leading_monomials, zero_set_branches)


def P(text, n):
    return parse_polynomial(text, n)


def random_form(rng, n, degree, nterms=3):
    monos = enumerate_monomials(n, degree)
    return Polynomial(n, {m: rng.choice([-2, -1, 1, 2, 3]) for m in rng.sample(monos, min(nterms, len(monos)))})


def random_ideal(rng, n=3, ngens=2, max_deg=4):
    gens = [random_form(rng, n, rng.randint(1, max_deg)) for _ in range(ngens)]
    return Ideal(gens, n)


@pytest.mark.parametrize("order", [GREVLEX, GRLEX])
def test_groebner_basis_satisfies_criterion(order):
    rng = random.Random(7)
    for _ in range(8):
        I = random_ideal(rng, ngens=3, max_deg=3)
        gb = buchberger(I.gens, order, 3)
        assert gb.check_criterion()
        for g in I.gens:
            assert gb.contains(g)


def test_twisted_cubic():
    gens = [P("x0*x2-x1^2", 4), P("x1*x3-x2^2", 4), P("x0*x3-x1*x2", 4)]
    gb = buchberger(gens, GREVLEX, 4)
    # Hilbert polynomial 3t+1
    assert [gb.hilbert(t) for t in range(6)] == [1, 4, 7, 10, 13, 16]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_hilbert_function_independent_of_order_and_engine(seed):
    rng = random.Random(seed)
    I = random_ideal(rng, ngens=3, max_deg=3)
    a = [buchberger(I.gens, GREVLEX, 3).hilbert(t) for t in range(7)]
    b = [buchberger(I.gens, GRLEX, 3).hilbert(t) for t in range(7)]
    c = I.hilbert_vector(6, method="degreewise")
    assert a == b == c


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_normal_form_is_canonical(seed):
    rng = random.Random(seed)
    gens = [random_form(rng, 3, 2), random_form(rng, 3, 2)]
    I = Ideal(gens, 3)
    f = random_form(rng, 3, 4, 5)
    g = f + gens[0] * random_form(rng, 3, 2, 2) - gens[1] * random_form(rng, 3, 2, 2)
    for method in ("groebner", "degreewise"):
        assert I.normal_form(f, method) == I.normal_form(g, method)
        assert I.contains(f - I.normal_form(f, method), method)


def test_normal_form_sign():
    # modulo x1^3 + x2^3 the monomial x1^3 x2^2 becomes -x2^5
    I = Ideal([P("x1^3+x2^3", 3)], 3, method="groebner")
    assert I.normal_form(P("x1^3*x2^2", 3)) == P("-x2^5", 3)


def test_degreewise_matches_groebner_on_monomial_ideal():
    I = Ideal([P("x0^2", 3), P("x1^3", 3), P("x0*x2^2", 3)], 3)
    for t in range(7):
        assert I.hilbert_function(t, "degreewise") == I.hilbert_function(t, "groebner")
        assert sorted(I.quotient_basis(t, "degreewise")) == sorted(I.quotient_basis(t, "groebner"))


def test_complete_intersection_hilbert():
    # x0^2, x1^2, x2^2: (1 + t)^3
    I = Ideal([P("x0^2", 3), P("x1^2", 3), P("x2^2", 3)], 3)
    assert I.hilbert_vector(4) == [1, 3, 3, 1, 0]


@pytest.mark.parametrize("seed", range(24))
def test_intersection_matches_elimination(seed):
    rng = random.Random(1000 + seed)
    a = random_ideal(rng, ngens=2, max_deg=3)
    b = random_ideal(rng, ngens=2, max_deg=3)
    inter = IntersectionIdeal(a, b)
    elim = intersection_by_elimination(a, b)
    for t in range(7):
        assert inter.hilbert_function(t) == elim.hilbert_function(t)
        span = ideal_intersection_degreewise(a, b, t)
        for row in span.rows.values():
            assert a.contains(row) and b.contains(row)
            assert elim.contains(row)


def test_intersection_of_coordinate_ideals():
    a = Ideal([P("x0", 3)], 3)
    b = Ideal([P("x1", 3)], 3)
    inter = IntersectionIdeal(a, b)
    assert inter.contains(P("x0*x1", 3))
    assert not inter.contains(P("x0", 3))
    assert [inter.hilbert_function(t) for t in range(4)] == [1, 3, 5, 7]


def test_smooth_fermat_and_singular_cone():
    fermat = P("x0^4+x1^4+x2^4+x3^4", 4)
    cert = is_smooth(fermat)
    assert cert.smooth
    assert cert.vanishing_degree == 4 * 2 + 1
    cone = P("x0^3+x1^3+x2^3", 4)
    bad = is_smooth(cone)
    assert not bad.smooth
    assert 3 in bad.missing_variables


@pytest.mark.parametrize("text,n,smooth", [
    ("x0^3+x1^3+x2^3+x3^3", 4, True),
    ("x0*x1*x2+x3^3", 4, False),
    ("x0^2*x1+x1^2*x2+x2^2*x0", 3, True),
])
def test_split_method_agrees_with_groebner(text, n, smooth):
    f = P(text, n)
    assert is_smooth(f, method="groebner").smooth is smooth
    assert is_smooth(f, method="split").smooth is smooth


def test_jacobian_socle():
    f = P("x0^3+x1^3+x2^3", 3)
    J = jacobian_ideal(f)
    # complete intersection of three quadrics
    assert J.hilbert_vector(4) == [1, 3, 3, 1, 0]


def test_factor_and_branches():
    fs = factor_polynomial(P("x0^2-x1^2", 2))
    assert len(fs) == 2
    assert fs[0] * fs[1] in (P("x0^2-x1^2", 2), P("x1^2-x0^2", 2))
    leaves = zero_set_branches([P("x0*x1", 3), P("x1*x2", 3), P("x0*x2", 3)], 3)
    # the three coordinate points
    assert len(leaves) == 3


def test_modular_leading_monomials():
    gens = [P("x0^2+x1*x2", 3), P("x1^2", 3), P("x2^2", 3)]
    lms = modular_leading_monomials(gens, 32003)
    assert lms is not None
    assert {m for m in lms if sum(1 for e in m if e) == 1} >= {(2, 0, 0), (0, 2, 0), (0, 0, 2)}
    # p divides a denominator
    assert modular_leading_monomials([P("1/7*x0", 1)], 7) is None


def test_fermat_sextic_and_family_member_smooth():
    from hodgelab.scenarios import x_kd_polynomial
    fermat = P("+".join(f"x{i}^6" for i in range(6)), 6)
    assert is_smooth(fermat).smooth
    assert is_smooth(x_kd_polynomial(2, 6)).smooth


def test_repeated_factor_is_singular():
    f = P("x0*x1*x2^4+x3^6", 4)
    assert not is_smooth(f).smooth
    assert not is_smooth(f, method="split").smooth
