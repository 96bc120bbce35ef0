import pytest

from hodgelab.algebra import Polynomial, parse_polynomial
from hodgelab.hodge import (GorensteinError, HodgeIdealError, LinearSpacePlane,
                            associated_ideal_from_decomposition, associated_ideal_general,
                            associated_ideal_of_plane, check_gorenstein, class_representative,
                            jacobian_in_ideal, joint_tangent_codim, lemma_applies, plane_decomposition,
                            tangent_codim)
from hodgelab.ideals import Ideal
from hodgelab.scenarios import dan_default_cofactors, dan_polynomial


def P(text, n):
    return parse_polynomial(text, n)


@pytest.fixture(scope="module")
def dan5():
    g, h = dan_default_cofactors(5)
    return dan_polynomial(g, h)


def test_plane_decomposition_reproduces_f(dan5):
    plane = LinearSpacePlane.coordinate(4, [0, 3])
    ls, gs = plane_decomposition(dan5, plane)
    total = sum((l * g for l, g in zip(ls, gs)), Polynomial.zero(4))
    assert total == dan5
    assert all(g.homogeneous_degree() == 4 for g in gs)


def test_plane_decomposition_with_non_coordinate_forms():
    # f vanishes on V(x0 + x1, x2 - x3)
    l1, l2 = P("x0+x1", 4), P("x2-x3", 4)
    f = l1 * P("x0^2+x2^2", 4) + l2 * P("x1^2+x3^2", 4)
    ls, gs = plane_decomposition(f, LinearSpacePlane((l1, l2)))
    assert ls[0] * gs[0] + ls[1] * gs[1] == f


def test_plane_decomposition_rejects_non_containing_plane():
    f = P("x0^3+x1^3+x2^3+x3^3", 4)
    with pytest.raises(HodgeIdealError):
        plane_decomposition(f, LinearSpacePlane.coordinate(4, [0, 1]))


def test_dependent_forms_rejected():
    with pytest.raises(HodgeIdealError):
        LinearSpacePlane((P("x0+x1", 4), P("2*x0+2*x1", 4)))


def test_associated_ideal_gorenstein(dan5):
    ai = associated_ideal_of_plane(dan5, LinearSpacePlane.coordinate(4, [0, 3]))
    s = ai.socle_degree
    assert s == 2 * 3
    rep = check_gorenstein(ai)
    assert rep.symmetric
    assert rep.hilbert[s] == 1
    assert ai.hilbert_function(s + 1) == 0
    assert ai.length() == 4 ** 2
    assert rep.hilbert == [1, 2, 3, 4, 3, 2, 1]


def test_jacobian_contained_in_associated_ideal(dan5):
    ai = associated_ideal_of_plane(dan5, LinearSpacePlane.coordinate(4, [0, 3]))
    for t in range(4, ai.socle_degree + 1):
        assert jacobian_in_ideal(dan5, ai, t)


def test_non_gorenstein_detected():
    # x0^2, x0 x1, x1^2 in two variables: socle in degree 1 has dimension 2
    I = Ideal([P("x0^2", 2), P("x0*x1", 2), P("x1^2", 2)], 2)
    from hodgelab.hodge import AssociatedIdeal
    ai = AssociatedIdeal(I, 0, 3, 1, None)
    with pytest.raises(GorensteinError):
        check_gorenstein(ai)


def test_decomposition_requires_regular_sequence():
    n = 4
    ls = [P("x0", n), P("x1", n)]
    gs = [P("x2^2", n), P("x2*x3", n)]
    with pytest.raises(HodgeIdealError):
        associated_ideal_from_decomposition(ls, gs)


@pytest.mark.parametrize("k,d,expected", [(1, 5, False), (2, 6, True), (2, 3, False), (3, 4, True)])
def test_lemma_applies(k, d, expected):
    assert lemma_applies(k, d) is expected


def test_tangent_codims(dan5):
    I1 = associated_ideal_of_plane(dan5, LinearSpacePlane.coordinate(4, [0, 3]))
    I2 = associated_ideal_of_plane(dan5, LinearSpacePlane.coordinate(4, [1, 3]))
    c1 = tangent_codim(I1)
    assert c1 == I1.hilbert[5]
    joint = joint_tangent_codim([I1, I2], 5)
    assert joint >= c1
    assert joint_tangent_codim([I1], 5) == c1


def test_general_construction_matches_decomposition(dan5):
    ai = associated_ideal_of_plane(dan5, LinearSpacePlane.coordinate(4, [0, 3]))
    rep = class_representative(dan5, ai)
    assert rep.homogeneous_degree() == ai.socle_degree
    gen = associated_ideal_general(dan5, rep)
    for t in range(ai.socle_degree + 2):
        assert gen.hilbert_function(t) == ai.hilbert_function(t)
    for g in ai.ideal.gens:
        assert gen.ideal.contains(g)


def test_general_construction_rejects_wrong_degree(dan5):
    with pytest.raises(HodgeIdealError):
        associated_ideal_general(dan5, P("x0^5", 4))
