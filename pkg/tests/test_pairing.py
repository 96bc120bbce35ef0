import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgelab.algebra import NuPoly, parse_polynomial
from hodgelab.hodge import associated_ideal_of_plane
from hodgelab.linalg import bareiss, evaluate_matrix, rank
from hodgelab.pairing import (NAMED_SHAPES, PairingError, SoclePairing, canonical_form,
                              critical_nu_values, excess_report, find_blocks, generic_rank,
                              gram_matrix, label_block, left_kernel_at, pairing_value, rank_at,
                              thmTsp_criterion)
from hodgelab.scenarios import x_kd_planes, x_kd_polynomial

NU = NuPoly.nu()
ONE = NuPoly((1,))
ZERO = NuPoly()


def box_count(nfree, bound, t):
    return sum(1 for e in itertools.product(range(bound + 1), repeat=nfree) if sum(e) == t)


@pytest.fixture(scope="module")
def x26():
    f = x_kd_polynomial(2, 6)
    p1, p2 = x_kd_planes(2)
    I1 = associated_ideal_of_plane(f, p1, name="I1")
    I2 = associated_ideal_of_plane(f, p2, name="I2")
    return I1, I2, gram_matrix(I1, I2)


def test_box_oracle_row_count(x26):
    _, _, G = x26
    # (S/I1)_6 and (S/I2)_6 are three-variable boxes, their sum a two-variable box
    c1 = 2 * box_count(3, 4, 6) - box_count(2, 4, 6)
    assert c1 == 35
    assert G.shape == (35, 35)


def test_x26_block_structure(x26):
    _, _, G = x26
    census = G.census()
    assert set(census) == {"(1)", "(nu)", "3x3"}
    assert census == {"(1)": 13, "(nu)": 13, "3x3": 3}
    assert not G.zero_rows()
    assert G.max_nu_degree() == 1
    for b in G.blocks:
        if b.label == "3x3":
            det = bareiss(b.entries).minor
            assert det in (NU * (NU + ONE), -(NU * (NU + ONE)))


def test_x26_rank_and_critical_values(x26):
    _, _, G = x26
    assert generic_rank(G) == 35
    crit = critical_nu_values(G)
    assert {c.value for c in crit} == {Fraction(-1), Fraction(0)}
    coranks = {c.value: c.corank for c in crit}
    assert coranks == {Fraction(-1): 3, Fraction(0): 16}
    assert len(left_kernel_at(G, Fraction(-1))) == 3
    assert left_kernel_at(G, Fraction(7)) == []
    assert rank_at(G, Fraction(1, 3)) == 35


def test_x26_excess_verdicts(x26):
    _, _, G = x26
    rep = excess_report(G, [Fraction(x) for x in (-2, -1, 0, 1)])
    assert [s.verdict for s in rep.samples] == ["NO-EXCESS", "EXCESS", "EXCESS", "NO-EXCESS"]
    assert rep.generic_excess == 0


def test_x26_sufficient_criterion(x26):
    I1, I2, _ = x26
    for ref in (1, 2):
        res = thmTsp_criterion(I1, I2, reference=ref)
        assert not res.infeasible
        assert res.holds
        assert res.left_kernel_dim == 0


def test_socle_pairing_is_symmetric_and_bilinear(x26):
    I1, _, _ = x26
    P1 = SoclePairing(I1)
    a = parse_polynomial("x1^2*x2^3+x3^5", 6)
    b = parse_polynomial("x1^2*x2*x3^4-2*x2^4*x3^3", 6)
    c = parse_polynomial("x1^4*x3^3", 6)
    assert pairing_value(P1, a, b + c) == pairing_value(P1, a, b) + pairing_value(P1, a, c)
    assert pairing_value(P1, a, b) == pairing_value(P1, b, a)
    with pytest.raises(PairingError):
        pairing_value(P1, a, a)


def test_canonical_form_identifies_named_shapes():
    for name, m in NAMED_SHAPES.items():
        assert label_block(m) == name
    # permuted and sign flipped 3x3
    m = NAMED_SHAPES["3x3"]
    perm = [2, 0, 1]
    moved = [[-m[perm[i]][j] if i == 0 else m[perm[i]][j] for j in range(3)] for i in range(3)]
    assert canonical_form(moved) == canonical_form(m)
    assert label_block([[NU, ONE]]) == "(1 nu)"
    assert label_block([[ONE], [NU]]) == "2x1"


def test_find_blocks_components():
    E = [[ONE, ZERO, ZERO], [ZERO, NU, ONE], [ZERO, ZERO, ONE]]
    blocks = sorted(find_blocks(E, 3, 3))
    assert blocks == [([0], [0]), ([1, 2], [1, 2])]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=3, max_size=3),
                min_size=3, max_size=3),
       st.fractions(min_value=-5, max_value=5, max_denominator=6))
def test_bareiss_rank_bounds_specialized_rank(rows, nu0):
    M = [[NuPoly(e) for e in row] for row in rows]
    res = bareiss(M)
    r0 = rank(evaluate_matrix(M, nu0))
    assert r0 <= res.rank
    if res.rank and res.minor.evaluate(nu0) != 0:
        assert r0 == res.rank


def test_box_products_reduce_with_a_sign(x26):
    I1, _, _ = x26
    # x1^5 = -x1 x2^2 x3^2 modulo I1, so overflowing x1 powers flip the sign
    for a1, b1 in [(3, 2), (4, 2), (3, 3)]:
        prod = parse_polynomial(f"x1^{a1 + b1}*x2*x3", 6)
        want = parse_polynomial(f"-x1^{a1 + b1 - 4}*x2^3*x3^3", 6)
        assert I1.ideal.normal_form(prod) == want


def _report_from_entries(entries, ncols):
    from hodgelab.pairing import Block, GramReport
    G = GramReport(list(range(len(entries))), list(range(ncols)), entries, 0, 0)
    for rws, cls in find_blocks(entries, len(entries), ncols):
        sub = [[entries[i][j] for j in cls] for i in rws]
        G.blocks.append(Block(rws, cls, label_block(sub), sub))
    return G


def test_single_nu_entry_is_critical_at_zero():
    G = _report_from_entries([[NU]], 1)
    assert generic_rank(G) == 1
    assert [(c.value, c.corank) for c in critical_nu_values(G)] == [(Fraction(0), 1)]


def test_zero_matrix_has_rank_zero():
    G = _report_from_entries([[ZERO, ZERO], [ZERO, ZERO]], 2)
    assert generic_rank(G) == 0
    assert critical_nu_values(G) == []
    assert len(left_kernel_at(G, Fraction(3))) == 2


def test_irrational_critical_values_are_reported_exactly():
    # det = nu^2 - 2
    G = _report_from_entries([[NU, NuPoly((2,))], [ONE, NU]], 2)
    crit = critical_nu_values(G)
    assert len(crit) == 1 and crit[0].value is None
    assert crit[0].polynomial == NuPoly((-2, 0, 1))
    assert crit[0].corank == 1


@settings(max_examples=50, deadline=None)
@given(st.fractions(min_value=-50, max_value=50, max_denominator=40))
def test_specialized_rank_bounded_by_generic(x26, nu0):
    _, _, G = x26
    r = rank_at(G, nu0)
    assert r <= 35
    if nu0 not in (0, -1):
        assert r == 35


def test_swapping_the_ideals_keeps_minus_one_critical(x26):
    I1, I2, _ = x26
    G = gram_matrix(I2, I1)
    values = {c.value for c in critical_nu_values(G)}
    assert Fraction(-1) in values
    assert generic_rank(G) == 35


def test_block_permuted_matrix_is_block_diagonal(x26):
    _, _, G = x26
    M, _, _ = G.block_permuted()
    r0 = c0 = 0
    for b in G.blocks:
        r1, c1 = r0 + len(b.rows), c0 + len(b.cols)
        for i in range(r0, r1):
            for j in range(len(M[0])):
                if not c0 <= j < c1:
                    assert not M[i][j]
        r0, c0 = r1, c1
    assert sum(b.rank for b in G.blocks) == generic_rank(G)
