from hypothesis import given, settings
from hypothesis import strategies as st

from hodgelab.algebra import QQ, NuPoly
from hodgelab.linalg import (bareiss, factor_roots, left_kernel, mat_vec_left, nullspace, rank,
                             rank_over_number_field, real_root_intervals, rref, solve)

small = st.integers(-4, 4)


def matrices(rows=4, cols=4):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=60, deadline=None)
@given(matrices(3, 5))
def test_rank_nullity(M):
    M = [[QQ(x) for x in row] for row in M]
    ker = nullspace(M)
    assert rank(M) + len(ker) == 5
    for v in ker:
        assert all(sum((a * b for a, b in zip(row, v)), QQ(0)) == 0 for row in M)


@settings(max_examples=60, deadline=None)
@given(matrices(4, 3))
def test_left_kernel_annihilates(M):
    M = [[QQ(x) for x in row] for row in M]
    for w in left_kernel(M):
        assert not any(mat_vec_left(w, M))
    assert len(left_kernel(M)) == 4 - rank(M)


@settings(max_examples=60, deadline=None)
@given(matrices(3, 3), st.lists(small, min_size=3, max_size=3))
def test_solve(M, b):
    M = [[QQ(x) for x in row] for row in M]
    b = [QQ(x) for x in b]
    x = solve(M, b)
    if x is None:
        assert rank(M) < 3
    else:
        assert [sum((a * c for a, c in zip(row, x)), QQ(0)) for row in M] == b


def test_rref_identity():
    rows, piv = rref([[2, 4], [1, 3]])
    assert piv == [0, 1]
    assert rows == [[1, 0], [0, 1]]


def test_bareiss_determinant():
    nu = NuPoly.nu()
    one = NuPoly((1,))
    M = [[NuPoly(), one, nu], [one, -one, NuPoly()], [nu, NuPoly(), -nu]]
    res = bareiss(M)
    assert res.rank == 3
    assert res.minor in (nu * (nu + one), -(nu * (nu + one)))


def test_factor_roots_and_intervals():
    nu = NuPoly.nu()
    p = nu * (nu + NuPoly((1,))) * (nu * nu - NuPoly((2,)))
    roots, others = factor_roots(p)
    assert roots == [QQ(-1), QQ(0)]
    assert others == [NuPoly((-2, 0, 1))]
    ivs = real_root_intervals(NuPoly((-2, 0, 1)))
    assert len(ivs) == 2
    for a, b in ivs:
        assert (a * a - 2) * (b * b - 2) <= 0 or a == b


def test_rank_over_number_field():
    nu = NuPoly.nu()
    two = NuPoly((2,))
    one = NuPoly((1,))
    m = NuPoly((-2, 0, 1))
    # [[nu, 2], [1, nu]] is singular exactly at nu = +-sqrt(2)
    assert rank_over_number_field([[nu, two], [one, nu]], m) == 1
    assert rank_over_number_field([[nu, one], [one, nu]], m) == 2
