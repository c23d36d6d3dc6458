from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from patword.errors import InvariantViolation
from patword.poly import IntPoly, charpoly, det, poly_gcd

coeffs = st.lists(st.integers(-6, 6), max_size=5)


def test_basic_arithmetic():
    p = IntPoly([1, -1])
    q = IntPoly([1, 1])
    assert p * q == IntPoly([1, 0, -1])
    assert p + q == IntPoly([2])
    assert p - p == IntPoly()
    assert (p * q).degree == 2
    assert IntPoly().degree == -1
    assert IntPoly([0, 0]) == IntPoly()
    assert 3 * p == IntPoly([3, -3])
    assert 1 - IntPoly.x() == p


def test_divexact():
    p = IntPoly([2, 3, 1])
    assert (p * IntPoly([5, -2])).divexact(p) == IntPoly([5, -2])
    with pytest.raises(InvariantViolation):
        IntPoly([1, 0, 1]).divexact(IntPoly([1, 1]))
    with pytest.raises(InvariantViolation):
        IntPoly([1, 2]).divexact(IntPoly([2]))


@given(coeffs, coeffs.filter(lambda c: any(c)))
def test_pseudo_division_identity(a, b):
    a, b = IntPoly(a), IntPoly(b)
    q, rem = a.pseudo_divmod(b)
    e = max(a.degree - b.degree + 1, 0)
    assert b.lead ** e * a == q * b + rem
    assert rem.degree < b.degree


@given(coeffs, coeffs, coeffs)
def test_gcd_divides(a, b, c):
    a, b, c = IntPoly(a), IntPoly(b), IntPoly(c)
    if not c or not (a or b):
        return
    g = poly_gcd(a * c, b * c)
    # the common factor survives, up to its content
    assert g.degree >= c.degree
    if a:
        (a * c * g.lead ** 10).pseudo_divmod(g)
        assert not (a * c).pseudo_divmod(g)[1]
    if b:
        assert not (b * c).pseudo_divmod(g)[1]


def test_gcd_examples():
    a = IntPoly([1, -1]) * IntPoly([2, 3, 1])
    b = IntPoly([1, -1]) * IntPoly([5, 1])
    assert poly_gcd(a, b) == IntPoly([-1, 1])
    assert poly_gcd(IntPoly([1, 1]), IntPoly([1, 2])) == IntPoly([1])


def test_subs_power():
    assert IntPoly([1, 0, -3, 0, 2]).subs_power(2) == IntPoly([1, -3, 2])
    with pytest.raises(InvariantViolation):
        IntPoly([1, 1]).subs_power(2)


def test_reversed():
    assert IntPoly([17, 23, -11, 1]).reversed(3) == IntPoly([1, -11, 23, 17])


def leibniz_det(m):
    n = len(m)
    total = IntPoly()
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = IntPoly([1])
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + (-term if inversions % 2 else term)
    return total


small_matrix = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_charpoly_matches_leibniz(m):
    x = IntPoly.x()
    n = len(m)
    grid = [[(x if i == j else IntPoly()) - m[i][j] for j in range(n)] for i in range(n)]
    cp = charpoly(m)
    assert cp == leibniz_det(grid)
    assert cp.degree == n and cp.lead == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(coeffs.map(IntPoly), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_polynomial_entries(m):
    assert det(m) == leibniz_det(m)


def test_det_needs_pivoting():
    one, zero = IntPoly([1]), IntPoly()
    assert det([[zero, one], [one, zero]]) == IntPoly([-1])
    assert det([[zero, zero], [one, one]]) == IntPoly()
    assert det([]) == IntPoly([1])
