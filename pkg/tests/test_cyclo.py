from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bismash.cyclo import Cyclotomic, cyclotomic_polynomial, rational, root_of_unity


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 12])
def test_root_of_unity_has_order_n(n):
    z = root_of_unity(n)
    power = rational(1)
    for _ in range(n):
        power = power * z
    assert power == rational(1)
    if n > 1:
        assert z != rational(1)


@pytest.mark.parametrize("n", [2, 3, 5, 6, 7, 12])
def test_geometric_sum_vanishes(n):
    total = Cyclotomic.zero(n)
    for k in range(n):
        total = total + root_of_unity(n, k)
    assert total.is_zero()


def test_conjugation_is_ring_involution():
    u = root_of_unity(5) + rational(2)
    v = root_of_unity(5, 3) * Fraction(1, 2)
    assert u.conjugate().conjugate() == u
    assert (u * v).conjugate() == u.conjugate() * v.conjugate()
    assert (u + v).conjugate() == u.conjugate() + v.conjugate()
    assert root_of_unity(7).conjugate() == root_of_unity(7, 6)


def test_mixed_conductor_equality():
    # zeta_10^2 = zeta_5
    assert root_of_unity(10, 2) == root_of_unity(5)
    assert root_of_unity(6, 3) == rational(-1)
    assert root_of_unity(4, 2) == rational(-1)
    assert root_of_unity(6, 2) + root_of_unity(6, 4) == rational(-1)


def test_rationality_predicates():
    z = root_of_unity(5)
    assert not z.is_rational()
    total = z + root_of_unity(5, 2) + root_of_unity(5, 3) + root_of_unity(5, 4)
    assert total == rational(-1)
    assert total.is_rational_integer()
    assert total.as_integer() == -1
    half = rational(Fraction(1, 2), conductor=5)
    assert half.is_rational() and not half.is_rational_integer()
    assert half.as_fraction() == Fraction(1, 2)


def test_division_by_scalar():
    u = root_of_unity(3) * 6
    assert u / 3 == root_of_unity(3) * 2


def small_cyclotomics():
    return st.builds(
        lambda n, ks, q: sum(
            (root_of_unity(n, k) for k in ks), Cyclotomic.zero(n)
        )
        * Fraction(q, 3),
        st.sampled_from([1, 2, 3, 4, 6]),
        st.lists(st.integers(min_value=0, max_value=11), max_size=4),
        st.integers(min_value=-6, max_value=6),
    )


@given(small_cyclotomics(), small_cyclotomics(), small_cyclotomics())
def test_ring_axioms(u, v, w):
    assert u + v == v + u
    assert u * v == v * u
    assert (u + v) + w == u + (v + w)
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w


@given(small_cyclotomics())
def test_additive_inverse(u):
    assert (u - u).is_zero()
    assert u + Cyclotomic.zero() == u
