from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from descpoly.polynomial import IntPoly, LaurentPoly, NegativeExponentResidue, geometric

small_polys = st.lists(st.integers(-9, 9), max_size=6).map(IntPoly)
small_laurents = st.tuples(
    st.lists(st.integers(-9, 9), max_size=6), st.integers(-4, 4)
).map(lambda t: LaurentPoly(t[0], t[1]))


def test_normalization_trims_trailing_zeros():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly((0, 0)).coeffs == ()
    assert IntPoly().is_zero()


def test_degree_sentinel():
    assert IntPoly().degree is None
    assert IntPoly((7,)).degree == 0
    assert IntPoly((0, 0, 3)).degree == 2


def test_add_identity():
    p = IntPoly((1, 1))
    assert p + IntPoly() == p
    assert IntPoly() + p == p


def test_mul_hand_expansion():
    assert IntPoly((1, 1)) * IntPoly((1, 1, 1)) == IntPoly((1, 2, 2, 1))


def test_pow_matches_binomial_theorem():
    # oracle: binomial theorem via math.comb
    for e in range(7):
        assert (IntPoly((1, 1)) ** e).coeffs == tuple(comb(e, j) for j in range(e + 1))


def test_pow_negative_exponent_rejected():
    with pytest.raises(ValueError):
        IntPoly((1, 1)) ** -1


def test_geometric():
    assert geometric(0) == IntPoly((1,))
    assert geometric(2) == IntPoly((1, 1, 1))
    assert geometric(4) == IntPoly((1,) * 5)
    with pytest.raises(ValueError):
        geometric(-1)


def test_substitute_power():
    assert IntPoly((1, 1)).substitute_power(5).coeffs == (1, 0, 0, 0, 0, 1)
    assert IntPoly((1, 4, 1)).substitute_power(3).coeffs == (1, 0, 0, 4, 0, 0, 1)
    p = IntPoly((2, -3, 5))
    assert p.substitute_power(1) == p


def test_multisect():
    assert IntPoly((1, 3, 3, 1)).multisect(2) == IntPoly((1, 3))
    assert IntPoly((1, 1, 1, 1, 1, 1)).multisect(3) == IntPoly((1, 1))
    p = IntPoly((4, 0, -2, 7))
    assert p.multisect(1) == p


def test_reverse():
    assert IntPoly((1, 1)).reverse(1) == IntPoly((1, 1))
    assert IntPoly((1, 2)).reverse(2) == IntPoly((0, 2, 1))
    p2 = IntPoly((1, 1, 2, 1, 1))
    assert p2.reverse(4) == p2
    with pytest.raises(ValueError):
        IntPoly((1, 2, 3)).reverse(1)


def test_symmetry_and_unimodality():
    assert IntPoly((1, 1, 2, 1, 1)).is_symmetric()
    assert not IntPoly((1, 2)).is_symmetric()
    assert IntPoly((1, 2, 2, 1)).is_unimodal()
    assert not IntPoly((1, 3, 1, 3, 1)).is_unimodal()
    with pytest.raises(ValueError):
        IntPoly().is_symmetric()
    with pytest.raises(ValueError):
        IntPoly().is_unimodal()


def test_evaluate():
    assert IntPoly((1, 3, 3, 1)).evaluate(1) == 8
    assert IntPoly((1, 0, -2)).evaluate(3) == -17
    assert IntPoly().evaluate(5) == 0


def test_pretty():
    assert IntPoly((1, 0, 2, -1)).pretty() == "1 + 2u^2 - u^3"
    assert IntPoly().pretty() == "0"
    assert IntPoly((0, -1)).pretty("y") == "-y"


@given(small_polys, small_polys)
def test_add_commutes(p, q):
    assert p + q == q + p


@given(small_polys, small_polys)
def test_mul_commutes(p, q):
    assert p * q == q * p


@given(small_polys, small_polys, small_polys)
def test_mul_associates_and_distributes(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(small_polys, st.integers(1, 4))
def test_multisect_inverts_substitute_power(p, m):
    assert p.substitute_power(m).multisect(m) == p


@given(small_polys, st.integers(0, 12))
def test_reverse_is_involutive(p, d):
    if p.degree is not None and d < p.degree:
        d = p.degree
    assert p.reverse(d).reverse(d) == p


@given(st.integers(0, 30))
def test_geometric_at_one(k):
    assert geometric(k).evaluate(1) == k + 1


def test_laurent_basics():
    u_inv = LaurentPoly.term(1, -1)
    u = LaurentPoly.term(1, 1)
    assert u_inv * u == LaurentPoly.term(1, 0)
    assert u_inv * u == LaurentPoly((1,))


def test_laurent_hand_trace_to_poly():
    # u - u^-1 + 1 + u^-1  ->  1 + u
    total = (
        LaurentPoly.term(1, 1)
        - LaurentPoly.term(1, -1)
        + LaurentPoly.term(1, 0)
        + LaurentPoly.term(1, -1)
    )
    assert total.to_poly() == IntPoly((1, 1))


def test_laurent_negative_residue_raises():
    with pytest.raises(NegativeExponentResidue):
        LaurentPoly.term(1, -1).to_poly()


def test_laurent_from_poly_round_trip():
    p = IntPoly((3, 0, -1))
    assert LaurentPoly.from_poly(p).to_poly() == p


@given(small_laurents, small_laurents)
def test_laurent_add_commutes(a, b):
    assert a + b == b + a


@given(small_laurents, small_laurents, small_laurents)
def test_laurent_mul_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(small_laurents)
def test_laurent_normalization(a):
    if not a.is_zero():
        assert a.coeffs[0] != 0 and a.coeffs[-1] != 0
    else:
        assert a.min_exp == 0
