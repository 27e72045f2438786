from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hallvertex.exact import (
    ONE,
    T,
    PoleError,
    TPoly,
    TRational,
    eval_at,
    hall_twist,
    one_minus_t_power,
    poly_gcd,
)

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(coeff, min_size=0, max_size=7).map(TPoly)
nonzero_polys = polys.filter(bool)


def rat(p, q=ONE):
    return TRational(p) / TRational(q)


def test_inverse_pair():
    f = TRational(TPoly([1, -1]))
    assert f * (ONE / f) == ONE


def test_quotient_reduces_to_canonical_form():
    got = rat(TPoly([1, 0, -1]), TPoly([1, -1]))
    assert got == TRational(TPoly([1, 1]))
    assert got.den.is_one()


def test_exact_division_by_one_minus_t():
    cubic = TPoly([1, -1, -1, 1])
    q, r = cubic.divmod(TPoly([1, -1]))
    assert not r
    assert q == TPoly([1, 0, -1])
    assert q * TPoly([1, -1]) == cubic


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ONE / TRational(0)


@pytest.mark.parametrize("t0, want", [(0, 1), (-1, 2), (Fraction(1, 3), Fraction(2, 3))])
def test_eval_polynomial(t0, want):
    assert eval_at(TPoly([1, -1]), t0) == want


def test_eval_at_pole():
    with pytest.raises(PoleError):
        eval_at(rat(TPoly([1, 1]), TPoly([1, -1])), 1)


@pytest.mark.parametrize("f, e, want", [
    (TPoly([1, 1]), 1, TPoly([1, 1])),
    (TPoly([1]), 0, TPoly([1])),
    (TPoly([0, 1]), 2, TPoly([0, 1])),
])
def test_hall_twist_examples(f, e, want):
    assert hall_twist(TRational(f), e) == TRational(want)


def test_string_format():
    assert str(TPoly([1, -1, -1, 1])) == "t^3-t^2-t+1"
    assert str(TPoly([1, 1])) == "t+1"
    assert str(TPoly([0, 0, 2])) == "2*t^2"
    assert str(TPoly()) == "0"


def test_canonical_denominator_is_primitive_with_positive_lead():
    f = rat(TPoly([2]), TPoly([Fraction(-1, 2), Fraction(1, 4)]))
    assert f.den.has_integer_coeffs()
    assert f.den.lc() > 0
    assert f.den.content() == 1


@given(nonzero_polys, nonzero_polys)
def test_gcd_routes_agree(f, g):
    a = poly_gcd(f, g)
    b = poly_gcd(f, g, method="euclid")
    assert a == b
    assert not f % a and not g % a


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_recovers_common_factor(f, g, h):
    d = poly_gcd(f * h, g * h)
    assert not (f * h) % d and not (g * h) % d
    assert not d % poly_gcd(h, h)


@given(polys, nonzero_polys, nonzero_polys, nonzero_polys)
def test_field_round_trip(a, b, c, d):
    f, g = rat(a, b), rat(c, d)
    assert (f * g) / g == f
    assert (f + g) - g == f
    assert f + g == g + f


@given(polys, nonzero_polys, polys, nonzero_polys)
def test_equality_is_structural(a, b, c, d):
    f = rat(a, b) + rat(c, d)
    g = rat(c, d) + rat(a, b)
    assert f == g
    assert (f.num, f.den) == (g.num, g.den)
    assert hash(f) == hash(g)


@given(nonzero_polys, nonzero_polys, st.integers(-4, 8), st.integers(-4, 8))
def test_hall_twist_is_multiplicative(f, g, e1, e2):
    lhs = hall_twist(TRational(f) * TRational(g), e1 + e2)
    assert lhs == hall_twist(TRational(f), e1) * hall_twist(TRational(g), e2)


@given(polys, nonzero_polys)
def test_json_round_trip(a, b):
    f = rat(a, b)
    assert TRational.from_json(f.to_json()) == f
    assert TPoly.from_json(a.to_json()) == a


def test_powers():
    assert (T ** 3) * (T ** -3) == ONE
    assert TRational(one_minus_t_power(3)) == ONE - T ** 3
