import cmath
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from conftest import numeric
from frobex.errors import CapacityError, FieldMismatchError, FrobexParseError
from frobex.scalars import (
    cyclotomic_poly,
    embed,
    euler_phi,
    field_make,
    format_poly,
    parse_poly,
    root_of_unity,
    sqrt_conductor,
    sqrt_rational,
)

CONDUCTORS = [1, 3, 4, 5, 8, 12, 24]
fractions = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def elements(draw, N=None):
    N = N or draw(st.sampled_from(CONDUCTORS))
    F = field_make(N)
    coeffs = draw(st.lists(fractions, min_size=F.degree, max_size=F.degree))
    return F.from_coeffs(coeffs)


@st.composite
def triples(draw):
    N = draw(st.sampled_from(CONDUCTORS))
    return draw(elements(N)), draw(elements(N)), draw(elements(N))


def close(a, b, tol=1e-9):
    return abs(a - b) < tol * (1 + abs(b))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 12, 15, 24])
def test_cyclotomic_poly_roots_and_degree(n):
    coeffs = cyclotomic_poly(n)
    assert len(coeffs) - 1 == euler_phi(n)
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            w = cmath.exp(2j * cmath.pi * k / n)
            assert abs(sum(c * w ** i for i, c in enumerate(coeffs))) < 1e-8


@given(triples())
def test_ring_laws(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == a.field.zero()


@given(triples())
def test_arithmetic_matches_complex_evaluation(t):
    a, b, _ = t
    assert close(numeric(a + b), numeric(a) + numeric(b))
    assert close(numeric(a * b), numeric(a) * numeric(b))


@given(elements())
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == a.field.one()
        assert close(numeric(a.inverse()), 1 / numeric(a))


@pytest.mark.parametrize("q", [2, 3, 5, 6, 7, 10, 12, Fraction(1, 3), Fraction(3, 8), 49])
def test_sqrt_rational_is_positive_real_root(q):
    F = field_make(sqrt_conductor(q))
    r = sqrt_rational(F, q)
    assert r * r == F(Fraction(q))
    v = numeric(r)
    assert abs(v.imag) < 1e-9 and v.real > 0
    assert close(v.real, float(Fraction(q)) ** 0.5)


def test_sqrt_conductor_values():
    assert [sqrt_conductor(n) for n in (1, 2, 3, 4, 5, 6, 7)] == [1, 8, 12, 1, 5, 24, 28]


def test_sqrt_needs_the_right_field():
    with pytest.raises(FieldMismatchError):
        sqrt_rational(field_make(4), 2)


@pytest.mark.parametrize("N,n", [(8, 4), (8, 8), (12, 3), (12, 6), (5, 10), (3, 6), (7, 14)])
def test_root_of_unity_order(N, n):
    F = field_make(N)
    w = root_of_unity(F, n, 1)
    assert w ** n == F.one()
    for d in range(1, n):
        if n % d == 0:
            assert w ** d != F.one()
    assert close(numeric(w), cmath.exp(2j * cmath.pi / n))


def test_root_of_unity_missing():
    with pytest.raises(FieldMismatchError):
        root_of_unity(field_make(8), 3)


@given(elements(24))
def test_embed_preserves_value(a):
    F = field_make(12)
    x = F.from_coeffs([c for c in a.coeffs][: F.degree])
    y = embed(x, a.field)
    assert close(numeric(y), numeric(x))


@given(elements())
def test_text_round_trip(a):
    assert parse_poly(format_poly(a), a.field) == a


@pytest.mark.parametrize("text", ["1+", "z^", "2*/z", "q", "1/0"])
def test_parse_errors_carry_position(text):
    with pytest.raises(FrobexParseError) as info:
        parse_poly(text, field_make(8))
    assert 0 <= info.value.position <= len(text)


def test_capacity():
    with pytest.raises(CapacityError):
        field_make(10_000)
