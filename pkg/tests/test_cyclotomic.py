import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from u3atlas.cyclotomic import (Cyclotomic, cyclotomic_polynomial, format_literal, inverse, parse_literal,
                                rational, root_of_unity, totient)

CONDUCTORS = [1, 3, 4, 5, 8, 9, 12, 15, 24, 27, 36]


@st.composite
def elements(draw, n=None):
    n = n or draw(st.sampled_from(CONDUCTORS))
    terms = draw(st.lists(st.tuples(st.integers(-5, 5), st.integers(1, 4), st.integers(0, 2 * n)),
                          min_size=0, max_size=4))
    x = rational(0, n)
    for c, d, k in terms:
        x = x + root_of_unity(n, k) * rational(Fraction(c, d), n)
    return x


def close(a, b, tol=1e-9):
    return abs(complex(a) - complex(b)) < tol


def test_totient_matches_polynomial_degree():
    for n in range(1, 40):
        assert len(cyclotomic_polynomial(n)) - 1 == totient(n)


@pytest.mark.parametrize("n", [3, 5, 7, 8, 9, 12, 20])
def test_roots_match_exponentials(n):
    for k in range(n):
        assert close(root_of_unity(n, k).to_complex(), cmath.exp(2j * cmath.pi * k / n))
    assert root_of_unity(n, 1) ** n == rational(1)


def test_root_sum_vanishes():
    for n in (3, 5, 6, 9):
        total = sum((root_of_unity(n, k) for k in range(1, n)), root_of_unity(n, 0))
        assert total.is_zero()


def test_inverse_of_one_plus_omega():
    # 1 + w = -w^2, so its inverse is -w
    w = root_of_unity(3, 1)
    assert inverse(rational(1) + w) == -w


@given(st.data())
def test_field_axioms(data):
    n = data.draw(st.sampled_from(CONDUCTORS))
    a, b, c = (data.draw(elements(n)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == rational(0)
    if not a.is_zero():
        assert a * inverse(a) == rational(1)


@given(elements(), elements())
def test_agrees_with_complex_arithmetic(a, b):
    assert close((a * b).to_complex(), a.to_complex() * b.to_complex(), 1e-6)
    assert close((a + b).to_complex(), a.to_complex() + b.to_complex(), 1e-6)
    assert close(a.conj().to_complex(), a.to_complex().conjugate(), 1e-6)


@given(elements())
def test_conj_is_involution(a):
    assert a.conj().conj() == a
    norm = a * a.conj()
    assert abs(norm.to_complex().imag) < 1e-6


@given(elements())
def test_literal_round_trip(a):
    assert parse_literal(format_literal(a)) == a


@given(elements(), st.sampled_from([2, 3, 4]))
def test_lift_preserves_value(a, m):
    n = a.conductor * m
    b = a.lift_to(n)
    assert b == a
    assert close(b.to_complex(), a.to_complex())


def test_parse_examples():
    x = parse_literal("-1/3*E(12)^1 + 2*E(3)^2")
    assert close(x.to_complex(), -cmath.exp(2j * cmath.pi / 12) / 3 + 2 * cmath.exp(4j * cmath.pi / 3))
    assert parse_literal("E(4)") * parse_literal("E(4)") == rational(-1)
    with pytest.raises(ValueError):
        parse_literal("E(")


def test_mixed_conductors_combine():
    x = root_of_unity(3, 1) + root_of_unity(4, 1)
    assert close(x.to_complex(), cmath.exp(2j * cmath.pi / 3) + 1j)
    assert x.conductor % 12 == 0
