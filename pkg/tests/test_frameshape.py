from fractions import Fraction

import pytest
from hypothesis import given, settings

from strange_duality.errors import FrameParseError, NonPolynomial, NotCyclotomicProduct, PoleAtOne
from strange_duality.frameshape import (
    FrameShape,
    IntPolynomial,
    concatenate,
    cyclotomic,
    cyclotomic_factorization,
    degree,
    divisors,
    euler_phi,
    format_frame,
    from_char_poly,
    is_self_dual,
    parse_frame,
    saito_dual,
    to_char_poly,
    trace_power,
    value_at_one,
)

from strategies import frame_shapes, polynomial_shapes


def test_parse_simple():
    s = parse_frame("2*3*7*42/1*6*14*21")
    assert s.exponents == {1: -1, 2: 1, 3: 1, 6: -1, 7: 1, 14: -1, 21: -1, 42: 1}
    assert s.order == 42


def test_parse_powers_and_order():
    s = parse_frame("2^2*18/1^2*9@36")
    assert s.exponents == {1: -2, 2: 2, 9: -1, 18: 1}
    assert s.order == 36
    assert format_frame(s) == "2^2*18/1^2*9@36"


def test_parse_whitespace_and_cancellation():
    assert parse_frame(" 2 * 3 / 3 * 1 ") == FrameShape({2: 1, 1: -1}, 2)


@pytest.mark.parametrize("bad", ["", "2*", "a/b", "2/3/4", "0^2", "2^0", "2/", "3/3", "2@0", "6@4"])
def test_parse_errors(bad):
    with pytest.raises(FrameParseError):
        parse_frame(bad)


def test_format_all_negative():
    s = FrameShape({1: -1, 2: -2}, 2)
    assert format_frame(s) == "1/1^2*2^2"
    assert parse_frame(format_frame(s)) == s


def test_order_must_be_multiple():
    with pytest.raises(ValueError):
        FrameShape({4: 1}, 6)


def test_divisors_and_phi():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [euler_phi(n) for n in (1, 2, 9, 12, 30)] == [1, 1, 6, 4, 8]


def test_cyclotomic_small():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)


def test_char_poly_e12():
    s = parse_frame("2*3*7*42/1*6*14*21")
    poly = to_char_poly(s)
    assert poly.degree == 12 == degree(s)
    assert poly.coeffs == tuple(reversed(poly.coeffs))
    assert cyclotomic_factorization(poly) == {42: 1}


def test_char_poly_not_polynomial():
    with pytest.raises(NonPolynomial):
        to_char_poly(parse_frame("1/2"))


def test_from_char_poly_errors():
    with pytest.raises(NotCyclotomicProduct):
        from_char_poly(IntPolynomial([1, 1, 1, 1, 0, 1]), 6)  # not cyclotomic
    with pytest.raises(NotCyclotomicProduct):
        from_char_poly(cyclotomic(5), 6)  # fifth roots are not sixth roots


def test_saito_examples():
    e13 = parse_frame("2*3*30/1*6*15")
    assert saito_dual(e13) == parse_frame("2*5*30/1*10*15")
    assert is_self_dual(parse_frame("2*3*7*42/1*6*14*21"))


def test_saito_needs_order():
    # the same exponents with a different order have a different dual
    a = parse_frame("2/1")
    b = parse_frame("2/1@4")
    assert saito_dual(a) == a
    assert saito_dual(b) == FrameShape({2: -1, 4: 1}, 4)


def test_trace_and_value():
    s = parse_frame("2*3*30/1*6*15")
    assert trace_power(s, 1) == -1
    assert trace_power(s, 6) == -1 + 2 + 3 - 6
    assert value_at_one(s) == Fraction(2)
    assert value_at_one(parse_frame("2*3/1@6")) == 0
    with pytest.raises(PoleAtOne):
        value_at_one(parse_frame("2/1^2"))
    with pytest.raises(ValueError):
        trace_power(s, 0)


def test_concatenate_orders():
    a = parse_frame("2^2*14/1^2*7")
    b = parse_frame("2*14^2/1*7^2")
    c = concatenate(a, b)
    assert c == parse_frame("2^3*14^3/1^3*7^3")
    assert c.order == 14


@settings(max_examples=100)
@given(frame_shapes())
def test_format_parse_roundtrip(s):
    assert parse_frame(format_frame(s)) == s


@settings(max_examples=100)
@given(frame_shapes())
def test_saito_involution(s):
    assert saito_dual(saito_dual(s)) == s
    assert saito_dual(s).order == s.order


@settings(max_examples=100)
@given(polynomial_shapes())
def test_char_poly_roundtrip(s):
    assert from_char_poly(to_char_poly(s), s.order) == s


@settings(max_examples=100)
@given(frame_shapes(), frame_shapes())
def test_concatenation_additive(a, b):
    c = concatenate(a, b)
    assert degree(c) == degree(a) + degree(b)
    for k in (1, 2, 3, 6, 12):
        assert trace_power(c, k) == trace_power(a, k) + trace_power(b, k)


@settings(max_examples=100)
@given(polynomial_shapes(), polynomial_shapes())
def test_concatenation_multiplies_polynomials(a, b):
    assert to_char_poly(concatenate(a, b)) == to_char_poly(a) * to_char_poly(b)
