"""Text grammar: round trips, error positions, variable modes."""

from fractions import Fraction

import pytest

from recip.laurent import LaurentPolynomial, format_poly
from recip.parse import ParseError, parse_poly, parse_ratfunc, parse_rational
from recip.ratfunc import format_ratfunc


def test_rationals_and_whitespace():
    assert parse_ratfunc("3/4").constant_value() == Fraction(3, 4)
    assert parse_ratfunc("  1 +  2 ").constant_value() == 3
    assert parse_ratfunc("-5").constant_value() == -5


def test_unicode_minus_accepted():
    assert parse_poly("1 − X") == parse_poly("1 - X")


def test_monomials_rank1():
    assert parse_poly("X^3") == LaurentPolynomial.monomial(1, (3,))
    assert parse_poly("X^-2") == LaurentPolynomial.monomial(1, (-2,))
    assert parse_poly("X") == LaurentPolynomial.monomial(1, (1,))
    assert parse_poly("2*X^3 + 1") == LaurentPolynomial(1, {(3,): 2, (0,): 1})


def test_monomials_vector_mode():
    p = parse_poly("X^(1,-2)", rank=2)
    assert p == LaurentPolynomial.monomial(2, (1, -2))
    with pytest.raises(ParseError):
        parse_ratfunc("X", rank=2)  # bare variable is ambiguous in vector mode
    with pytest.raises(ParseError):
        parse_ratfunc("X^(1,2,3)", rank=2)


def test_named_variables():
    p = parse_poly("Y*X^-1", rank=2, names=("Y", "X"))
    assert p == LaurentPolynomial.monomial(2, (1, -1))
    r = parse_ratfunc("5 + (X/(X^2+1))*Y^-1", rank=2, names=("Y", "X"))
    assert not r.is_zero()


def test_rational_function_expressions():
    r = parse_ratfunc("1/(X^4-1) + 1/X^7")
    assert r.den.degree() == 11
    assert parse_ratfunc("(1+X)/(1-X)") == parse_ratfunc("-(X+1)/(X-1)")


def test_powers_of_parenthesized_expressions():
    assert parse_ratfunc("(1+X)^2") == parse_ratfunc("1 + 2*X + X^2")
    assert parse_ratfunc("(1+X)^-1") == parse_ratfunc("1/(1+X)")
    assert parse_ratfunc("2^3").constant_value() == 8


def test_parse_errors_report_position():
    with pytest.raises(ParseError) as info:
        parse_ratfunc("X^")
    assert info.value.position == 2
    with pytest.raises(ParseError) as info:
        parse_ratfunc("1 + $")
    assert info.value.position == 4
    with pytest.raises(ParseError) as info:
        parse_ratfunc("(1 + X")
    assert "expected ')'" in str(info.value)
    with pytest.raises(ParseError):
        parse_ratfunc("")
    with pytest.raises(ParseError):
        parse_ratfunc("1/0")
    with pytest.raises(ParseError):
        parse_ratfunc("Z + 1")  # unknown variable


def test_parse_poly_rejects_true_fractions():
    with pytest.raises(ParseError):
        parse_poly("1/(1+X)")


def test_parse_poly_accepts_negative_exponent_sums():
    # values with monomial denominators fold back into Laurent polynomials
    p = parse_poly("X^-3 + X^-2")
    assert p == LaurentPolynomial(1, {(-3,): 1, (-2,): 1})
    assert parse_poly("X^2/X^5") == LaurentPolynomial.monomial(1, (-3,))


def test_format_parse_round_trip_poly():
    import random

    from conftest import random_poly

    rng = random.Random(99)
    for _ in range(60):
        p = random_poly(rng, 1)
        assert parse_poly(format_poly(p)) == p
    for _ in range(40):
        p = random_poly(rng, 2)
        assert parse_poly(format_poly(p), rank=2) == p


def test_format_parse_round_trip_ratfunc():
    import random

    from conftest import random_ratfunc

    rng = random.Random(100)
    for _ in range(60):
        r = random_ratfunc(rng, 1)
        assert parse_ratfunc(format_ratfunc(r)) == r
    for _ in range(30):
        r = random_ratfunc(rng, 2)
        assert parse_ratfunc(format_ratfunc(r), rank=2) == r


def test_parse_rational():
    assert parse_rational("4/5") == Fraction(4, 5)
    assert parse_rational("-1/2") == Fraction(-1, 2)
    with pytest.raises(ParseError):
        parse_rational("x")
    with pytest.raises(ParseError):
        parse_rational("1/0")
