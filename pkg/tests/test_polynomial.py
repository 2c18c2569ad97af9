import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from deltaproof.polynomial import (
    BivariatePolynomial,
    LiteralError,
    Polynomial,
    VariableMismatchError,
    binomial_poly,
    evaluate,
    evaluate2,
    from_binomial_basis,
    parse_poly_literal,
    poly_add,
    poly_mul,
    poly_shift,
    substitute_affine,
    to_binomial_basis,
)

from _strategies import polynomials, random_polynomial, random_rational, rationals

X = Polynomial.variable("x")
Y = Polynomial.variable("y")
A = Fraction(3, 7)


def falling_binomial(t, k):
    """C(t, k) for any rational t, straight from the falling-factorial product."""
    num = Fraction(1)
    for j in range(k):
        num *= t - j
    return num / factorial(k)


def test_zero_polynomial_sentinels():
    zero = Polynomial()
    assert zero.coeffs == ()
    assert zero.degree is None
    with pytest.raises(ValueError):
        zero.leading_coefficient
    assert Polynomial([1, 0, 0]).coeffs == (1,)


def test_add_examples():
    assert poly_add(X**2, -(X**2)).is_zero()
    assert poly_add(1 + X, 1 + X) == Polynomial([2, 2])


def test_mul_examples():
    assert poly_mul(1 + X, 1 + X) == Polynomial([1, 2, 1])
    assert poly_mul(Polynomial([4, 5]), Polynomial()).is_zero()


def test_mismatched_variables_rejected():
    with pytest.raises(VariableMismatchError):
        X + Y
    with pytest.raises(VariableMismatchError):
        X * Y


@given(polynomials(), polynomials())
def test_add_mul_agree_with_pointwise_evaluation(p, q):
    assert evaluate(p + q, A) == evaluate(p, A) + evaluate(q, A)
    assert evaluate(p * q, A) == evaluate(p, A) * evaluate(q, A)


def test_ring_laws_on_random_triples():
    rng = random.Random(20261015)
    for _ in range(200):
        p, q, r = (random_polynomial(rng, rng.randint(0, 8)) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p + q == q + p
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        a = random_rational(rng)
        assert evaluate(p * q + r, a) == evaluate(p, a) * evaluate(q, a) + evaluate(r, a)


@given(polynomials(), polynomials())
def test_degree_and_leading_coefficient_of_product(p, q):
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).degree == p.degree + q.degree
        assert (p * q).leading_coefficient == p.leading_coefficient * q.leading_coefficient


def test_binomial_poly_examples():
    assert binomial_poly(0) == Polynomial([1])
    assert binomial_poly(2) == Polynomial([0, Fraction(-1, 2), Fraction(1, 2)])
    assert binomial_poly(3)(-1) == -1


@pytest.mark.parametrize("k", range(16))
def test_binomial_poly_degree_and_values(k):
    p = binomial_poly(k)
    assert p.degree == k
    assert p.leading_coefficient == Fraction(1, factorial(k))
    for t in (-5, -1, Fraction(1, 3), 0, 4, 20):
        assert p(t) == falling_binomial(Fraction(t), k)
    for t in range(0, 25):
        assert p(t) == comb(t, k)


def test_shift_examples():
    assert poly_shift(X**2, 1) == Polynomial([1, 2, 1])
    p = Polynomial([3, -1, 4, 1])
    assert poly_shift(p, 0) == p


@given(polynomials(), rationals)
def test_shift_round_trip_and_pointwise(p, c):
    assert p.shift(c).shift(-c) == p
    assert p.shift(c)(A) == p(A + c)


def test_substitute_affine_examples():
    i = 1
    assert substitute_affine(X**2, i - Y - 1) == Y**2
    assert substitute_affine(Polynomial([7]), 2 * Y + 1) == Polynomial([7], "y")
    with pytest.raises(ValueError):
        substitute_affine(X, Y**2)


@given(polynomials(), rationals, rationals)
def test_substitute_affine_pointwise(p, a, b):
    affine = Polynomial([b, a], "y")
    assert substitute_affine(p, affine)(2) == p(affine(2))


def test_eval_examples():
    assert evaluate(Polynomial([1, 2, 1]), 1) == 4
    assert evaluate(Polynomial(), Fraction(5, 3)) == 0


def convolution_left_side(n, x, y):
    return sum(falling_binomial(Fraction(x), k) * falling_binomial(Fraction(y), n - k) for k in range(n + 1))


def test_eval2_on_convolution():
    n = 2
    F = BivariatePolynomial()
    for k in range(n + 1):
        F = F + BivariatePolynomial.from_x(binomial_poly(k)) * binomial_poly(n - k, "y")
    assert convolution_left_side(2, 3, 4) == 21
    assert evaluate2(F, 3, 4) == 21 == comb(7, 2)


def test_to_binomial_basis_examples():
    assert to_binomial_basis(X**2) == [0, 1, 2]
    assert to_binomial_basis(binomial_poly(3)) == [0, 0, 0, 1]
    assert to_binomial_basis(Polynomial()) == []


def test_binomial_basis_round_trip():
    rng = random.Random(7)
    for _ in range(100):
        p = random_polynomial(rng, rng.randint(0, 12))
        assert from_binomial_basis(to_binomial_basis(p)) == p
        c = [random_rational(rng) for _ in range(rng.randint(1, 13))]
        while c and c[-1] == 0:
            c.pop()
        assert to_binomial_basis(from_binomial_basis(c)) == c


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1,-3/2", [1, Fraction(-3, 2)]),
        ("", []),
        ("0,0,1", [0, 0, 1]),
        (" 1 , +2/4 ,0", [1, Fraction(1, 2)]),
    ],
)
def test_parse_literal(text, expected):
    assert parse_poly_literal(text) == Polynomial(expected)


def test_parse_literal_evaluates():
    assert parse_poly_literal("0,0,1")(5) == 25


@pytest.mark.parametrize("text", ["1,,2", "1,2,", "1/0", "a", "1.5", "1/-2", "--1", ","])
def test_parse_literal_errors(text):
    with pytest.raises(LiteralError):
        parse_poly_literal(text)


@given(polynomials())
def test_literal_round_trip(p):
    assert parse_poly_literal(p.to_literal()) == p


def test_str_rendering():
    assert str(Polynomial([1, Fraction(-3, 2)])) == "-3/2*x + 1"
    assert str(Polynomial([0, 0, 1], "y")) == "y^2"
    assert str(Polynomial()) == "0"


class TestBivariate:
    def test_compose_sum_matches_pointwise(self):
        for n in range(7):
            G = BivariatePolynomial.compose_sum(binomial_poly(n))
            for x in range(-4, 5):
                for y in (-3, Fraction(1, 2), 5):
                    assert G.evaluate(x, y) == falling_binomial(x + Fraction(y), n)

    def test_degree_and_normalization(self):
        assert BivariatePolynomial([Polynomial([], "y")]).is_zero()
        assert BivariatePolynomial([1, Y, 0]).degree_x == 1
        with pytest.raises(VariableMismatchError):
            BivariatePolynomial([X])

    @settings(max_examples=50)
    @given(polynomials(4), polynomials(4, "y"), polynomials(4), polynomials(4, "y"), rationals, rationals)
    def test_product_is_pointwise(self, p1, q1, p2, q2, a, b):
        F = BivariatePolynomial.from_x(p1) * q1
        G = BivariatePolynomial.from_x(p2) + q2
        assert (F * G).evaluate(a, b) == F.evaluate(a, b) * G.evaluate(a, b)
        assert (F - G).evaluate(a, b) == F.evaluate(a, b) - G.evaluate(a, b)

    def test_substitute_x(self):
        F = BivariatePolynomial.compose_sum(binomial_poly(3))
        root = 1 - Y  # x := i - y - 1 with i = 2
        assert F.substitute_x(root).is_zero()
        with pytest.raises(ValueError):
            F.substitute_x(Y**2)
        assert F.at_x(0) == binomial_poly(3, "y")
