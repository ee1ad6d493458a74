import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nijenhuis2d.exact_poly import (
    NEG_INFINITY,
    INFINITE_ORDER,
    BivariatePolynomial,
    DivisionByZeroPolynomial,
    InvalidShear,
    NotDivisible,
    NotUnivariate,
    RationalFunction2,
    X,
    Y,
    exact_div,
    gcd_bivariate,
    order_at_zero_x,
    shear_substitute,
)
from nijenhuis2d.parser import parse_poly


coeffs = st.fractions(
    min_value=-9, max_value=9, max_denominator=4
).filter(lambda f: f != 0)
exponents = st.tuples(st.integers(0, 5), st.integers(0, 5))
polys = st.dictionaries(exponents, coeffs, max_size=6).map(BivariatePolynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


class TestArithmetic:
    def test_difference_of_squares(self):
        assert (X + Y) * (X - Y) == parse_poly("x^2 - y^2")

    def test_additive_identity(self):
        p = parse_poly("3*x^2*y - 1/2")
        assert p + BivariatePolynomial.zero() == p

    def test_cube(self):
        assert Y**3 == parse_poly("y^3")

    def test_pow_zero_is_one(self):
        assert parse_poly("x + y") ** 0 == BivariatePolynomial.constant(1)

    def test_scalar_coercion(self):
        assert X + 1 == parse_poly("x + 1")
        assert 2 * Y == parse_poly("2*y")
        assert X - Fraction(1, 2) == parse_poly("x - 1/2")

    @given(polys, polys, polys)
    @settings(max_examples=60, deadline=None)
    def test_ring_laws(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) * r == p * r + q * r

    def test_degree_sentinel(self):
        assert BivariatePolynomial.zero().degree() == NEG_INFINITY
        assert BivariatePolynomial.zero().degree() < 0
        assert parse_poly("x*y^2").degree() == 3


class TestPartials:
    def test_partial_y(self):
        assert parse_poly("y^2 + x^2/4").partial_y() == parse_poly("2*y")

    def test_partial_x(self):
        assert parse_poly("y^3 + x^2/4").partial_x() == parse_poly("x/2")

    def test_partial_of_constant(self):
        assert BivariatePolynomial.constant(7).partial_y().is_zero()

    @given(polys)
    @settings(max_examples=60, deadline=None)
    def test_mixed_partials_commute(self, p):
        assert p.partial_x().partial_y() == p.partial_y().partial_x()


class TestExactDiv:
    def test_monomial_quotient(self):
        assert exact_div(parse_poly("-y^3"), parse_poly("3*y^2")) == parse_poly("-y/3")

    def test_remainder_witness(self):
        # long division of 3y^2 - 2xy by 2y + 2x leaves a remainder
        # proportional to 5x^2; the witness is normalized primitive.
        with pytest.raises(NotDivisible) as err:
            exact_div(parse_poly("3*y^2 - 2*x*y"), parse_poly("2*y + 2*x"))
        assert err.value.remainder == parse_poly("x^2")

    def test_divide_by_one(self):
        p = parse_poly("x^3*y - 7/3*y^2")
        assert exact_div(p, BivariatePolynomial.constant(1)) == p

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroPolynomial):
            exact_div(X, BivariatePolynomial.zero())

    def test_x_only_divisor(self):
        assert exact_div(parse_poly("x^2*y + x^3"), parse_poly("x^2")) == parse_poly("y + x")
        with pytest.raises(NotDivisible):
            exact_div(parse_poly("x^2*y + x"), parse_poly("x^2"))

    def test_content_failure_branch(self):
        # y-remainder vanishes but the quotient coefficient 1/(1+x) is not
        # polynomial: divisibility must still be refused.
        with pytest.raises(NotDivisible):
            exact_div(parse_poly("y^4 - y^2 - x*y^2"), parse_poly("2*y + 2*x*y"))

    @given(polys, nonzero_polys)
    @settings(max_examples=60, deadline=None)
    def test_product_division_roundtrip(self, p, q):
        assert exact_div(p * q, q) == p


class TestGcd:
    def test_monomials(self):
        assert gcd_bivariate(parse_poly("x^2*y^3"), parse_poly("3*x^2*y^2")) == parse_poly("x^2*y^2")

    def test_gcd_with_zero(self):
        assert gcd_bivariate(parse_poly("2*x + 2"), BivariatePolynomial.zero()) == parse_poly("x + 1")

    def test_common_linear_factor(self):
        assert gcd_bivariate(parse_poly("x^2 - y^2"), parse_poly("x - y")) == parse_poly("x - y")

    def test_coprime(self):
        assert gcd_bivariate(X, Y) == BivariatePolynomial.constant(1)

    @given(nonzero_polys, nonzero_polys)
    @settings(max_examples=40, deadline=None)
    def test_gcd_divides_both(self, p, q):
        g = gcd_bivariate(p, q)
        exact_div(p, g)
        exact_div(q, g)

    @given(nonzero_polys, nonzero_polys, nonzero_polys)
    @settings(max_examples=25, deadline=None)
    def test_gcd_detects_common_factor(self, p, q, f):
        g = gcd_bivariate(p * f, q * f)
        exact_div(g, gcd_bivariate(f, f))  # f (normalized) divides g


class TestShear:
    def test_square(self):
        assert shear_substitute(parse_poly("y^2"), 1, 1) == parse_poly("(x + y)^2")

    def test_identity_shear(self):
        p = parse_poly("x^2*y - y^3")
        assert shear_substitute(p, 0, 1) == p

    def test_xy(self):
        assert shear_substitute(parse_poly("x*y"), -1, 1) == parse_poly("x*y - x^2")

    def test_invalid(self):
        with pytest.raises(InvalidShear):
            shear_substitute(X, 1, 0)

    @given(polys, st.fractions(min_value=-3, max_value=3, max_denominator=3),
           st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(lambda b: b != 0))
    @settings(max_examples=40, deadline=None)
    def test_shear_inverse(self, p, a, b):
        sheared = shear_substitute(p, a, b)
        assert shear_substitute(sheared, -a / b, 1 / b) == p


class TestOrderAtZero:
    def test_examples(self):
        assert order_at_zero_x(parse_poly("x^2/8")) == 2
        assert order_at_zero_x(BivariatePolynomial.zero()) == INFINITE_ORDER
        assert order_at_zero_x(parse_poly("3 + x")) == 0

    def test_rejects_y(self):
        with pytest.raises(NotUnivariate):
            order_at_zero_x(parse_poly("x + y"))


class TestRationalFunction:
    def test_reduction(self):
        r = RationalFunction2(parse_poly("x^2 - y^2"), parse_poly("x - y"))
        assert r.is_polynomial()
        assert r.as_polynomial() == parse_poly("x + y")

    def test_denominator_normalization(self):
        # den is primitive with positive leading coefficient; constants fold away
        r = RationalFunction2(parse_poly("-y^3"), parse_poly("3*y^2"))
        assert r.num == parse_poly("-y/3")
        assert r.den == BivariatePolynomial.constant(1)

    def test_negative_leading_denominator(self):
        r = RationalFunction2(Y, -X)
        assert r.den == X
        assert r.num == -Y

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZeroPolynomial):
            RationalFunction2(X, BivariatePolynomial.zero())

    @given(polys, nonzero_polys)
    @settings(max_examples=40, deadline=None)
    def test_reduction_idempotent(self, num, den):
        r = RationalFunction2(num, den)
        again = RationalFunction2(r.num, r.den)
        assert again.num == r.num and again.den == r.den

    @given(polys, nonzero_polys, nonzero_polys)
    @settings(max_examples=40, deadline=None)
    def test_common_factor_cancels(self, num, den, f):
        assert RationalFunction2(num * f, den * f) == RationalFunction2(num, den)

    def test_arithmetic(self):
        half = RationalFunction2(1, parse_poly("2"))
        r = RationalFunction2(1, Y)
        assert (r + r) == RationalFunction2(2, Y)
        assert (r * Y) == RationalFunction2(1)
        assert (r - r).is_zero()
        assert (half * 2) == RationalFunction2(1)

    def test_partials_quotient_rule(self):
        r = RationalFunction2(X, Y)
        assert r.partial_y() == RationalFunction2(-X, Y * Y)
        assert r.partial_x() == RationalFunction2(1, Y)

    def test_evaluate(self):
        r = RationalFunction2(X + Y, X - Y)
        assert r.evaluate(3, 1) == 2
        with pytest.raises(DivisionByZeroPolynomial):
            r.evaluate(1, 1)
