from fractions import Fraction

import pytest

from nijenhuis2d.discriminant import (
    AdmissibilityStatus,
    DetIndependentOfY,
    DiscIndependentOfY,
    admissible_check,
    match_degenerate_pattern,
    reconstruct_from_det,
    reconstruct_from_disc,
    theorem2_ode_residual,
    theorem2_operators,
)
from nijenhuis2d.exact_poly import (
    BivariatePolynomial,
    NotUnivariate,
    RationalFunction2,
    X,
    shear_substitute,
)
from nijenhuis2d.operator2 import characteristic_data, is_nijenhuis
from nijenhuis2d.parser import parse_operator, parse_poly
from tests.conftest import random_polynomial

QUARTER_X2 = parse_poly("x^2/4")


class TestReconstructFromDet:
    def test_linear(self):
        assert reconstruct_from_det(parse_poly("y")) == parse_operator(["x", "-1", "y", "0"])

    def test_morse_determinant(self):
        L = reconstruct_from_det(parse_poly("-y^2"))
        assert L == parse_operator(["x", "2*y", "y/2", "0"])

    def test_non_polynomial_corner(self):
        L = reconstruct_from_det(parse_poly("x*y"))
        assert not L.c.is_polynomial()

    def test_determinant_reproduced(self, rng):
        for _ in range(10):
            f = random_polynomial(rng, max_terms=4, max_exp=3, max_coeff=3)
            if f.partial_y().is_zero():
                continue
            L = reconstruct_from_det(f)
            cd = characteristic_data(L)
            assert cd.trace == RationalFunction2(X)
            assert cd.det == RationalFunction2(f)
            assert is_nijenhuis(L)

    def test_degenerate_error(self):
        with pytest.raises(DetIndependentOfY):
            reconstruct_from_det(parse_poly("x^2"))


class TestReconstructFromDisc:
    def test_cubic(self):
        assert reconstruct_from_disc(parse_poly("y^3 + x^2/4")) == parse_operator(
            ["x", "3*y^2", "y/3", "0"]
        )

    def test_negative_square(self):
        # Eq-form reconstruction of -y^2; the (2,1) entry comes out +y/2,
        # matching the stated normal-form matrix for the minus sign.
        L = reconstruct_from_disc(parse_poly("-y^2"))
        assert L == parse_operator(["x/2", "-2*y", "y/2", "x/2"])

    def test_non_divisible_corner(self):
        L = reconstruct_from_disc(parse_poly("y^2 + 2*x*y"))
        assert not L.c.is_polynomial()

    def test_degenerate_error(self):
        with pytest.raises(DiscIndependentOfY):
            reconstruct_from_disc(QUARTER_X2)

    def test_torsion_vanishes_for_any_g(self, rng):
        # the reconstruction formula is Nijenhuis for arbitrary smooth g
        for _ in range(10):
            g = random_polynomial(rng, max_terms=4, max_exp=3, max_coeff=3)
            if g.partial_y().is_zero():
                continue
            assert is_nijenhuis(reconstruct_from_disc(g))

    def test_consistency_with_det_form(self, rng):
        for _ in range(10):
            f = random_polynomial(rng, max_terms=4, max_exp=3, max_coeff=3)
            if f.partial_y().is_zero():
                continue
            Lf = reconstruct_from_det(f)
            Lg = reconstruct_from_disc(QUARTER_X2 - f)
            assert Lf.trace() == Lg.trace()
            assert Lf.det() == Lg.det()


class TestAdmissibleCheck:
    def test_degenerate_alpha_zero(self):
        v = admissible_check(QUARTER_X2)
        assert v.status is AdmissibilityStatus.ADMISSIBLE_DEGENERATE_FAMILY
        assert v.alpha == 0

    def test_degenerate_alpha(self):
        v = admissible_check(parse_poly("(x/2 - 3)^2"))
        assert v.alpha == 3

    def test_zero_family(self):
        v = admissible_check(BivariatePolynomial.zero())
        assert v.status is AdmissibilityStatus.ADMISSIBLE_DEGENERATE_FAMILY
        assert v.zero_family

    def test_degenerate_reject(self):
        v = admissible_check(parse_poly("3*x - 9"))
        assert v.status is AdmissibilityStatus.NOT_ADMISSIBLE
        assert v.remainder_witness is not None and not v.remainder_witness.is_zero()

    def test_exact(self):
        v = admissible_check(parse_poly("y^3"))
        assert v.status is AdmissibilityStatus.ADMISSIBLE_EXACT
        assert v.quotient == parse_poly("-y/3")

    def test_reject_with_witness(self):
        v = admissible_check(parse_poly("y^2 + x^3"))
        assert v.status is AdmissibilityStatus.NOT_ADMISSIBLE
        assert v.remainder_witness == parse_poly("9*x^4 - x^3")

    def test_numeric_only(self):
        # denominator 3y^2 + 1 never vanishes: numeric-grade acceptance
        v = admissible_check(parse_poly("y^3 + y"))
        assert v.status is AdmissibilityStatus.NUMERIC_ONLY
        assert v.accepted

    def test_pole_on_box_rejects(self):
        v = admissible_check(parse_poly("y + x*y"))
        assert v.status is AdmissibilityStatus.NOT_ADMISSIBLE

    def test_smaller_box_changes_numeric_verdict(self):
        # same input, box short of x = -1: no pole detected
        v = admissible_check(parse_poly("y + x*y"), box=((-0.5, 0.5), (-0.5, 0.5)))
        assert v.status is AdmissibilityStatus.NUMERIC_ONLY

    def test_shear_invariance_of_exact(self, rng):
        for g_text in ("y^3", "y^3 + x^2/4", "y^4", "x^2*y^3"):
            g = parse_poly(g_text)
            for _ in range(4):
                a = Fraction(rng.randint(-2, 2))
                b = Fraction(rng.choice([1, -1, 2]), rng.randint(1, 2))
                sheared = shear_substitute(g, a, b)
                assert (
                    admissible_check(sheared).status
                    is AdmissibilityStatus.ADMISSIBLE_EXACT
                )


class TestTheorem2:
    def test_diagonalizable(self):
        L = theorem2_operators("diagonalizable", parse_poly("x + y"), 2)
        assert L == parse_operator(["x - 2", "0", "x + y", "2"])
        cd = characteristic_data(L)
        assert cd.det == RationalFunction2(parse_poly("2*x - 4"))
        assert cd.trace == RationalFunction2(X)

    def test_scalar_nilpotent(self):
        L = theorem2_operators("scalar_nilpotent", BivariatePolynomial.constant(1))
        assert L == parse_operator(["x/2", "0", "1", "x/2"])
        assert characteristic_data(L).det == RationalFunction2(QUARTER_X2)

    def test_trivial(self):
        L = theorem2_operators("diagonalizable", BivariatePolynomial.zero(), 0)
        assert L == parse_operator(["x", "0", "0", "0"])

    def test_nijenhuis_for_random_c(self, rng):
        for _ in range(8):
            c = random_polynomial(rng, max_terms=4, max_exp=3, max_coeff=3)
            alpha = Fraction(rng.randint(-3, 3))
            assert is_nijenhuis(theorem2_operators("diagonalizable", c, alpha))
            assert is_nijenhuis(theorem2_operators("scalar_nilpotent", c))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            theorem2_operators("other", BivariatePolynomial.zero())


class TestOdeResidual:
    def test_linear_family(self):
        assert theorem2_ode_residual(parse_poly("2*x - 4")).is_zero()

    def test_parabolic(self):
        assert theorem2_ode_residual(QUARTER_X2).is_zero()

    def test_cubic_rejected(self):
        assert theorem2_ode_residual(parse_poly("x^3")) == parse_poly("2*x^3 - 9*x^4")

    def test_square_rejected(self):
        assert theorem2_ode_residual(parse_poly("x^2")) == parse_poly("-3*x^2")

    def test_rejects_bivariate(self):
        with pytest.raises(NotUnivariate):
            theorem2_ode_residual(parse_poly("x + y"))


class TestDegeneratePattern:
    def test_cases(self):
        assert match_degenerate_pattern(BivariatePolynomial.zero()) == (True, None)
        assert match_degenerate_pattern(QUARTER_X2) == (True, 0)
        assert match_degenerate_pattern(parse_poly("(x/2 + 1/3)^2")) == (True, Fraction(-1, 3))
        assert match_degenerate_pattern(parse_poly("x^2"))[0] is False
        assert match_degenerate_pattern(parse_poly("x^3"))[0] is False


class TestRoundTrip:
    @pytest.mark.parametrize("g_text", [
        "y^2 + x^2/4", "-y^2 + x^2/4", "y^2", "-y^2",
        "y^3", "y^3 + x^2/4", "y^4", "x^2*y^3", "(x + 2*y)^3",
        "x^4 + x^2*y", "x^3*y",
    ])
    def test_disc_roundtrip(self, g_text):
        g = parse_poly(g_text)
        L = reconstruct_from_disc(g)
        cd = characteristic_data(L)
        assert cd.trace == RationalFunction2(X)
        assert cd.disc == RationalFunction2(g)
        assert is_nijenhuis(L)
