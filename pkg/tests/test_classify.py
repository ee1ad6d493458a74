from fractions import Fraction

import pytest

from nijenhuis2d.classify import (
    CUBIC,
    HOMOGENEOUS,
    LINEAR_IN_Y,
    MORSE,
    NONDEGENERATE,
    NOT_ADMISSIBLE,
    UNDECIDED,
    Y_INDEPENDENT,
    Y_ONLY,
    DegreeTwoExcluded,
    NotHomogeneous,
    OrderTooLow,
    OrderViolation,
    classify,
    cubic_path,
    morse_path,
    theorem5_check,
    theorem6_check,
    theorem7_classify,
)
from nijenhuis2d.discriminant import AdmissibilityStatus
from nijenhuis2d.exact_poly import BivariatePolynomial, RationalFunction2, X
from nijenhuis2d.operator2 import characteristic_data, is_nijenhuis
from nijenhuis2d.parser import parse_operator, parse_poly


def ode_system_residuals(tau, beta):
    """The two normal-form equations on explicit polynomial (tau, beta)."""
    tp = tau.partial_x()
    bp = beta.partial_x()
    eq1 = tp * bp * 3 - tau
    eq2 = -tau * tp * tp + bp * bp * 3 - beta * 3
    return eq1, eq2


class TestDispatch:
    def test_nondegenerate(self):
        r = classify(parse_poly("y"))
        assert r.branch == NONDEGENERATE and r.admissible
        assert r.operator == parse_operator(["x/2", "1", "y", "x/2"])

    def test_degenerate_family(self):
        r = classify(parse_poly("x^2/4"))
        assert r.branch == Y_INDEPENDENT and r.admissible
        assert r.params["alpha"] == "0"

    def test_degenerate_reject(self):
        r = classify(parse_poly("3*x - 9"))
        assert r.branch == NOT_ADMISSIBLE and r.admissible is False

    def test_morse_route(self):
        # routed through the Morse path (tau = -x^4/4 fails the criterion)
        r = classify(parse_poly("y^2 - x^2*y"))
        assert r.branch == NOT_ADMISSIBLE
        assert r.params["path"] == "morse"

    def test_cubic_route(self):
        assert classify(parse_poly("y^3 + x^2/4")).branch == CUBIC

    def test_y_only_route(self):
        assert classify(parse_poly("y^4")).branch == Y_ONLY

    def test_linear_route(self):
        assert classify(parse_poly("x^4 + x^2*y")).branch == LINEAR_IN_Y

    def test_homogeneous_route(self):
        assert classify(parse_poly("x^2*y^3")).branch == HOMOGENEOUS

    def test_degree_two_homogeneous_goes_morse(self):
        assert classify(parse_poly("y^2 - x^2")).branch == NOT_ADMISSIBLE
        assert classify(parse_poly("-y^2 + x*y")).branch == MORSE

    def test_undecided_high_y_order(self):
        r = classify(parse_poly("y^4 + x*y^5"))
        assert r.branch == UNDECIDED and r.admissible is None
        assert r.verdict is not None

    def test_undecided_nonzero_origin(self):
        r = classify(parse_poly("1 + y^2"))
        assert r.branch == UNDECIDED
        assert r.verdict.status is AdmissibilityStatus.NOT_ADMISSIBLE

    def test_jet_order_in_certificate(self):
        r = classify(parse_poly("y^2 + x*y^2"), jet_order=9)
        assert r.certificate == "jet-order-9"


class TestMorsePath:
    def test_with_parabolic(self):
        r = morse_path(parse_poly("y^2 + x^2/4"))
        assert r.admissible and r.params["with_x2_over_4"]
        assert r.operator == parse_operator(["x", "2*y", "y/2", "0"])
        assert r.params["family"] == "L1+"

    def test_reject(self):
        r = morse_path(parse_poly("y^2 + 2*x*y"))
        assert r.branch == NOT_ADMISSIBLE
        assert "5*x^2" in r.params["tau_residual"]

    def test_without_parabolic_negative(self):
        r = morse_path(parse_poly("-y^2"))
        assert r.admissible and not r.params["with_x2_over_4"]
        assert r.operator == parse_operator(["x/2", "-2*y", "y/2", "x/2"])
        assert r.params["family"] == "L2-"

    def test_normal_form_disc_matches_operator(self):
        for g_text in ("y^2 + x^2/4", "-y^2 + x^2/4", "y^2", "-y^2"):
            r = morse_path(parse_poly(g_text))
            disc = characteristic_data(r.operator).disc
            assert disc == RationalFunction2(parse_poly(r.normal_form))
            assert is_nijenhuis(r.operator)
            assert r.operator.trace() == RationalFunction2(X)


class TestCubicPath:
    def test_without_parabolic(self):
        r = cubic_path(parse_poly("y^3"))
        assert r.admissible and r.params["family"] == "L1"
        assert r.operator == parse_operator(["x/2", "3*y^2", "y/3", "x/2"])

    def test_with_parabolic(self):
        r = cubic_path(parse_poly("y^3 + x^2/4"))
        assert r.admissible and r.params["family"] == "L2"
        assert r.operator == parse_operator(["x", "3*y^2", "y/3", "0"])

    def test_reject(self):
        r = cubic_path(parse_poly("y^3 + x*y"))
        assert r.branch == NOT_ADMISSIBLE

    def test_normal_form_disc_matches_operator(self):
        for g_text in ("y^3", "y^3 + x^2/4"):
            r = cubic_path(parse_poly(g_text))
            disc = characteristic_data(r.operator).disc
            assert disc == RationalFunction2(parse_poly(r.normal_form))
            assert is_nijenhuis(r.operator)


class TestOdeSystem:
    def test_admissible_solutions(self):
        zero = BivariatePolynomial.zero()
        for beta in (parse_poly("x^2/4"), zero):
            eq1, eq2 = ode_system_residuals(zero, beta)
            assert eq1.is_zero() and eq2.is_zero()

    def test_eighth_fails_second_equation(self):
        eq1, eq2 = ode_system_residuals(BivariatePolynomial.zero(), parse_poly("x^2/8"))
        assert eq1.is_zero()
        assert not eq2.is_zero()


class TestTheorem5:
    def test_quartic(self):
        r = theorem5_check(parse_poly("y^4"))
        assert r.admissible and r.params["k"] == 4
        assert r.operator == parse_operator(["x/2", "4*y^3", "y/4", "x/2"])

    def test_unit_factor(self):
        r = theorem5_check(parse_poly("y^2 + y^3"))
        assert r.admissible
        corner = r.operator.c
        assert corner.num == parse_poly("y^2 + y") * Fraction(1, 1) or not corner.is_polynomial()
        assert corner == RationalFunction2(parse_poly("y^2 + y"), parse_poly("3*y + 2"))

    def test_order_too_low(self):
        with pytest.raises(OrderTooLow):
            theorem5_check(parse_poly("y"))

    def test_negative_sign(self):
        r = theorem5_check(parse_poly("-y^5"))
        assert r.params["sign"] == "-"
        assert r.normal_form == "-y^5"


class TestTheorem6:
    def test_accepts(self):
        r = theorem6_check(parse_poly("x^4"), parse_poly("x^2"))
        assert r.admissible and r.params["m"] == 4 and r.params["k"] == 2
        assert is_nijenhuis(r.operator)

    def test_zero_a(self):
        r = theorem6_check(BivariatePolynomial.zero(), parse_poly("x^3"))
        assert r.admissible and r.params["m"] == "inf"
        assert r.params["proof_fractions_polynomial"]

    def test_order_violation(self):
        with pytest.raises(OrderViolation):
            theorem6_check(parse_poly("x"), parse_poly("x^2"))
        with pytest.raises(OrderViolation):
            theorem6_check(parse_poly("x^3"), parse_poly("x"))

    def test_disc_reproduced(self):
        r = theorem6_check(parse_poly("x^3"), parse_poly("x^2"))
        g = parse_poly("x^3 + x^2*y")
        assert characteristic_data(r.operator).disc == RationalFunction2(g)


class TestTheorem7:
    def test_monomial(self):
        r = theorem7_classify(parse_poly("x^2*y^3"))
        assert r.admissible
        assert (r.params["m"], r.params["k"]) == (2, 3)
        assert (r.params["a"], r.params["b"], r.params["sign"]) == ("0", "1", "+")

    def test_m_one_rejected(self):
        r = theorem7_classify(parse_poly("x*y^3"))
        assert r.branch == NOT_ADMISSIBLE
        assert r.params["m"] == 1

    def test_linear_power(self):
        r = theorem7_classify(parse_poly("(x + 2*y)^3"))
        assert r.admissible and r.params["m"] == 0
        assert (r.params["a"], r.params["b"]) == ("1", "2")

    def test_irrational_root_still_admissible(self):
        r = theorem7_classify(parse_poly("2*(x + y)^3"))
        assert r.admissible
        assert "a" not in r.params
        assert any("withheld" in n for n in r.notes)

    def test_non_power_rejected(self):
        r = theorem7_classify(parse_poly("x^3 + y^3"))
        assert r.branch == NOT_ADMISSIBLE

    def test_degree_two_excluded(self):
        with pytest.raises(DegreeTwoExcluded):
            theorem7_classify(parse_poly("y^2 - x^2"))

    def test_not_homogeneous(self):
        with pytest.raises(NotHomogeneous):
            theorem7_classify(parse_poly("y^3 + x^2"))

    def test_operator_disc(self):
        # the emitted operator lives in (x, y~) coordinates: its disc is the
        # normal form +-x^m y^k
        for g_text, nf in (("x^2*y^3", "x^2*y^3"), ("(x + 2*y)^3", "y^3"),
                           ("-x^3*y^2", "-x^3*y^2")):
            r = theorem7_classify(parse_poly(g_text))
            assert is_nijenhuis(r.operator)
            assert characteristic_data(r.operator).disc == RationalFunction2(parse_poly(nf))

    def test_m01_linear_accepted(self):
        # degree-1 member (m, k) = (0, 1): exact division succeeds
        r = theorem7_classify(parse_poly("x + 2*y"))
        assert r.admissible
        assert r.verdict.status is AdmissibilityStatus.ADMISSIBLE_EXACT


class TestResultShape:
    def test_admissible_results_have_nijenhuis_operators(self):
        for g_text in ("y", "y^2 + x^2/4", "-y^2", "y^3 + x^2/4", "y^4",
                       "x^4 + x^2*y", "x^2*y^3", "x^2/4", "0"):
            r = classify(parse_poly(g_text))
            assert r.admissible
            assert r.operator is not None
            assert is_nijenhuis(r.operator)
            assert r.operator.trace() == RationalFunction2(X)

    def test_json_serialization(self):
        r = classify(parse_poly("y^2 + x^2/4"))
        data = r.to_json()
        assert data["branch"] == MORSE
        assert data["admissible"] is True
        assert data["operator"] == ["x", "2*y", "1/2*y", "0"]
        # operator entry strings re-parse to the same operator
        reparsed = parse_operator(data["operator"])
        assert reparsed == r.operator
