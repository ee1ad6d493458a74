"""Exact 2x2 Nijenhuis operator fields: torsion, admissible discriminants,
singularity classification, and eigenvalue level-line plots."""

__version__ = "0.1.0"

from .exact_poly import (
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
from .parser import parse_operator, parse_poly, parse_rational
from .jets import (
    Jet2,
    cubic_normalize_y,
    jet_reciprocal,
    morse_normalize_y,
    verify_lemma1,
)
from .operator2 import (
    AlgebraicType,
    OperatorField2,
    algebraic_type_at_point,
    characteristic_data,
    differential_degeneracy,
    is_nijenhuis,
    torsion_components,
)
from .discriminant import (
    AdmissibilityStatus,
    AdmissibilityVerdict,
    admissible_check,
    reconstruct_from_det,
    reconstruct_from_disc,
    theorem2_ode_residual,
    theorem2_operators,
)
from .classify import (
    ClassificationResult,
    classify,
    cubic_path,
    morse_path,
    theorem5_check,
    theorem6_check,
    theorem7_classify,
)

__all__ = [
    "AdmissibilityStatus",
    "AdmissibilityVerdict",
    "AlgebraicType",
    "BivariatePolynomial",
    "ClassificationResult",
    "DivisionByZeroPolynomial",
    "InvalidShear",
    "Jet2",
    "NotDivisible",
    "NotUnivariate",
    "OperatorField2",
    "RationalFunction2",
    "X",
    "Y",
    "admissible_check",
    "algebraic_type_at_point",
    "characteristic_data",
    "classify",
    "cubic_normalize_y",
    "cubic_path",
    "differential_degeneracy",
    "exact_div",
    "gcd_bivariate",
    "is_nijenhuis",
    "jet_reciprocal",
    "morse_normalize_y",
    "morse_path",
    "order_at_zero_x",
    "parse_operator",
    "parse_poly",
    "parse_rational",
    "reconstruct_from_det",
    "reconstruct_from_disc",
    "shear_substitute",
    "theorem2_ode_residual",
    "theorem2_operators",
    "theorem5_check",
    "theorem6_check",
    "theorem7_classify",
    "torsion_components",
    "verify_lemma1",
]
