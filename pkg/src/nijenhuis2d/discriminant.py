"""Operator reconstruction from invariants and the admissibility decision.

A function g(x, y) is an admissible discriminant when some Nijenhuis
operator L has tr L = x and (tr L / 2)^2 - det L = g.  For trace x the
general reconstruction from the discriminant is

    L = [[x/2 + g_x, g_y], [-(g_x^2 - g)/g_y, x/2 - g_x]]

whose torsion vanishes identically for every g; admissibility is exactly
smoothness of the (2,1) entry.  For polynomial g this module decides that
primarily by exact divisibility of g_x^2 - g by g_y.  When division fails,
the reduced fraction may still be bounded away from poles on a test box
around the origin; that is reported as a numeric-grade verdict, not a
symbolic proof.

The degenerate family g_y == 0 is handled separately: the determinant
f = x^2/4 - g then solves (x - f')f' = f, which forces f = alpha*x - alpha^2
(equivalently g = (x/2 - alpha)^2) or f = x^2/4 (g == 0).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_poly import (
    BivariatePolynomial,
    NotDivisible,
    NotUnivariate,
    RationalFunction2,
    Scalar,
    X,
    exact_div,
    _as_fraction,
    _coerce,
)
from .operator2 import OperatorField2

QQ = Fraction

#: Default test box [x0, x1] x [y0, y1] and per-axis sample count for the
#: numeric fallback.  The box deliberately reaches |x| = |y| = 1 so that
#: denominators vanishing on the unit box (for example 1 + x) are caught.
DEFAULT_BOX = ((-1.0, 1.0), (-1.0, 1.0))
DEFAULT_BOX_SAMPLES = 41


class ReconstructionError(Exception):
    pass


class DetIndependentOfY(ReconstructionError):
    """det has no y-dependence; the degenerate family applies instead."""


class DiscIndependentOfY(ReconstructionError):
    """The discriminant has no y-dependence; the degenerate family applies."""


class AdmissibilityStatus(enum.Enum):
    ADMISSIBLE_EXACT = "AdmissibleExact"
    ADMISSIBLE_DEGENERATE_FAMILY = "AdmissibleDegenerateFamily"
    NOT_ADMISSIBLE = "NotAdmissible"
    NUMERIC_ONLY = "NumericOnly"


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Outcome of the admissibility decision with its certificate data.

    * ADMISSIBLE_EXACT: ``quotient`` satisfies g_x^2 - g = quotient * g_y.
    * ADMISSIBLE_DEGENERATE_FAMILY: g_y == 0 and either g == 0
      (``zero_family``) or g = (x/2 - alpha)^2 (``alpha``).
    * NOT_ADMISSIBLE: ``remainder_witness`` is a nonzero polynomial.
    * NUMERIC_ONLY: division failed but ``reduced`` has no detected pole on
      the test box; smoothness holds numerically on the box only.
    """

    status: AdmissibilityStatus
    quotient: BivariatePolynomial | None = None
    alpha: Fraction | None = None
    zero_family: bool = False
    remainder_witness: BivariatePolynomial | None = None
    reduced: RationalFunction2 | None = None
    box: tuple[tuple[float, float], tuple[float, float]] | None = None
    note: str = ""

    @property
    def accepted(self) -> bool:
        return self.status is not AdmissibilityStatus.NOT_ADMISSIBLE

    def to_json(self) -> dict:
        out: dict[str, object] = {"status": self.status.value}
        if self.quotient is not None:
            out["quotient"] = self.quotient.render()
        if self.alpha is not None:
            out["alpha"] = str(self.alpha)
        if self.zero_family:
            out["zero_family"] = True
        if self.remainder_witness is not None:
            out["remainder_witness"] = self.remainder_witness.render()
        if self.reduced is not None:
            out["reduced_fraction"] = self.reduced.render()
        if self.box is not None:
            out["box"] = [list(self.box[0]), list(self.box[1])]
        if self.note:
            out["note"] = self.note
        return out


def reconstruct_from_det(f: BivariatePolynomial) -> OperatorField2:
    """Operator with tr = x and det = f, from the determinant formula

    L = [[x - f_x, -f_y], [(f_x (x - f_x) - f)/(-f_y), f_x]].

    Raises DetIndependentOfY when f_y == 0 (degenerate family instead).
    """
    f = _ensure_poly(f)
    fy = f.partial_y()
    if fy.is_zero():
        raise DetIndependentOfY("f has no y-dependence; use the degenerate family")
    fx = f.partial_x()
    a = X - fx
    corner = RationalFunction2(fx * (X - fx) - f, -fy)
    return OperatorField2(a, RationalFunction2(-fy), corner, RationalFunction2(fx))


def reconstruct_from_disc(g: BivariatePolynomial) -> OperatorField2:
    """Operator with tr = x and tr^2/4 - det = g, from the discriminant form

    L = [[x/2 + g_x, g_y], [-(g_x^2 - g)/g_y, x/2 - g_x]].

    Raises DiscIndependentOfY when g_y == 0.
    """
    g = _ensure_poly(g)
    gy = g.partial_y()
    if gy.is_zero():
        raise DiscIndependentOfY("g has no y-dependence; use the degenerate family")
    gx = g.partial_x()
    half_x = X * QQ(1, 2)
    corner = RationalFunction2(-(gx * gx - g), gy)
    return OperatorField2(half_x + gx, RationalFunction2(gy), corner, half_x - gx)


def corner_entry(g: BivariatePolynomial) -> RationalFunction2:
    """The reduced (2,1) entry -(g_x^2 - g)/g_y of the reconstruction."""
    g = _ensure_poly(g)
    gy = g.partial_y()
    gx = g.partial_x()
    return RationalFunction2(-(gx * gx - g), gy)


def theorem2_ode_residual(f: BivariatePolynomial) -> BivariatePolynomial:
    """(x - f')f' - f for univariate f(x); zero iff f = alpha x - alpha^2
    or f = x^2/4."""
    f = _ensure_poly(f)
    if f.depends_on_y():
        raise NotUnivariate("f must depend on x only")
    fp = f.partial_x()
    return (X - fp) * fp - f


def match_degenerate_pattern(g: BivariatePolynomial) -> tuple[bool, Fraction | None]:
    """For g with g_y == 0: (True, None) if g == 0; (True, alpha) if
    g = (x/2 - alpha)^2; (False, None) otherwise."""
    g = _ensure_poly(g)
    if g.is_zero():
        return True, None
    if g.depends_on_y():
        return False, None
    alpha = -g.coefficient(1, 0)  # (x/2 - a)^2 = x^2/4 - a x + a^2
    candidate = (X * QQ(1, 2) - BivariatePolynomial.constant(alpha)) ** 2
    if g == candidate:
        return True, alpha
    return False, None


def theorem2_operators(
    kind: str, c: BivariatePolynomial, alpha: Scalar = 0
) -> OperatorField2:
    """The two y-independent-determinant families.

    kind = "diagonalizable":  [[x - alpha, 0], [c, alpha]]  (det = alpha x - alpha^2)
    kind = "scalar_nilpotent": [[x/2, 0], [c, x/2]]          (det = x^2/4)

    Every member is a Nijenhuis operator for arbitrary polynomial c.
    """
    c = _ensure_poly(c)
    if kind == "diagonalizable":
        alpha = _as_fraction(alpha)
        return OperatorField2(
            X - BivariatePolynomial.constant(alpha),
            RationalFunction2(0),
            RationalFunction2(c),
            RationalFunction2(BivariatePolynomial.constant(alpha)),
        )
    if kind == "scalar_nilpotent":
        half_x = X * QQ(1, 2)
        return OperatorField2(half_x, RationalFunction2(0), RationalFunction2(c), half_x)
    raise ValueError(f"unknown family kind {kind!r}")


def _box_has_pole(
    den: BivariatePolynomial,
    box: tuple[tuple[float, float], tuple[float, float]],
    samples: int,
) -> bool:
    """Grid scan for zeros of den on the box: near-zero values or sign
    changes between neighbouring nodes count as vanishing."""
    (x0, x1), (y0, y1) = box
    xs = [x0 + (x1 - x0) * i / (samples - 1) for i in range(samples)]
    ys = [y0 + (y1 - y0) * j / (samples - 1) for j in range(samples)]
    values = [[den.evaluate_float(px, py) for px in xs] for py in ys]
    scale = max(max(abs(v) for v in row) for row in values)
    scale = max(scale, 1.0)
    tol = 1.0e-9 * scale
    for row in values:
        for v in row:
            if abs(v) <= tol:
                return True
    for j in range(samples):
        for i in range(samples):
            if i + 1 < samples and values[j][i] * values[j][i + 1] < 0:
                return True
            if j + 1 < samples and values[j][i] * values[j + 1][i] < 0:
                return True
    return False


def admissible_check(
    g: BivariatePolynomial,
    box: tuple[tuple[float, float], tuple[float, float]] = DEFAULT_BOX,
    samples: int = DEFAULT_BOX_SAMPLES,
) -> AdmissibilityVerdict:
    """Decide admissibility of polynomial g.

    g_y == 0 branch: admissible iff g == 0 or g = (x/2 - alpha)^2; the
    witness otherwise is the nonzero residual (x - f')f' - f of the
    determinant f = x^2/4 - g.

    g_y != 0 branch: admissible-exact iff g_y divides g_x^2 - g; otherwise
    the reduced fraction is scanned for poles on the box.
    """
    g = _ensure_poly(g)
    gy = g.partial_y()
    if gy.is_zero():
        matched, alpha = match_degenerate_pattern(g)
        if matched:
            return AdmissibilityVerdict(
                AdmissibilityStatus.ADMISSIBLE_DEGENERATE_FAMILY,
                alpha=alpha,
                zero_family=alpha is None,
            )
        residual = theorem2_ode_residual(X * X * QQ(1, 4) - g)
        return AdmissibilityVerdict(
            AdmissibilityStatus.NOT_ADMISSIBLE,
            remainder_witness=residual.primitive_positive(),
            note="g has no y-dependence and is not (x/2 - alpha)^2 or 0",
        )
    gx = g.partial_x()
    numerator = gx * gx - g
    try:
        quotient = exact_div(numerator, gy)
        return AdmissibilityVerdict(AdmissibilityStatus.ADMISSIBLE_EXACT, quotient=quotient)
    except NotDivisible as failure:
        reduced = RationalFunction2(numerator, gy)
        if _box_has_pole(reduced.den, box, samples):
            return AdmissibilityVerdict(
                AdmissibilityStatus.NOT_ADMISSIBLE,
                remainder_witness=failure.remainder,
                reduced=reduced,
                box=box,
                note="reduced denominator vanishes on the test box",
            )
        return AdmissibilityVerdict(
            AdmissibilityStatus.NUMERIC_ONLY,
            reduced=reduced,
            box=box,
            note="no pole detected on the test box; smoothness is numeric-grade only",
        )


def _ensure_poly(p) -> BivariatePolynomial:
    q = _coerce(p)
    if q is NotImplemented:
        raise TypeError(f"expected a polynomial, got {type(p).__name__}")
    return q
