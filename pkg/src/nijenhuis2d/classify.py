"""Singularity classification of a candidate discriminant at the origin.

Dispatch order: the nondegenerate case first (g_y(0,0) != 0), then the
y-independent family, then the structural families (y-only; a(x) + b(x) y;
homogeneous of degree != 2), then the y-order of g(0, y) at the origin
(2: Morse normal form, 3: cubic normal form).  Shapes outside every
hypothesis return an undecided result carrying the raw admissibility
verdict.

The raw exact-division check is always computed and attached as a
cross-check.  Note that it is a *global polynomial* criterion while the
normal-form paths decide admissibility *near the origin*: inputs such as
y^2 + x*y^2 = (y*sqrt(1+x))^2 are locally reducible to +w^2 (admissible)
although (g_x^2 - g)/g_y is not a polynomial.  Both answers are reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import jets
from .discriminant import (
    AdmissibilityStatus,
    AdmissibilityVerdict,
    admissible_check,
    corner_entry,
    match_degenerate_pattern,
    reconstruct_from_disc,
    theorem2_operators,
)
from .exact_poly import (
    BivariatePolynomial,
    INFINITE_ORDER,
    RationalFunction2,
    X,
    Y,
    order_at_zero_x,
)
from .operator2 import OperatorField2

QQ = Fraction

DEFAULT_JET_ORDER = 12

X2_OVER_4 = X * X * QQ(1, 4)

# Branch tags.
NONDEGENERATE = "nondegenerate"
Y_INDEPENDENT = "y-independent"
MORSE = "morse"
CUBIC = "cubic"
Y_ONLY = "y-only"
LINEAR_IN_Y = "linear-in-y"
HOMOGENEOUS = "homogeneous"
NOT_ADMISSIBLE = "not-admissible"
UNDECIDED = "undecided"


class ClassifyError(Exception):
    pass


class OrderTooLow(ClassifyError):
    """y-only input with a zero of order below 2 at the origin."""


class OrderViolation(ClassifyError):
    """a(x) + b(x) y input failing ord(a) >= ord(b) >= 2."""


class DegreeTwoExcluded(ClassifyError):
    """Homogeneous degree-2 input; the Morse path applies instead."""


class NotHomogeneous(ClassifyError):
    pass


@dataclass(frozen=True)
class ClassificationResult:
    """Outcome of the classification with certificates.

    ``admissible`` is None when no structural result applies (undecided).
    ``operator`` is the canonical operator of the matched family, in the
    coordinates named by ``operator_coordinates`` (``y`` in its entries
    stands for the transformed coordinate when that label says so);
    ``operator_original`` is the direct reconstruction in the input
    coordinates when available.
    """

    branch: str
    admissible: bool | None
    certificate: str = ""  # "exact" | "jet-order-N" | ""
    params: dict = field(default_factory=dict)
    normal_form: str | None = None
    substitution: str | None = None
    substitution_exact: bool | None = None
    operator: OperatorField2 | None = None
    operator_coordinates: str = "(x, y)"
    operator_original: OperatorField2 | None = None
    verdict: AdmissibilityVerdict | None = None
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        out: dict[str, object] = {
            "branch": self.branch,
            "admissible": self.admissible,
        }
        if self.certificate:
            out["certificate"] = self.certificate
        if self.params:
            out["params"] = {k: str(v) for k, v in sorted(self.params.items())}
        if self.normal_form is not None:
            out["normal_form"] = self.normal_form
        if self.substitution is not None:
            out["substitution"] = self.substitution
            out["substitution_exact"] = self.substitution_exact
        if self.operator is not None:
            out["operator"] = self.operator.render_entries()
            out["operator_coordinates"] = self.operator_coordinates
        if self.operator_original is not None:
            out["operator_original"] = self.operator_original.render_entries()
        if self.verdict is not None:
            out["verdict"] = self.verdict.to_json()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _sig(value: Fraction) -> str:
    return "+" if value > 0 else "-"


def _undecided(reason: str, verdict: AdmissibilityVerdict, **kw) -> ClassificationResult:
    return ClassificationResult(
        branch=UNDECIDED,
        admissible=None,
        verdict=verdict,
        notes=(reason,),
        **kw,
    )


# ---------------------------------------------------------------------------
# Structural families.
# ---------------------------------------------------------------------------


def theorem5_check(g: BivariatePolynomial) -> ClassificationResult:
    """y-only discriminant G(y) with a zero of finite order k >= 2.

    Always admissible; the operator [[x/2, G_y], [G/G_y, x/2]] has exact
    rational entries and reproduces g without any coordinate change.
    """
    if g.depends_on_x():
        raise ClassifyError("theorem5_check requires g depending on y only")
    if g.is_zero():
        raise ClassifyError("zero input belongs to the y-independent family")
    slices = {j: c for (i, j), c in g.terms.items()}
    k = min(slices)
    if k < 2:
        raise OrderTooLow(f"zero of order {k} < 2 at the origin")
    lead = slices[k]
    sign = 1 if lead > 0 else -1
    operator = reconstruct_from_disc(g)
    verdict = admissible_check(g)
    is_monomial = len(slices) == 1
    sign_str = "" if sign > 0 else "-"
    normalized = OperatorField2(
        X * QQ(1, 2),
        BivariatePolynomial.monomial(0, k - 1, sign * k),
        Y * QQ(1, k),
        X * QQ(1, 2),
    )
    notes = []
    if not is_monomial:
        notes.append(
            "normalized operator refers to the reparametrized coordinate with g = "
            f"{sign_str}y^{k}"
        )
    return ClassificationResult(
        branch=Y_ONLY,
        admissible=True,
        certificate="exact",
        params={
            "k": k,
            "sign": _sig(QQ(sign)),
            "normalized_operator": str(normalized),
        },
        normal_form=f"{sign_str}y^{k}",
        substitution=None if is_monomial else "y-reparametrization (order-preserving)",
        substitution_exact=is_monomial,
        operator=operator,
        operator_coordinates="(x, y)",
        operator_original=operator,
        verdict=verdict,
        notes=tuple(notes),
    )


def theorem6_check(a: BivariatePolynomial, b: BivariatePolynomial) -> ClassificationResult:
    """g = a(x) + b(x) y with ord(a) >= ord(b) >= 2 (a == 0 allowed).

    Admissible; the canonical operator is the direct reconstruction from g,
    smooth at the origin because b divides every numerator coefficient up
    to a unit.  Raises OrderViolation when the order conditions fail.
    """
    if a.depends_on_y() or b.depends_on_y():
        raise ClassifyError("theorem6_check requires univariate a(x), b(x)")
    if b.is_zero():
        raise ClassifyError("b must be nonzero")
    k = order_at_zero_x(b)
    m = order_at_zero_x(a)  # INFINITE_ORDER when a == 0
    if k < 2 or m < k:
        raise OrderViolation(f"need ord(a) >= ord(b) >= 2, got m={m}, k={k}")
    g = a + b * Y
    operator = reconstruct_from_disc(g)
    verdict = admissible_check(g)

    # The proof decomposes (g_x^2 - g)/g_y into five fractions over b; all
    # are smooth at the origin (reduced denominator nonzero there), and we
    # record which are exactly polynomial.
    ap = a.partial_x()
    bp = b.partial_x()
    fractions = {
        "(b')^2/b": RationalFunction2(bp * bp, b),
        "a'b'/b": RationalFunction2(ap * bp, b),
        "b/b": RationalFunction2(b, b),
        "(a')^2/b": RationalFunction2(ap * ap, b),
        "a/b": RationalFunction2(a, b),
    }
    for label, frac in fractions.items():
        if frac.den.evaluate(0, 0) == 0:
            raise ClassifyError(f"fraction {label} unexpectedly singular at the origin")
    all_polynomial = all(f.is_polynomial() for f in fractions.values())

    c_sub = RationalFunction2(a, b)
    substitution = f"{c_sub.render()} + y" if not a.is_zero() else "y"
    return ClassificationResult(
        branch=LINEAR_IN_Y,
        admissible=True,
        certificate="exact",
        params={
            "m": "inf" if m == INFINITE_ORDER else m,
            "k": k,
            "a": a.render(),
            "b": b.render(),
            "proof_fractions_polynomial": all_polynomial,
        },
        normal_form=f"({a.render()}) + ({b.render()})*y",
        substitution=substitution,
        substitution_exact=c_sub.is_polynomial(),
        operator=operator,
        operator_coordinates="(x, y)",
        operator_original=operator,
        verdict=verdict,
        notes=() if all_polynomial else (
            "proof fractions are smooth at the origin but not all polynomial",
        ),
    )


def _linear_power_certificate(
    q: BivariatePolynomial, k: int
) -> tuple[Fraction, Fraction, int] | None:
    """Solve q = sign*(a x + b y)^k for rational (a, b > 0, sign); None when
    the k-th root of the top coefficient is irrational."""
    ck = q.coefficient(0, k)
    sign = 1 if ck > 0 else -1
    mag = abs(ck)

    def _iroot(n: int, r: int) -> int | None:
        if n == 0:
            return 0
        lo = round(n ** (1.0 / r))
        for cand in (lo - 1, lo, lo + 1):
            if cand >= 0 and cand**r == n:
                return cand
        return None

    bn = _iroot(mag.numerator, k)
    bd = _iroot(mag.denominator, k)
    if bn is None or bd is None:
        return None
    b = Fraction(bn, bd)
    if b == 0:
        return None
    a = q.coefficient(1, k - 1) / (sign * k * b ** (k - 1))
    candidate = (X * a + Y * b) ** k * sign
    if candidate == q:
        return a, b, sign
    return None


def theorem7_classify(g: BivariatePolynomial) -> ClassificationResult:
    """Homogeneous g of degree != 2 with g_y != 0.

    Admissible iff g = +-x^m (a x + b y)^k with b != 0, k >= 1, m != 1.
    The power-of-a-linear-form test is done rationally by the exact
    proportionality q_y^k * c^(k-1) == q^(k-1) * (k c)^k where c is the
    y^k-coefficient of the cofactor q = g / x^m; the (a, b) certificate is
    reported whenever the k-th root of c is rational.
    """
    if not g.is_homogeneous() or g.is_zero():
        raise NotHomogeneous("theorem7_classify requires a nonzero homogeneous g")
    n = int(g.degree())
    if n == 2:
        raise DegreeTwoExcluded("degree-2 homogeneous input belongs to the Morse path")
    if not g.depends_on_y():
        raise ClassifyError("g_y == 0 belongs to the y-independent family")

    verdict = admissible_check(g)
    m = min(i for i, _ in g.terms)
    q = BivariatePolynomial({(i - m, j): c for (i, j), c in g.terms.items()})
    k = n - m
    ck = q.coefficient(0, k)  # nonzero: q has an x-free monomial, which is y^k
    qy = q.partial_y()
    proportional = qy**k * ck ** (k - 1) == q ** (k - 1) * (k * ck) ** k

    if m == 1 or not proportional:
        reason = "x-multiplicity m = 1 is excluded" if m == 1 else (
            "cofactor is not a power of a linear form"
        )
        witness = verdict.remainder_witness
        notes = [reason]
        if verdict.status is not AdmissibilityStatus.NOT_ADMISSIBLE:
            notes.append(f"cross-check verdict unexpectedly {verdict.status.value}")
        return ClassificationResult(
            branch=NOT_ADMISSIBLE,
            admissible=False,
            params={"m": m, "k": k, "remainder_witness": witness.render() if witness else ""},
            verdict=verdict,
            notes=tuple(notes),
        )

    certificate = _linear_power_certificate(q, k)
    params: dict = {"m": m, "k": k}
    notes: list[str] = []
    substitution = None
    substitution_exact = None
    sign: int
    if certificate is not None:
        a, b, sign = certificate
        params["a"] = str(a)
        params["b"] = str(b)
        params["sign"] = _sig(QQ(sign))
        substitution = (X * a + Y * b).render()
        substitution_exact = True
    else:
        sign = 1 if ck > 0 else -1
        params["sign"] = _sig(QQ(sign))
        notes.append(
            "linear form certified by exact proportionality; rational (a, b) "
            "certificate withheld (irrational k-th root)"
        )

    half_x = X * QQ(1, 2)
    diag = BivariatePolynomial.monomial(m - 1, k, sign * m) if m >= 1 else BivariatePolynomial.zero()
    off = BivariatePolynomial.monomial(m, k - 1, sign * k)
    corner_sq = (
        BivariatePolynomial.monomial(m - 2, k + 1, sign * m * m) if m >= 2 else BivariatePolynomial.zero()
    )
    corner = (Y - corner_sq) * QQ(1, k)
    operator = OperatorField2(half_x + diag, off, corner, half_x - diag)
    operator_original = None
    if verdict.status is AdmissibilityStatus.ADMISSIBLE_EXACT:
        operator_original = reconstruct_from_disc(g)

    sign_str = "" if sign > 0 else "-"
    x_part = "" if m == 0 else ("x*" if m == 1 else f"x^{m}*")
    return ClassificationResult(
        branch=HOMOGENEOUS,
        admissible=True,
        certificate="exact",
        params=params,
        normal_form=f"{sign_str}{x_part}y^{k}",
        substitution=substitution,
        substitution_exact=substitution_exact,
        operator=operator,
        operator_coordinates="(x, y~)",
        operator_original=operator_original,
        verdict=verdict,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Jet normal-form paths.
# ---------------------------------------------------------------------------


def morse_path(g: BivariatePolynomial, jet_order: int = DEFAULT_JET_ORDER) -> ClassificationResult:
    """Morse-in-y input: g(0,0) = g_y(0,0) = 0, g_yy(0,0) != 0.

    Runs the y-normalization g = sign*scale*w^2 + tau(x) and decides
    admissibility by (tau')^2 - tau == 0 (through the jet order), which
    forces tau = x^2/4 or tau = 0.  The certificate is upgraded to exact
    when the polynomial identity verifies.
    """
    jet = jets.Jet2.from_polynomial(g, jet_order)
    norm = jets.morse_normalize_y(jet)  # raises NotMorseInY on bad input
    verdict = admissible_check(g)
    residual = jets.morse_tau_residual(norm)
    tau_poly = norm.tau.to_polynomial()

    if not residual.is_zero():
        return ClassificationResult(
            branch=NOT_ADMISSIBLE,
            admissible=False,
            certificate=f"jet-order-{jet_order}",
            params={
                "path": "morse",
                "tau": norm.tau.render(),
                "tau_residual": residual.render(),
                "sign": _sig(QQ(norm.sign)),
            },
            verdict=verdict,
            notes=("(tau')^2 - tau != 0: tau is not x^2/4 or 0",),
        )

    with_parabolic = tau_poly == X2_OVER_4
    exact = jets.morse_exact_identity(norm, g)
    certificate = "exact" if exact else f"jet-order-{jet_order}"
    sign_str = "" if norm.sign > 0 else "-"
    normal_form = f"{sign_str}y^2" + (" + 1/4*x^2" if with_parabolic else "")
    two_y = Y * QQ(2 * norm.sign)
    half_y = Y * QQ(1, 2)
    if with_parabolic:
        operator = OperatorField2(X, two_y, half_y, BivariatePolynomial.zero())
        family = "L1" + _sig(QQ(norm.sign))
    else:
        half_x = X * QQ(1, 2)
        operator = OperatorField2(half_x, two_y, half_y, half_x)
        family = "L2" + _sig(QQ(norm.sign))
    operator_original = None
    if verdict.status is AdmissibilityStatus.ADMISSIBLE_EXACT:
        operator_original = reconstruct_from_disc(g)
    params = {
        "sign": _sig(QQ(norm.sign)),
        "with_x2_over_4": with_parabolic,
        "tau": norm.tau.render(),
        "family": family,
    }
    notes = []
    if norm.scale != 1:
        params["scale"] = str(norm.scale)
        notes.append(
            "substitution is scale^(1/2) * w with the rational jet w reported; "
            "the scale has no rational square root"
        )
    return ClassificationResult(
        branch=MORSE,
        admissible=True,
        certificate=certificate,
        params=params,
        normal_form=normal_form,
        substitution=norm.sub.render(),
        substitution_exact=exact,
        operator=operator,
        operator_coordinates="(x, y~)",
        operator_original=operator_original,
        verdict=verdict,
        notes=tuple(notes),
    )


def cubic_path(g: BivariatePolynomial, jet_order: int = DEFAULT_JET_ORDER) -> ClassificationResult:
    """Cubic-in-y input: g, g_y, g_yy vanish at the origin, g_yyy(0,0) != 0.

    Runs the normalization g = scale*(w^3 + t*w) + beta and decides by the
    two normal-form equations; the only admissible outcomes are
    (tau == 0, beta == x^2/4) and (tau == 0, beta == 0).
    """
    jet = jets.Jet2.from_polynomial(g, jet_order)
    norm = jets.cubic_normalize_y(jet)  # raises NotCubicInY on bad input
    verdict = admissible_check(g)
    r1, r2 = jets.cubic_system_residuals(norm)
    beta_poly = norm.beta.to_polynomial()

    if not (r1.is_zero() and r2.is_zero()):
        return ClassificationResult(
            branch=NOT_ADMISSIBLE,
            admissible=False,
            certificate=f"jet-order-{jet_order}",
            params={
                "path": "cubic",
                "tau_scaled": norm.tau_scaled.render(),
                "beta": norm.beta.render(),
                "residual_1": r1.render(),
                "residual_2": r2.render(),
            },
            verdict=verdict,
            notes=("normal-form system 3 tau' beta' = tau, "
                   "tau (tau')^2 = 3 (beta')^2 - 3 beta fails",),
        )

    with_parabolic = beta_poly == X2_OVER_4
    exact = jets.cubic_exact_identity(norm, g)
    certificate = "exact" if exact else f"jet-order-{jet_order}"
    normal_form = "y^3" + (" + 1/4*x^2" if with_parabolic else "")
    three_y2 = BivariatePolynomial.monomial(0, 2, 3)
    third_y = Y * QQ(1, 3)
    half_x = X * QQ(1, 2)
    if with_parabolic:
        operator = OperatorField2(X, three_y2, third_y, BivariatePolynomial.zero())
        family = "L2"
    else:
        operator = OperatorField2(half_x, three_y2, third_y, half_x)
        family = "L1"
    operator_original = None
    if verdict.status is AdmissibilityStatus.ADMISSIBLE_EXACT:
        operator_original = reconstruct_from_disc(g)
    params = {
        "with_x2_over_4": with_parabolic,
        "tau": (norm.tau.render() if norm.tau is not None else None),
        "beta": norm.beta.render(),
        "family": family,
    }
    notes = []
    if norm.scale != 1:
        params["scale"] = str(norm.scale)
        params["tau_scaled"] = norm.tau_scaled.render()
        notes.append(
            "substitution is scale^(1/3) * w with the rational jet w reported; "
            "the scale has no rational cube root"
        )
    return ClassificationResult(
        branch=CUBIC,
        admissible=True,
        certificate=certificate,
        params=params,
        normal_form=normal_form,
        substitution=norm.sub.render(),
        substitution_exact=exact,
        operator=operator,
        operator_coordinates="(x, y~)",
        operator_original=operator_original,
        verdict=verdict,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Dispatch.
# ---------------------------------------------------------------------------


def classify(g: BivariatePolynomial, jet_order: int = DEFAULT_JET_ORDER) -> ClassificationResult:
    """Classify g per the dispatch order; see the module docstring."""
    gy = g.partial_y()

    if gy.is_zero():
        return _classify_y_independent(g)

    if gy.evaluate(0, 0) != 0:
        operator = reconstruct_from_disc(g)
        verdict = admissible_check(g)
        smooth_entry = corner_entry(g)
        return ClassificationResult(
            branch=NONDEGENERATE,
            admissible=True,
            certificate="exact",
            params={"corner_entry": smooth_entry.render()},
            normal_form=None,
            operator=operator,
            operator_coordinates="(x, y)",
            operator_original=operator,
            verdict=verdict,
            notes=(
                "differentially nondegenerate at the origin; the reconstruction "
                "is smooth near it",
            ),
        )

    raw = admissible_check(g)

    if g.evaluate(0, 0) != 0:
        return _undecided(
            "g(0,0) != 0 with g_y(0,0) = 0: no classification theorem applies", raw
        )

    if not g.depends_on_x():
        try:
            return theorem5_check(g)
        except OrderTooLow as exc:
            return _undecided(str(exc), raw)

    if g.degree_y() == 1:
        slices = g.y_slices()
        a = slices.get(0, BivariatePolynomial.zero())
        b = slices[1]
        try:
            return theorem6_check(a, b)
        except OrderViolation as exc:
            return _undecided(f"linear-in-y order violation: {exc}", raw)

    if g.is_homogeneous() and g.degree() != 2:
        return theorem7_classify(g)

    y_order = _y_order_at_origin(g)
    if y_order == 2:
        return morse_path(g, jet_order)
    if y_order == 3:
        return cubic_path(g, jet_order)

    return _undecided(
        f"y-order {y_order} at the origin: outside the classified families", raw
    )


def _y_order_at_origin(g: BivariatePolynomial) -> int | float:
    """Vanishing order of g(0, y) at y = 0; INFINITE_ORDER if g(0, y) == 0."""
    orders = [j for (i, j), _ in g.terms.items() if i == 0]
    return min(orders) if orders else INFINITE_ORDER


def _classify_y_independent(g: BivariatePolynomial) -> ClassificationResult:
    matched, alpha = match_degenerate_pattern(g)
    verdict = admissible_check(g)
    if not matched:
        return ClassificationResult(
            branch=NOT_ADMISSIBLE,
            admissible=False,
            params={
                "remainder_witness": verdict.remainder_witness.render()
                if verdict.remainder_witness
                else ""
            },
            verdict=verdict,
            notes=("y-independent g must be (x/2 - alpha)^2 or 0",),
        )
    one = BivariatePolynomial.constant(1)
    if alpha is None:
        operator = theorem2_operators("scalar_nilpotent", one)
        params: dict = {"family": "scalar-nilpotent", "det": "1/4*x^2"}
        normal_form = "0"
    else:
        operator = theorem2_operators("diagonalizable", one, alpha)
        det = (X * alpha - BivariatePolynomial.constant(alpha * alpha)).render()
        params = {"family": "diagonalizable", "alpha": str(alpha), "det": det}
        normal_form = ((X * QQ(1, 2) - BivariatePolynomial.constant(alpha)) ** 2).render()
    return ClassificationResult(
        branch=Y_INDEPENDENT,
        admissible=True,
        certificate="exact",
        params=params,
        normal_form=normal_form,
        substitution=None,
        operator=operator,
        operator_coordinates="(x, y~)",
        verdict=verdict,
        notes=(
            "representative with c(x,y) = 1; any smooth c gives a member of the family",
        ),
    )
