"""Truncated power-series arithmetic at the origin and y-normal forms.

A jet is a bivariate series truncated at a fixed total order N, with exact
rational coefficients.  Jets carry the two coordinate normalizations used by
the classification:

* Morse in y:  g  ->  sign * scale * w(x,y)^2 + tau(x)
* cubic in y:  g  ->  scale * w(x,y)^3 + t(x) * w(x,y) + beta(x)

where w is a jet with w(0,0) = 0 and unit y-derivative at the origin.  Both
are computed degree-by-degree in x, each x-slice solved exactly in closed
form.  The scale factor is the leading coefficient g_yy/2 (resp. g_yyy/6);
when its square (resp. cube) root is rational it is folded into w so the
normal form matches the classical one on the nose, otherwise it is reported
separately -- exact rational arithmetic cannot absorb an irrational root.
The decision data tau (and t, beta) is rational either way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact_poly import BivariatePolynomial, Scalar, _as_fraction

QQ = Fraction


class JetError(Exception):
    pass


class OrderMismatch(JetError):
    """Binary jet arithmetic requires equal truncation orders."""


class NonUnitConstantTerm(JetError):
    """Jet reciprocal (or unit root) requires a nonzero constant term."""


class NotMorseInY(JetError):
    """g(0,0), g_y(0,0) must vanish and g_yy(0,0) must not."""


class NotCubicInY(JetError):
    """g, g_y, g_yy must vanish at the origin and g_yyy(0,0) must not."""


class Jet2:
    """Bivariate series truncated at total order N, rational coefficients."""

    __slots__ = ("order", "_coeffs")

    def __init__(self, coeffs=None, order: int = 12):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        self.order = order
        clean: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                if i + j > order:
                    continue
                c = _as_fraction(c)
                if c:
                    clean[(i, j)] = c
        self._coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Jet2":
        return cls({}, order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "Jet2":
        return cls({(0, 0): _as_fraction(value)}, order)

    @classmethod
    def variable_y(cls, order: int) -> "Jet2":
        return cls({(0, 1): QQ(1)}, order)

    @classmethod
    def variable_x(cls, order: int) -> "Jet2":
        return cls({(1, 0): QQ(1)}, order)

    @classmethod
    def from_polynomial(cls, p: BivariatePolynomial, order: int) -> "Jet2":
        return cls(p.terms, order)

    def to_polynomial(self) -> BivariatePolynomial:
        return BivariatePolynomial(self._coeffs)

    # -- queries -------------------------------------------------------------

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._coeffs.get((i, j), QQ(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    @property
    def coeffs(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._coeffs)

    def depends_on_y(self) -> bool:
        return any(j > 0 for _, j in self._coeffs)

    def truncated(self, order: int) -> "Jet2":
        return Jet2(self._coeffs, order)

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "Jet2") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} != {other.order}")

    def __add__(self, other: "Jet2 | Scalar") -> "Jet2":
        other = self._coerce(other)
        self._check(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, QQ(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Jet2(out, self.order)

    __radd__ = __add__

    def __neg__(self) -> "Jet2":
        return Jet2({e: -c for e, c in self._coeffs.items()}, self.order)

    def __sub__(self, other: "Jet2 | Scalar") -> "Jet2":
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Jet2":
        return (-self) + other

    def __mul__(self, other: "Jet2 | Scalar") -> "Jet2":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Jet2({e: v * c for e, v in self._coeffs.items()}, self.order)
        self._check(other)
        order = self.order
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i + j > order:
                    continue
                e = (i, j)
                s = out.get(e, QQ(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Jet2(out, order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Jet2":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("jet power requires a nonnegative integer")
        result = Jet2.constant(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Jet2):
            return self.order == other.order and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Jet2.constant(other, self.order)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self._coeffs.items())))

    def _coerce(self, other: "Jet2 | Scalar") -> "Jet2":
        if isinstance(other, Jet2):
            return other
        return Jet2.constant(other, self.order)

    # -- calculus ---------------------------------------------------------------

    def derivative(self, axis: str) -> "Jet2":
        """Formal partial derivative; the result is exact to order N-1."""
        if axis not in ("x", "y"):
            raise ValueError("axis must be 'x' or 'y'")
        out = {}
        for (i, j), c in self._coeffs.items():
            if axis == "x" and i > 0:
                out[(i - 1, j)] = c * i
            elif axis == "y" and j > 0:
                out[(i, j - 1)] = c * j
        return Jet2(out, max(self.order - 1, 0))

    def compose_y(self, w: "Jet2") -> "Jet2":
        """Substitute y := w(x, y); requires w(0,0) = 0."""
        self._check(w)
        if w.constant_term() != 0:
            raise JetError("substitution jet must vanish at the origin")
        slices: dict[int, Jet2] = {}
        for (i, j), c in self._coeffs.items():
            sl = slices.setdefault(j, Jet2.zero(self.order))
            slices[j] = sl + Jet2({(i, 0): c}, self.order)
        if not slices:
            return Jet2.zero(self.order)
        top = max(slices)
        acc = Jet2.zero(self.order)
        for j in range(top, -1, -1):
            acc = acc * w + slices.get(j, Jet2.zero(self.order))
        return acc

    # -- rendering ------------------------------------------------------------------

    def render(self) -> str:
        body = self.to_polynomial().render()
        return f"{body} + O({self.order + 1})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Jet2({self.render()!r})"


def jet_add(a: Jet2, b: Jet2) -> Jet2:
    return a + b


def jet_mul(a: Jet2, b: Jet2) -> Jet2:
    return a * b


def jet_derivative(a: Jet2, axis: str) -> Jet2:
    return a.derivative(axis)


def jet_reciprocal(a: Jet2) -> Jet2:
    """Jet r with a * r = 1 up to order N; requires a(0,0) != 0."""
    c0 = a.constant_term()
    if c0 == 0:
        raise NonUnitConstantTerm("reciprocal requires a nonzero constant term")
    order = a.order
    r = Jet2.constant(QQ(1) / c0, order)
    # Newton doubling: each step doubles the number of correct orders.
    correct = 0
    while correct < order:
        r = r * (Jet2.constant(2, order) - a * r)
        correct = 2 * correct + 1
    return r


# ---------------------------------------------------------------------------
# Univariate series helpers (dense lists of Fractions, index = degree).
# ---------------------------------------------------------------------------


def _ser_mul(a: list[Fraction], b: list[Fraction], length: int) -> list[Fraction]:
    out = [QQ(0)] * length
    for i, ca in enumerate(a):
        if not ca or i >= length:
            continue
        top = min(len(b), length - i)
        for j in range(top):
            if b[j]:
                out[i + j] += ca * b[j]
    return out


def _ser_sqrt1(u: list[Fraction], length: int) -> list[Fraction]:
    """Square root of a series with constant term 1."""
    m = [QQ(0)] * length
    m[0] = QQ(1)
    for l in range(1, length):
        acc = u[l] if l < len(u) else QQ(0)
        for i in range(1, l):
            acc -= m[i] * m[l - i]
        m[l] = acc / 2
    return m


def _ser_cbrt1(u: list[Fraction], length: int) -> list[Fraction]:
    """Cube root of a series with constant term 1."""
    m = [QQ(0)] * length
    msq = [QQ(0)] * length
    m[0] = QQ(1)
    msq[0] = QQ(1)
    for l in range(1, length):
        # u_l = m_l * msq_0 + sum_{i<l} m_i * msq_{l-i}, and the new msq_l
        # itself contains 2*m_l, so u_l = 3*m_l + known.
        known = QQ(0)
        for i in range(1, l):
            known += m[i] * msq[l - i]  # i < l, l-i < l: both known
        # msq_{l-0} term with i=0: m_0 * msq_l = msq_l = 2 m_l + inner
        inner = QQ(0)
        for p in range(1, l):
            inner += m[p] * m[l - p]
        ul = u[l] if l < len(u) else QQ(0)
        m[l] = (ul - known - inner) / 3
        msq[l] = 2 * m[l] + inner
    return m


def _ser_recip1(m: list[Fraction], length: int) -> list[Fraction]:
    """Reciprocal of a series with constant term 1."""
    r = [QQ(0)] * length
    r[0] = QQ(1)
    for l in range(1, length):
        acc = QQ(0)
        for i in range(1, l + 1):
            if i < len(m) and m[i]:
                acc += m[i] * r[l - i]
        r[l] = -acc
    return r


def _x_slices(g: Jet2) -> list[list[Fraction]]:
    """Slice k -> dense list over y-degree (length order - k + 1)."""
    n = g.order
    out = [[QQ(0)] * (n - k + 1) for k in range(n + 1)]
    for (i, j), c in g.coeffs.items():
        out[i][j] = c
    return out


def _is_rational_square_root(q: Fraction) -> Fraction | None:
    """sqrt(q) as a Fraction if it exists (q >= 0), else None."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _icbrt(n: int) -> int:
    """Integer cube root of n >= 0 (floor)."""
    if n == 0:
        return 0
    r = round(n ** (1 / 3))
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def _is_rational_cube_root(q: Fraction) -> Fraction | None:
    """cbrt(q) as a Fraction if it exists (any sign), else None."""
    sign = -1 if q < 0 else 1
    mag = abs(q)
    rn = _icbrt(mag.numerator)
    rd = _icbrt(mag.denominator)
    if rn**3 == mag.numerator and rd**3 == mag.denominator:
        return sign * Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# Normalizations.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class YSubstitution:
    """New second coordinate w(x, y) with w(0,0) = 0.

    The genuine new coordinate is scale**(1/root) * w; ``scale`` is 1
    whenever that root is rational (it is then folded into ``w``).
    """

    y_jet: Jet2
    scale: Fraction = QQ(1)
    root: int = 2

    @property
    def dy_origin(self) -> Fraction:
        return self.y_jet.coefficient(0, 1)

    @property
    def invertible_in_y(self) -> bool:
        return self.dy_origin != 0

    @property
    def is_exact_scale(self) -> bool:
        return self.scale == 1

    def render(self) -> str:
        if self.is_exact_scale:
            return self.y_jet.render()
        return f"({self.scale})^(1/{self.root}) * ({self.y_jet.render()})"


@dataclass(frozen=True)
class MorseNormalization:
    """g = sign * scale * y_jet^2 + tau(x), through the truncation order."""

    sign: int
    sub: YSubstitution
    tau: Jet2  # univariate in x; exact rational regardless of scale

    @property
    def scale(self) -> Fraction:
        return self.sub.scale


@dataclass(frozen=True)
class CubicNormalization:
    """g = scale * y_jet^3 + scale * tau_scaled * y_jet + beta.

    The classical data is tau = scale**(2/3) * tau_scaled and beta; beta is
    rational always, tau is materialized only when the scale folds.
    """

    sub: YSubstitution
    tau_scaled: Jet2  # univariate in x
    beta: Jet2  # univariate in x; the genuine beta
    tau: Jet2 | None  # genuine tau when scale == 1 after folding, else None

    @property
    def scale(self) -> Fraction:
        return self.sub.scale


def _univariate_jet(values: dict[int, Fraction], order: int) -> Jet2:
    return Jet2({(k, 0): c for k, c in values.items() if c}, order)


def morse_normalize_y(g: Jet2) -> MorseNormalization:
    """Normalize a y-Morse jet: g = sign*scale*w^2 + tau(x), tau(0) = 0.

    Preconditions: g(0,0) = g_y(0,0) = 0 and g_yy(0,0) != 0.
    """
    if g.coefficient(0, 0) != 0 or g.coefficient(0, 1) != 0 or g.coefficient(0, 2) == 0:
        raise NotMorseInY(
            "need g(0,0) = g_y(0,0) = 0 and g_yy(0,0) != 0 on the jet"
        )
    n = g.order
    a = g.coefficient(0, 2)
    inv_a = QQ(1) / a
    slices = _x_slices(g)
    ghat = [[c * inv_a for c in sl] for sl in slices]

    # x^0 slice: z^2 * u0(z) with u0(0) = 1; w0 = z * sqrt(u0).
    u0 = ghat[0][2:]
    m0 = _ser_sqrt1(u0, max(n, 1))
    inv_m0 = _ser_recip1(m0, max(n, 1))
    phi: list[list[Fraction]] = [[QQ(0)] + m0[: n]]  # z * m0, z-degree <= n
    tau_hat: dict[int, Fraction] = {}

    for k in range(1, n + 1):
        zlen = n - k + 1
        w = list(ghat[k][:zlen]) + [QQ(0)] * max(0, zlen - len(ghat[k]))
        w = w[:zlen] + [QQ(0)] * (zlen - len(w))
        # subtract sum_{i+j=k, 1<=i,j} phi_i * phi_j
        for i in range(1, k):
            j = k - i
            if j < 1 or j >= len(phi) or i >= len(phi):
                continue
            prod = _ser_mul(phi[i], phi[j], zlen)
            for l in range(zlen):
                w[l] -= prod[l]
        tk = w[0]
        if tk:
            tau_hat[k] = tk
        # phi_k = (w - tk) / (2 z m0): shift down one, multiply inv_m0 / 2
        shifted = w[1:]
        pk = _ser_mul(shifted, inv_m0, max(zlen - 1, 0))
        pk = [c / 2 for c in pk]
        phi.append(pk)

    w_coeffs: dict[tuple[int, int], Fraction] = {}
    for k, sl in enumerate(phi):
        for l, c in enumerate(sl):
            if c and k + l <= n:
                w_coeffs[(k, l)] = c
    w_jet = Jet2(w_coeffs, n)

    sign = 1 if a > 0 else -1
    rho = abs(a)
    root = _is_rational_square_root(rho)
    if root is not None:
        w_jet = w_jet * root
        sub = YSubstitution(w_jet, QQ(1), 2)
    else:
        sub = YSubstitution(w_jet, rho, 2)
    tau = _univariate_jet({k: a * c for k, c in tau_hat.items()}, n)
    return MorseNormalization(sign, sub, tau)


def cubic_normalize_y(g: Jet2) -> CubicNormalization:
    """Normalize a y-cubic jet: g = scale*w^3 + scale*t*w + beta.

    Preconditions: g(0,0) = g_y(0,0) = g_yy(0,0) = 0 and g_yyy(0,0) != 0.
    """
    if (
        g.coefficient(0, 0) != 0
        or g.coefficient(0, 1) != 0
        or g.coefficient(0, 2) != 0
        or g.coefficient(0, 3) == 0
    ):
        raise NotCubicInY(
            "need g(0,0) = g_y(0,0) = g_yy(0,0) = 0 and g_yyy(0,0) != 0 on the jet"
        )
    n = g.order
    b = g.coefficient(0, 3)
    inv_b = QQ(1) / b
    ghat = [[c * inv_b for c in sl] for sl in _x_slices(g)]

    u0 = ghat[0][3:]
    m0 = _ser_cbrt1(u0, max(n, 1))
    m0sq = _ser_mul(m0, m0, max(n, 1))
    inv_m0sq = _ser_recip1(m0sq, max(n, 1))
    phi: list[list[Fraction]] = [[QQ(0)] + m0[: n]]
    # pair_sums[m] = sum_{i+j=m} phi_i phi_j over already-determined slices
    pair_sums: list[list[Fraction]] = [_ser_mul(phi[0], phi[0], n + 1)]
    t_hat: dict[int, Fraction] = {}
    beta_hat: dict[int, Fraction] = {}

    for k in range(1, n + 1):
        zlen = n - k + 1
        w = list(ghat[k][:zlen]) + [QQ(0)] * max(0, zlen - len(ghat[k]))
        w = w[:zlen] + [QQ(0)] * (zlen - len(w))
        # new pair sum at level k over indices 1..k-1 (excludes phi_k)
        s_k = [QQ(0)] * zlen
        for i in range(1, k):
            j = k - i
            prod = _ser_mul(phi[i], phi[j], zlen)
            for l in range(zlen):
                s_k[l] += prod[l]
        # cube slice over indices < k: phi_0*s_k + sum_{l=1..k-1} phi_l*pair_sums[k-l]
        cube = _ser_mul(phi[0], s_k, zlen)
        for l in range(1, k):
            prod = _ser_mul(phi[l], pair_sums[k - l], zlen)
            for m in range(zlen):
                cube[m] += prod[m]
        for l in range(zlen):
            w[l] -= cube[l]
        # t-part over indices < k: sum_{i=1..k-1} t_i * phi_{k-i}
        for i in range(1, k):
            ti = t_hat.get(i)
            if ti:
                src = phi[k - i]
                for l in range(min(zlen, len(src))):
                    w[l] -= ti * src[l]
        bk = w[0]
        if bk:
            beta_hat[k] = bk
        tk = w[1] if zlen > 1 else QQ(0)
        if tk:
            t_hat[k] = tk
        # phi_k = (w - bk - tk*z*m0) / (3 z^2 m0^2)
        rem = w[2:]
        if tk:
            rem = [rem[l] - tk * m0[l + 1] if l + 1 < len(m0) else rem[l] for l in range(len(rem))]
        pk = _ser_mul(rem, inv_m0sq, max(zlen - 2, 0))
        pk = [c / 3 for c in pk]
        phi.append(pk)
        # complete pair sum at level k now that phi_k is known: add 2 phi_0 phi_k
        extra = _ser_mul(phi[0], pk, n - k + 1)
        full = [QQ(0)] * (n - k + 1)
        for l in range(min(len(s_k), len(full))):
            full[l] = s_k[l]
        for l in range(len(full)):
            full[l] += 2 * extra[l]
        pair_sums.append(full)

    w_coeffs: dict[tuple[int, int], Fraction] = {}
    for k, sl in enumerate(phi):
        for l, c in enumerate(sl):
            if c and k + l <= n:
                w_coeffs[(k, l)] = c
    w_jet = Jet2(w_coeffs, n)

    beta = _univariate_jet({k: b * c for k, c in beta_hat.items()}, n)
    t_scaled = _univariate_jet(t_hat, n)
    root = _is_rational_cube_root(b)
    if root is not None:
        w_jet = w_jet * root
        sub = YSubstitution(w_jet, QQ(1), 3)
        tau = t_scaled * (root * root)
        return CubicNormalization(sub, t_scaled, beta, tau)
    sub = YSubstitution(w_jet, b, 3)
    return CubicNormalization(sub, t_scaled, beta, None)


def morse_reconstruction(norm: MorseNormalization, order: int) -> Jet2:
    """sign * scale * w^2 + tau, for checking against the input jet."""
    w = norm.sub.y_jet.truncated(order)
    return w * w * (norm.sign * norm.scale) + norm.tau.truncated(order)


def cubic_reconstruction(norm: CubicNormalization, order: int) -> Jet2:
    """scale * (w^3 + tau_scaled * w) + beta, for checking against the input."""
    w = norm.sub.y_jet.truncated(order)
    s = norm.scale
    return (w * w * w + norm.tau_scaled.truncated(order) * w) * s + norm.beta.truncated(order)


def morse_tau_residual(norm: MorseNormalization) -> Jet2:
    """(tau')^2 - tau, exact through order N-1; identically zero iff
    tau is x^2/4 or 0 (through the truncation order)."""
    n = norm.tau.order
    d = norm.tau.derivative("x")
    return d * d - norm.tau.truncated(max(n - 1, 0))


def cubic_system_residuals(norm: CubicNormalization) -> tuple[Jet2, Jet2]:
    """Residuals of the two normal-form equations, in rational data.

    With t = tau_scaled, s = scale and beta genuine, the equations
    3 tau' beta' - tau = 0 and -tau (tau')^2 + 3 (beta')^2 - 3 beta = 0
    are equivalent to

        R1 = 3 t' beta' - t
        R2 = -s^2 t (t')^2 + 3 (beta')^2 - 3 beta

    both of which live entirely in rational coefficients.
    """
    n = norm.beta.order
    t = norm.tau_scaled
    beta = norm.beta
    td = t.derivative("x")
    bd = beta.derivative("x")
    r1 = td * bd * 3 - t.truncated(max(n - 1, 0))
    s2 = norm.scale * norm.scale
    cut = max(n - 1, 0)
    r2 = (td * td) * t.truncated(cut) * (-s2) + bd * bd * 3 - beta.truncated(cut) * 3
    return r1, r2


def morse_exact_identity(norm: MorseNormalization, g: BivariatePolynomial) -> bool:
    """True when the computed substitution is polynomial and the identity
    g = sign * scale * w^2 + tau holds exactly (not only to jet order)."""
    w = norm.sub.y_jet.to_polynomial()
    tau = norm.tau.to_polynomial()
    return w * w * (norm.sign * norm.scale) + tau == g


def cubic_exact_identity(norm: CubicNormalization, g: BivariatePolynomial) -> bool:
    """True when g = scale * (w^3 + tau_scaled * w) + beta holds exactly."""
    w = norm.sub.y_jet.to_polynomial()
    t = norm.tau_scaled.to_polynomial()
    beta = norm.beta.to_polynomial()
    return (w * w * w + t * w) * norm.scale + beta == g


# ---------------------------------------------------------------------------
# Lemma of the derivative values of 1/(y^2 + c) and y/(y^2 + c).
# ---------------------------------------------------------------------------


def lemma1_values(k: int, c: Scalar) -> tuple[Fraction, Fraction]:
    """(even, odd) derivative values at y = 0 computed via jet arithmetic.

    even = d^(2k)/dy^(2k) [1/(y^2+c)](0),  odd = d^(2k+1)/dy^(2k+1) [y/(y^2+c)](0).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    c = _as_fraction(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    order = 2 * k + 2
    base = Jet2({(0, 2): QQ(1), (0, 0): c}, order)
    recip = jet_reciprocal(base)
    even = recip
    for _ in range(2 * k):
        even = even.derivative("y")
    odd = recip * Jet2.variable_y(order)
    for _ in range(2 * k + 1):
        odd = odd.derivative("y")
    return even.constant_term(), odd.constant_term()


def verify_lemma1(k: int, c: Scalar) -> bool:
    """Check both closed-form derivative values (-1)^k (2k)!/c^(k+1) and
    (-1)^k (2k+1)!/c^(k+1) against jet arithmetic."""
    c = _as_fraction(c)
    even, odd = lemma1_values(k, c)
    expected_even = QQ((-1) ** k * math.factorial(2 * k)) / c ** (k + 1)
    expected_odd = QQ((-1) ** k * math.factorial(2 * k + 1)) / c ** (k + 1)
    return even == expected_even and odd == expected_odd
