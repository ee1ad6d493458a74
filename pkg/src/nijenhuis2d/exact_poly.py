"""Exact arithmetic on bivariate polynomials and rational functions over Q.

A polynomial in x, y is stored as a sparse map from exponent pairs (i, j)
to nonzero Fraction coefficients.  All arithmetic is exact; there is no
floating point anywhere in this module.  The classification theorems of the
rest of the package depend on exact zero tests such as (tau')^2 - tau == 0,
which would be meaningless with rounded coefficients.

Canonical textual rendering uses graded-lexicographic term order (higher
total degree first, then higher x-exponent), explicit ``^`` for powers and
``p/q`` for rational coefficients.  The rendering round-trips through
``nijenhuis2d.parser``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

QQ = Fraction

#: Degree of the zero polynomial.  A distinguished sentinel (never -1 as an
#: ordinary integer) so accidental arithmetic on it is loud.
NEG_INFINITY = float("-inf")

#: Order of the zero function at x = 0.
INFINITE_ORDER = math.inf

Scalar = Union[int, Fraction]


class PolynomialError(Exception):
    """Base class for errors raised by exact polynomial arithmetic."""


class DivisionByZeroPolynomial(PolynomialError, ZeroDivisionError):
    """Division by the zero polynomial."""


class NotDivisible(PolynomialError):
    """Exact division failed; carries a nonzero remainder witness.

    The witness is the remainder of division in y over the fraction field
    Q(x), cleared of denominators and normalized primitive with positive
    leading coefficient.  When the y-remainder vanishes but a quotient
    coefficient is not polynomial in x, the witness is the lowest-degree
    failing univariate remainder times its y-monomial.
    """

    def __init__(self, remainder: "BivariatePolynomial"):
        self.remainder = remainder
        super().__init__(f"not divisible, remainder witness {remainder}")


class InvalidShear(PolynomialError):
    """Shear substitution y -> a*x + b*y requires b != 0."""


class NotUnivariate(PolynomialError):
    """Operation requires a polynomial in a single variable."""


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def _grlex_key(exponents: tuple[int, int]) -> tuple[int, int]:
    i, j = exponents
    return (i + j, i)


class BivariatePolynomial:
    """Immutable sparse polynomial in x and y with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (i, j), coeff in terms.items():
                c = _as_fraction(coeff)
                if c != 0:
                    if i < 0 or j < 0:
                        raise ValueError(f"negative exponent ({i}, {j})")
                    clean[(i, j)] = c
        self._terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "BivariatePolynomial":
        return cls({(0, 0): _as_fraction(value)})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: Scalar = 1) -> "BivariatePolynomial":
        return cls({(i, j): _as_fraction(coeff)})

    @classmethod
    def variable_x(cls) -> "BivariatePolynomial":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def variable_y(cls) -> "BivariatePolynomial":
        return cls({(0, 1): Fraction(1)})

    # -- basic queries ------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[tuple[int, int], Fraction]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def is_one(self) -> bool:
        return self._terms == {(0, 0): Fraction(1)}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise NotUnivariate(f"{self} is not a constant")
        return self._terms.get((0, 0), Fraction(0))

    def degree(self) -> float | int:
        """Total degree; NEG_INFINITY for the zero polynomial."""
        if not self._terms:
            return NEG_INFINITY
        return max(i + j for i, j in self._terms)

    def degree_x(self) -> float | int:
        if not self._terms:
            return NEG_INFINITY
        return max(i for i, _ in self._terms)

    def degree_y(self) -> float | int:
        if not self._terms:
            return NEG_INFINITY
        return max(j for _, j in self._terms)

    def depends_on_x(self) -> bool:
        return any(i > 0 for i, _ in self._terms)

    def depends_on_y(self) -> bool:
        return any(j > 0 for _, j in self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def leading_term(self) -> tuple[tuple[int, int], Fraction]:
        """Leading (exponents, coefficient) under graded-lex order."""
        if not self._terms:
            raise PolynomialError("zero polynomial has no leading term")
        e = max(self._terms, key=_grlex_key)
        return e, self._terms[e]

    def is_homogeneous(self) -> bool:
        if not self._terms:
            return True
        degrees = {i + j for i, j in self._terms}
        return len(degrees) == 1

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "BivariatePolynomial | Scalar") -> "BivariatePolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return _raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "BivariatePolynomial | Scalar") -> "BivariatePolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "BivariatePolynomial":
        return (-self) + other

    def __mul__(self, other: "BivariatePolynomial | Scalar") -> "BivariatePolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return BivariatePolynomial.zero()
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivariatePolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial power requires a nonnegative integer")
        result = BivariatePolynomial.constant(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BivariatePolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == BivariatePolynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and substitution -------------------------------------------

    def partial_x(self) -> "BivariatePolynomial":
        out = {}
        for (i, j), c in self._terms.items():
            if i > 0:
                out[(i - 1, j)] = c * i
        return _raw(out)

    def partial_y(self) -> "BivariatePolynomial":
        out = {}
        for (i, j), c in self._terms.items():
            if j > 0:
                out[(i, j - 1)] = c * j
        return _raw(out)

    def evaluate(self, px: Scalar, py: Scalar) -> Fraction:
        px = _as_fraction(px)
        py = _as_fraction(py)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * px**i * py**j
        return total

    def evaluate_float(self, px: float, py: float) -> float:
        total = 0.0
        for (i, j), c in self._terms.items():
            total += float(c) * px**i * py**j
        return total

    def substitute_y(self, replacement: "BivariatePolynomial") -> "BivariatePolynomial":
        """p(x, replacement(x, y)); Horner scheme in y."""
        slices = self.y_slices()
        if not slices:
            return BivariatePolynomial.zero()
        top = max(slices)
        acc = BivariatePolynomial.zero()
        for j in range(top, -1, -1):
            acc = acc * replacement + slices.get(j, BivariatePolynomial.zero())
        return acc

    def y_slices(self) -> dict[int, "BivariatePolynomial"]:
        """Map y-degree j -> coefficient polynomial in x alone."""
        out: dict[int, dict[tuple[int, int], Fraction]] = {}
        for (i, j), c in self._terms.items():
            out.setdefault(j, {})[(i, 0)] = c
        return {j: _raw(d) for j, d in out.items()}

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self._terms:
            return Fraction(1)
        num_gcd = 0
        den_lcm = 1
        for c in self._terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        return Fraction(num_gcd, den_lcm)

    def primitive_positive(self) -> "BivariatePolynomial":
        """Divide by content and fix the graded-lex leading coefficient positive."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return _raw({e: coeff / c for e, coeff in self._terms.items()})

    # -- rendering -------------------------------------------------------------

    def render(self) -> str:
        """Canonical text form; parses back to an equal polynomial."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (i, j), coeff in self.sorted_terms():
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.render()!r})"


def _raw(terms: dict[tuple[int, int], Fraction]) -> BivariatePolynomial:
    p = BivariatePolynomial.__new__(BivariatePolynomial)
    p._terms = terms
    p._hash = None
    return p


def _coerce(value: object) -> BivariatePolynomial:
    if isinstance(value, BivariatePolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return BivariatePolynomial.constant(value)
    return NotImplemented  # type: ignore[return-value]


#: The coordinate polynomials, exported for convenience.
X = BivariatePolynomial.variable_x()
Y = BivariatePolynomial.variable_y()
ONE = BivariatePolynomial.constant(1)
ZERO = BivariatePolynomial.zero()


# ---------------------------------------------------------------------------
# Internal univariate (in x) helpers.  An "xpoly" is a dict degree -> Fraction
# with no zero entries; these back the pseudo-division and GCD routines.
# ---------------------------------------------------------------------------


def _xp_from(p: BivariatePolynomial) -> dict[int, Fraction]:
    if p.depends_on_y():
        raise NotUnivariate(f"{p} depends on y")
    return {i: c for (i, _), c in p._terms.items()}


def _xp_to(d: dict[int, Fraction]) -> BivariatePolynomial:
    return _raw({(i, 0): c for i, c in d.items() if c})


def _xp_deg(d: dict[int, Fraction]) -> int:
    return max(d) if d else -1


def _xp_add(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    out = dict(a)
    for i, c in b.items():
        s = out.get(i, Fraction(0)) + c
        if s:
            out[i] = s
        else:
            out.pop(i, None)
    return out


def _xp_scale(a: dict[int, Fraction], s: Fraction) -> dict[int, Fraction]:
    if not s:
        return {}
    return {i: c * s for i, c in a.items()}


def _xp_mul(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, ca in a.items():
        for j, cb in b.items():
            k = i + j
            s = out.get(k, Fraction(0)) + ca * cb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _xp_divmod(a: dict[int, Fraction], b: dict[int, Fraction]) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
    if not b:
        raise DivisionByZeroPolynomial("univariate division by zero")
    db = _xp_deg(b)
    lead = b[db]
    quo: dict[int, Fraction] = {}
    rem = dict(a)
    while rem and _xp_deg(rem) >= db:
        dr = _xp_deg(rem)
        factor = rem[dr] / lead
        quo[dr - db] = factor
        for i, c in b.items():
            k = dr - db + i
            s = rem.get(k, Fraction(0)) - factor * c
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return quo, rem


def _xp_gcd(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    """Monic GCD in Q[x]; {} only when both inputs are zero."""
    while b:
        _, r = _xp_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[_xp_deg(a)]
        a = _xp_scale(a, 1 / lead)
    return a


# ---------------------------------------------------------------------------
# y-slice view: a bivariate polynomial as list of xpolys indexed by y-degree.
# ---------------------------------------------------------------------------


def _yslices(p: BivariatePolynomial) -> list[dict[int, Fraction]]:
    dy = p.degree_y()
    if dy is NEG_INFINITY:
        return []
    out: list[dict[int, Fraction]] = [{} for _ in range(int(dy) + 1)]
    for (i, j), c in p._terms.items():
        out[j][i] = c
    return out


def _from_yslices(slices: list[dict[int, Fraction]]) -> BivariatePolynomial:
    terms: dict[tuple[int, int], Fraction] = {}
    for j, d in enumerate(slices):
        for i, c in d.items():
            if c:
                terms[(i, j)] = c
    return _raw(terms)


def _ydeg(slices: list[dict[int, Fraction]]) -> int:
    for j in range(len(slices) - 1, -1, -1):
        if slices[j]:
            return j
    return -1


# ---------------------------------------------------------------------------
# Public operations.
# ---------------------------------------------------------------------------


def exact_div(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    """Exact quotient p/q in Q[x, y], or raise NotDivisible with a witness.

    Divisibility is decided by pseudo-division in y over the fraction field
    of Q[x] followed by an exact coefficient check, which is complete for
    the full bivariate ring.
    """
    if q.is_zero():
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    if p.is_zero():
        return BivariatePolynomial.zero()

    qs = _yslices(q)
    dq = _ydeg(qs)

    if dq == 0:
        # q depends on x only: divide slice-wise in Q[x].
        den = qs[0]
        out: dict[tuple[int, int], Fraction] = {}
        ps = _yslices(p)
        for j, sl in enumerate(ps):
            if not sl:
                continue
            quo, rem = _xp_divmod(sl, den)
            if rem:
                witness = _from_yslices([{} for _ in range(j)] + [rem])
                raise NotDivisible(witness.primitive_positive())
            for i, c in quo.items():
                if c:
                    out[(i, j)] = c
        return _raw(out)

    ps = _yslices(p)
    dp = _ydeg(ps)
    if dp < dq:
        raise NotDivisible(p.primitive_positive())

    # Pseudo-division: lead^s * p = quo * q + rem with deg_y(rem) < deg_y(q).
    lead = qs[dq]
    rem = [dict(sl) for sl in ps]
    quo: list[dict[int, Fraction]] = [{} for _ in range(dp - dq + 1)]
    scale_power = 0
    d = _ydeg(rem)
    while d >= dq:
        top = rem[d]
        # rem <- lead*rem - top * y^(d-dq) * q ; quo <- lead*quo + top*y^(d-dq)
        rem = [_xp_mul(lead, sl) for sl in rem]
        quo = [_xp_mul(lead, sl) for sl in quo]
        scale_power += 1
        shift = d - dq
        for jj, qsl in enumerate(qs):
            if qsl:
                rem[jj + shift] = _xp_add(rem[jj + shift], _xp_scale(_xp_mul(top, qsl), Fraction(-1)))
        quo[shift] = _xp_add(quo[shift], top)
        d = _ydeg(rem)

    if any(sl for sl in rem):
        raise NotDivisible(_from_yslices(rem).primitive_positive())

    # p = (quo / lead^scale_power) * q; check every coefficient divides in Q[x].
    denom = {0: Fraction(1)}
    for _ in range(scale_power):
        denom = _xp_mul(denom, lead)
    out = {}
    for j, sl in enumerate(quo):
        if not sl:
            continue
        h, r = _xp_divmod(sl, denom)
        if r:
            witness = _from_yslices([{} for _ in range(j)] + [r])
            raise NotDivisible(witness.primitive_positive())
        for i, c in h.items():
            if c:
                out[(i, j)] = c
    return _raw(out)


def divides(q: BivariatePolynomial, p: BivariatePolynomial) -> bool:
    """True iff q divides p exactly (q != 0)."""
    try:
        exact_div(p, q)
        return True
    except NotDivisible:
        return False


def _content_y(p: BivariatePolynomial) -> dict[int, Fraction]:
    """GCD in Q[x] of the y-slice coefficients (monic)."""
    g: dict[int, Fraction] = {}
    for sl in _yslices(p):
        if sl:
            g = _xp_gcd(g, sl)
    return g


def gcd_bivariate(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    """GCD in Q[x, y], primitive (content 1) with positive leading coefficient.

    Computed as gcd of y-contents times the gcd of y-primitive parts; the
    latter by a pseudo-remainder sequence in y over the fraction field Q(x)
    with primitive-part reduction at each step.
    """
    if p.is_zero() and q.is_zero():
        raise PolynomialError("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.primitive_positive()
    if q.is_zero():
        return p.primitive_positive()

    cont_p = _content_y(p)
    cont_q = _content_y(q)
    cont_gcd = _xp_gcd(cont_p, cont_q)

    def primitive_part(slices: list[dict[int, Fraction]]) -> list[dict[int, Fraction]]:
        g: dict[int, Fraction] = {}
        for sl in slices:
            if sl:
                g = _xp_gcd(g, sl)
        return [_xp_divmod(sl, g)[0] if sl else {} for sl in slices]

    a = primitive_part(_yslices(p))
    b = primitive_part(_yslices(q))
    if _ydeg(a) < _ydeg(b):
        a, b = b, a

    while True:
        db = _ydeg(b)
        if db < 0:
            break
        if db == 0:
            # y-primitive and y-free means a unit.
            a = [{0: Fraction(1)}]
            break
        # pseudo-remainder of a by b in y
        da = _ydeg(a)
        lead = b[db]
        rem = [dict(sl) for sl in a]
        d = _ydeg(rem)
        while d >= db:
            top = rem[d]
            rem = [_xp_mul(lead, sl) for sl in rem]
            shift = d - db
            for jj, qsl in enumerate(b):
                if qsl:
                    rem[jj + shift] = _xp_add(rem[jj + shift], _xp_scale(_xp_mul(top, qsl), Fraction(-1)))
            d = _ydeg(rem)
        a, b = b, primitive_part(rem) if any(sl for sl in rem) else []

    gcd_pp = _from_yslices(a)
    result = gcd_pp * _xp_to(cont_gcd)
    return result.primitive_positive()


def shear_substitute(p: BivariatePolynomial, a: Scalar, b: Scalar) -> BivariatePolynomial:
    """p(x, a*x + b*y): invertible change of the second coordinate, b != 0."""
    a = _as_fraction(a)
    b = _as_fraction(b)
    if b == 0:
        raise InvalidShear("shear requires b != 0")
    replacement = _raw({k: v for k, v in {(1, 0): a, (0, 1): b}.items() if v})
    return p.substitute_y(replacement)


def order_at_zero_x(p: BivariatePolynomial) -> int | float:
    """Largest l with x^l dividing p (p in x only); INFINITE_ORDER iff p == 0."""
    if p.depends_on_y():
        raise NotUnivariate(f"{p} involves y")
    if p.is_zero():
        return INFINITE_ORDER
    return min(i for i, _ in p._terms)


# ---------------------------------------------------------------------------
# Reduced rational functions.
# ---------------------------------------------------------------------------


class RationalFunction2:
    """Reduced quotient of two bivariate polynomials.

    Invariants: den != 0; gcd(num, den) is a unit; den has coprime integer
    coefficients with positive graded-lex leading coefficient (so den == 1
    exactly when the fraction is a polynomial).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: BivariatePolynomial | Scalar, den: BivariatePolynomial | Scalar = 1):
        num = _coerce(num)
        den = _coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RationalFunction2 requires polynomial or scalar arguments")
        if den.is_zero():
            raise DivisionByZeroPolynomial("zero denominator")
        if num.is_zero():
            self.num = BivariatePolynomial.zero()
            self.den = ONE
            return
        g = gcd_bivariate(num, den)
        if not g.is_one():
            num = exact_div(num, g)
            den = exact_div(den, g)
        c = den.content()
        if den.leading_term()[1] < 0:
            c = -c
        if c != 1:
            inv = Fraction(1) / c
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_polynomial(self) -> BivariatePolynomial:
        if not self.is_polynomial():
            raise NotDivisible(self.den)
        return self.num

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "RationalFunction2 | BivariatePolynomial | Scalar") -> "RationalFunction2":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction2(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction2":
        return _rf_raw(-self.num, self.den)

    def __sub__(self, other: "RationalFunction2 | BivariatePolynomial | Scalar") -> "RationalFunction2":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "RationalFunction2 | BivariatePolynomial | Scalar") -> "RationalFunction2":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: "RationalFunction2 | BivariatePolynomial | Scalar") -> "RationalFunction2":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction2(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFunction2 | BivariatePolynomial | Scalar") -> "RationalFunction2":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZeroPolynomial("division by zero rational function")
        return RationalFunction2(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: "RationalFunction2 | BivariatePolynomial | Scalar") -> "RationalFunction2":
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction2):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (BivariatePolynomial, int, Fraction)):
            return self == _coerce_rf(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- calculus -------------------------------------------------------------

    def partial_x(self) -> "RationalFunction2":
        return RationalFunction2(
            self.num.partial_x() * self.den - self.num * self.den.partial_x(),
            self.den * self.den,
        )

    def partial_y(self) -> "RationalFunction2":
        return RationalFunction2(
            self.num.partial_y() * self.den - self.num * self.den.partial_y(),
            self.den * self.den,
        )

    def evaluate(self, px: Scalar, py: Scalar) -> Fraction:
        d = self.den.evaluate(px, py)
        if d == 0:
            raise DivisionByZeroPolynomial(f"denominator vanishes at ({px}, {py})")
        return self.num.evaluate(px, py) / d

    # -- rendering --------------------------------------------------------------

    def render(self) -> str:
        if self.is_polynomial():
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RationalFunction2({self.render()!r})"


def _rf_raw(num: BivariatePolynomial, den: BivariatePolynomial) -> RationalFunction2:
    rf = RationalFunction2.__new__(RationalFunction2)
    rf.num = num
    rf.den = den
    return rf


def _coerce_rf(value: object) -> RationalFunction2:
    if isinstance(value, RationalFunction2):
        return value
    if isinstance(value, (BivariatePolynomial, int, Fraction)):
        p = _coerce(value)
        return _rf_raw(p, ONE)
    return NotImplemented  # type: ignore[return-value]
