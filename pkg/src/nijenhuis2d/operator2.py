"""2x2 operator fields: Nijenhuis torsion, invariants, pointwise algebraic type.

In dimension two the Nijenhuis torsion has eight components but only
(N)^1_{12} = -(N)^1_{21} and (N)^2_{12} = -(N)^2_{21} are essential; the
rest vanish identically.  For L = [[a, b], [c, d]] the essential components
are

    n1 = a_y (a - d) + (bc)_y - (a + d)_x b
    n2 = d_x (a - d) - (bc)_x + (a + d)_y c

and L is a Nijenhuis operator iff both vanish identically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact_poly import (
    BivariatePolynomial,
    DivisionByZeroPolynomial,
    RationalFunction2,
    Scalar,
    _coerce_rf,
)


class OperatorError(Exception):
    pass


class UndefinedAtPoint(OperatorError):
    """An entry denominator vanishes at the evaluation point."""


class AlgebraicType(enum.Enum):
    JORDAN_BLOCK = "JordanBlock"
    REAL_DIAGONAL_DISTINCT = "RealDiagonalDistinct"
    COMPLEX_PAIR = "ComplexPair"
    SCALAR_TYPE = "ScalarType"


def _entry(value) -> RationalFunction2:
    rf = _coerce_rf(value)
    if rf is NotImplemented:
        raise TypeError(f"operator entry must be polynomial or rational, got {type(value).__name__}")
    return rf


@dataclass(frozen=True)
class OperatorField2:
    """Row-major 2x2 matrix [[a, b], [c, d]] of rational-function entries."""

    a: RationalFunction2
    b: RationalFunction2
    c: RationalFunction2
    d: RationalFunction2

    def __init__(self, a, b, c, d):
        object.__setattr__(self, "a", _entry(a))
        object.__setattr__(self, "b", _entry(b))
        object.__setattr__(self, "c", _entry(c))
        object.__setattr__(self, "d", _entry(d))

    def entries(self) -> tuple[RationalFunction2, RationalFunction2, RationalFunction2, RationalFunction2]:
        return (self.a, self.b, self.c, self.d)

    def trace(self) -> RationalFunction2:
        return self.a + self.d

    def det(self) -> RationalFunction2:
        return self.a * self.d - self.b * self.c

    def render_entries(self) -> list[str]:
        return [e.render() for e in self.entries()]

    def __str__(self) -> str:
        a, b, c, d = self.render_entries()
        return f"[[{a}, {b}], [{c}, {d}]]"


@dataclass(frozen=True)
class TorsionComponents:
    """The two essential torsion components (N)^1_{12} and (N)^2_{12}."""

    n1: RationalFunction2
    n2: RationalFunction2

    def is_zero(self) -> bool:
        return self.n1.is_zero() and self.n2.is_zero()


@dataclass(frozen=True)
class CharacteristicData:
    """Trace, determinant and discriminant disc = trace^2/4 - det."""

    trace: RationalFunction2
    det: RationalFunction2
    disc: RationalFunction2


def torsion_components(L: OperatorField2) -> TorsionComponents:
    """Exact essential Nijenhuis torsion components of L."""
    a, b, c, d = L.entries()
    bc = b * c
    trace = a + d
    n1 = a.partial_y() * (a - d) + bc.partial_y() - trace.partial_x() * b
    n2 = d.partial_x() * (a - d) - bc.partial_x() + trace.partial_y() * c
    return TorsionComponents(n1, n2)


def is_nijenhuis(L: OperatorField2) -> bool:
    """True iff both essential torsion components are identically zero."""
    return torsion_components(L).is_zero()


def characteristic_data(L: OperatorField2) -> CharacteristicData:
    trace = L.trace()
    det = L.det()
    disc = trace * trace * Fraction(1, 4) - det
    return CharacteristicData(trace, det, disc)


def differential_degeneracy(L: OperatorField2) -> RationalFunction2:
    """Jacobian determinant of (trace, det) with respect to (x, y).

    A point is differentially degenerate iff this vanishes there.
    """
    trace = L.trace()
    det = L.det()
    return trace.partial_x() * det.partial_y() - trace.partial_y() * det.partial_x()


def algebraic_type_at_point(L: OperatorField2, point: tuple[Scalar, Scalar]) -> AlgebraicType:
    """Pointwise Jordan type of L(point); the four two-dimensional cases."""
    px, py = point
    try:
        a = L.a.evaluate(px, py)
        b = L.b.evaluate(px, py)
        c = L.c.evaluate(px, py)
        d = L.d.evaluate(px, py)
    except DivisionByZeroPolynomial as exc:
        raise UndefinedAtPoint(f"operator undefined at ({px}, {py})") from exc
    disc = (a + d) ** 2 / 4 - (a * d - b * c)
    if disc > 0:
        return AlgebraicType.REAL_DIAGONAL_DISTINCT
    if disc < 0:
        return AlgebraicType.COMPLEX_PAIR
    if b == 0 and c == 0 and a == d:
        return AlgebraicType.SCALAR_TYPE
    return AlgebraicType.JORDAN_BLOCK


def conjugate_by_constant(L: OperatorField2, m: tuple[Scalar, Scalar, Scalar, Scalar]) -> OperatorField2:
    """M L M^{-1} for a constant invertible matrix M = [[p, q], [r, s]]."""
    p, q, r, s = (Fraction(v) for v in m)
    det = p * s - q * r
    if det == 0:
        raise OperatorError("conjugating matrix is singular")
    a, b, c, d = L.entries()
    # M L = [[pa+qc, pb+qd], [ra+sc, rb+sd]], then right-multiply by M^{-1}.
    ia, ib, ic, id_ = s / det, -q / det, -r / det, p / det
    na = (a * p + c * q) * ia + (b * p + d * q) * ic
    nb = (a * p + c * q) * ib + (b * p + d * q) * id_
    nc = (a * r + c * s) * ia + (b * r + d * s) * ic
    nd = (a * r + c * s) * ib + (b * r + d * s) * id_
    return OperatorField2(na, nb, nc, nd)
