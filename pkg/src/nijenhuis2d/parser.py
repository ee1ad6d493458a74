"""Recursive-descent parser for expressions in x and y.

Grammar: integers, rationals ``p/q``, the variables ``x`` and ``y``, the
operators ``+ - * / ^``, parentheses and unary minus.  ``^`` binds tighter
than unary minus (so ``-x^2`` is ``-(x^2)``) and its exponent must be a
nonnegative integer literal.  ``*`` is mandatory between factors; implicit
multiplication is a syntax error.

``parse_poly`` admits ``/`` only when the denominator subexpression is a
nonzero constant or divides exactly; ``parse_rational`` admits it freely
and returns a reduced rational function.  Every failure raises an error
carrying the offending source span.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_poly import (
    BivariatePolynomial,
    NotDivisible,
    RationalFunction2,
    exact_div,
)

Span = tuple[int, int]


class ParseError(Exception):
    """Base class for parser failures; carries the source span."""

    def __init__(self, message: str, span: Span):
        self.span = span
        self.message = message
        super().__init__(f"{message} (at {span[0]}..{span[1]})")


class ExprSyntaxError(ParseError):
    """Malformed input; ``expected`` names what would have been legal."""

    def __init__(self, message: str, span: Span, expected: str = ""):
        self.expected = expected
        super().__init__(message, span)


class NonPolynomialDivision(ParseError):
    """A ``/`` in polynomial context left a true rational function."""


class ZeroDenominator(ParseError):
    """A ``/`` with denominator identically zero."""


class OperatorEntryError(ParseError):
    """Failure parsing one entry of a 2x2 operator; carries the entry index."""

    def __init__(self, index: int, cause: ParseError):
        self.index = index
        self.cause = cause
        row, col = divmod(index, 2)
        ParseError.__init__(self, f"entry ({row + 1},{col + 1}): {cause.message}", cause.span)


# -- tokens -----------------------------------------------------------------

_OPERATOR_CHARS = "+-*/^()"


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "name" | one of + - * / ^ ( ) | "end"
    text: str
    span: Span
    value: int | None = None


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(Token("int", text[start:i], (start, i), int(text[start:i])))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("name", text[start:i], (start, i)))
            continue
        if ch in _OPERATOR_CHARS:
            tokens.append(Token(ch, ch, (i, i + 1)))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", (i, i + 1), expected="expression")
    tokens.append(Token("end", "", (n, n)))
    return tokens


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class ExprAst:
    """Expression node: constant | var | add | sub | neg | mul | div | pow."""

    kind: str
    span: Span
    children: tuple["ExprAst", ...] = ()
    value: int | None = None  # constant value or pow exponent
    name: str | None = None  # "x" or "y" for var nodes


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, expected: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ExprSyntaxError(
                f"expected {expected}, found {tok.text or 'end of input'!r}", tok.span, expected
            )
        return self.advance()

    # expr := term (('+'|'-') term)*
    def expr(self) -> ExprAst:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            kind = "add" if op.kind == "+" else "sub"
            node = ExprAst(kind, (node.span[0], rhs.span[1]), (node, rhs))
        return node

    # term := unary (('*'|'/') unary)*
    def term(self) -> ExprAst:
        node = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.unary()
            kind = "mul" if op.kind == "*" else "div"
            node = ExprAst(kind, (node.span[0], rhs.span[1]), (node, rhs))
        return node

    # unary := '-' unary | power
    def unary(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            child = self.unary()
            return ExprAst("neg", (tok.span[0], child.span[1]), (child,))
        return self.power()

    # power := atom ['^' nonneg-int-literal]
    def power(self) -> ExprAst:
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            exp_tok = self.peek()
            if exp_tok.kind != "int":
                raise ExprSyntaxError(
                    "exponent must be a nonnegative integer literal",
                    exp_tok.span,
                    "nonnegative integer",
                )
            self.advance()
            return ExprAst("pow", (base.span[0], exp_tok.span[1]), (base,), value=exp_tok.value)
        return base

    # atom := int | 'x' | 'y' | '(' expr ')'
    def atom(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return ExprAst("constant", tok.span, value=tok.value)
        if tok.kind == "name":
            if tok.text not in ("x", "y"):
                raise ExprSyntaxError(
                    f"unknown variable {tok.text!r}", tok.span, "x or y"
                )
            self.advance()
            return ExprAst("var", tok.span, name=tok.text)
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            closing = self.expect(")", "closing parenthesis")
            return ExprAst(
                inner.kind,
                (tok.span[0], closing.span[1]),
                inner.children,
                inner.value,
                inner.name,
            )
        raise ExprSyntaxError(
            f"expected a value, found {tok.text or 'end of input'!r}", tok.span, "value"
        )

    def parse(self) -> ExprAst:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(
                f"unexpected {tok.text!r} after expression", tok.span, "end of input"
            )
        return node


def parse_ast(text: str) -> ExprAst:
    """Parse to the raw AST without evaluating."""
    return _Parser(text).parse()


# -- evaluation ----------------------------------------------------------------


def _eval_poly(node: ExprAst) -> BivariatePolynomial:
    if node.kind == "constant":
        return BivariatePolynomial.constant(node.value)
    if node.kind == "var":
        return BivariatePolynomial.variable_x() if node.name == "x" else BivariatePolynomial.variable_y()
    if node.kind == "neg":
        return -_eval_poly(node.children[0])
    if node.kind == "add":
        return _eval_poly(node.children[0]) + _eval_poly(node.children[1])
    if node.kind == "sub":
        return _eval_poly(node.children[0]) - _eval_poly(node.children[1])
    if node.kind == "mul":
        return _eval_poly(node.children[0]) * _eval_poly(node.children[1])
    if node.kind == "pow":
        return _eval_poly(node.children[0]) ** node.value
    if node.kind == "div":
        num = _eval_poly(node.children[0])
        den = _eval_poly(node.children[1])
        if den.is_zero():
            raise ZeroDenominator("division by zero", node.children[1].span)
        if den.is_constant():
            return num * (Fraction(1) / den.constant_value())
        try:
            return exact_div(num, den)
        except NotDivisible:
            raise NonPolynomialDivision(
                "division does not stay polynomial", node.span
            ) from None
    raise AssertionError(f"unhandled node kind {node.kind}")


def _eval_rational(node: ExprAst) -> RationalFunction2:
    if node.kind == "div":
        num = _eval_rational(node.children[0])
        den = _eval_rational(node.children[1])
        if den.is_zero():
            raise ZeroDenominator("division by zero", node.children[1].span)
        return num / den
    if node.kind == "neg":
        return -_eval_rational(node.children[0])
    if node.kind == "add":
        return _eval_rational(node.children[0]) + _eval_rational(node.children[1])
    if node.kind == "sub":
        return _eval_rational(node.children[0]) - _eval_rational(node.children[1])
    if node.kind == "mul":
        return _eval_rational(node.children[0]) * _eval_rational(node.children[1])
    if node.kind == "pow":
        base = _eval_rational(node.children[0])
        result = RationalFunction2(1)
        for _ in range(node.value):
            result = result * base
        return result
    return RationalFunction2(_eval_poly(node))


def parse_poly(text: str) -> BivariatePolynomial:
    """Parse ``text`` to a polynomial; ``/`` must resolve exactly."""
    return _eval_poly(parse_ast(text))


def parse_rational(text: str) -> RationalFunction2:
    """Parse ``text`` to a reduced rational function."""
    return _eval_rational(parse_ast(text))


def parse_operator(entries: tuple[str, str, str, str] | list[str]):
    """Parse four row-major entry strings into an OperatorField2."""
    from .operator2 import OperatorField2

    if len(entries) != 4:
        raise ValueError("operator requires exactly four entries")
    parsed = []
    for index, text in enumerate(entries):
        try:
            parsed.append(parse_rational(text))
        except ParseError as exc:
            raise OperatorEntryError(index, exc) from exc
    return OperatorField2(*parsed)
