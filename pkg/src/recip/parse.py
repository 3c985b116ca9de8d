"""Text grammar for polynomials and rational-function expressions.

Grammar (whitespace insignificant, the unicode minus sign is accepted):

    expr     := product (('+'|'-') product)*
    product  := unary (('*'|'/') unary)*
    unary    := ('+'|'-')* power
    power    := atom ('^' signed_int)?
    atom     := INT | variable | '(' expr ')'
    variable := NAME ('^' exponent)?
    exponent := signed_int | '(' signed_int (',' signed_int)* ')'

Rationals are written ``p/q`` or ``p`` (the slash doubles as exact division,
which yields the same value).  With a single variable name and rank N > 1,
monomials use the vector form ``X^(1,-2)``; with one name per coordinate
(for example Y and X), each variable takes a plain integer power.

Parse errors carry the offending position and what was expected.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .laurent import LaurentPolynomial
from .ratfunc import RationalFunction


class ParseError(ValueError):
    """Syntax error in the expression grammar, with position information."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN_RE = re.compile(r"(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/^(),])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        tokens.append((kind, match.group(), pos))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, rank: int, names: tuple[str, ...]):
        if rank < 1:
            raise ValueError("rank must be positive")
        names = tuple(names)
        self.vector_mode = len(names) == 1 and rank > 1
        if not self.vector_mode and len(names) != rank:
            raise ValueError("need one variable name per coordinate")
        self.rank = rank
        self.coords = {name: i for i, name in enumerate(names)}
        self.tokens = _tokenize(text.replace("−", "-"))
        self.index = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect_op(self, op: str) -> None:
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)
        self.advance()

    def at_op(self, *ops: str) -> str | None:
        kind, value, _ = self.peek()
        if kind == "op" and value in ops:
            return value
        return None

    # -- grammar ----------------------------------------------------------

    def parse(self) -> RationalFunction:
        value = self.expr()
        kind, token, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {token!r}", pos)
        return value

    def expr(self) -> RationalFunction:
        value = self.product()
        while (op := self.at_op("+", "-")) is not None:
            self.advance()
            rhs = self.product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def product(self) -> RationalFunction:
        value = self.unary()
        while (op := self.at_op("*", "/")) is not None:
            _, _, pos = self.advance()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", pos)
                value = value / rhs
        return value

    def unary(self) -> RationalFunction:
        negative = False
        while (op := self.at_op("+", "-")) is not None:
            self.advance()
            negative ^= op == "-"
        value = self.power()
        return -value if negative else value

    def power(self) -> RationalFunction:
        value = self.atom()
        if self.at_op("^"):
            self.advance()
            value = value ** self.signed_int()
        return value

    def atom(self) -> RationalFunction:
        kind, token, pos = self.peek()
        if kind == "int":
            self.advance()
            return RationalFunction.from_scalar(self.rank, Fraction(int(token)))
        if kind == "name":
            self.advance()
            return self.variable(token, pos)
        if kind == "op" and token == "(":
            self.advance()
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError("expected a number, variable, or '('", pos)

    def variable(self, name: str, pos: int) -> RationalFunction:
        if name not in self.coords:
            raise ParseError(f"unknown variable {name!r}", pos)
        if self.at_op("^"):
            self.advance()
            exponent = self.exponent_vector(name)
        else:
            if self.vector_mode:
                raise ParseError(f"variable {name!r} requires an exponent vector", pos)
            exponent = self.unit(self.coords[name], 1)
        return RationalFunction(LaurentPolynomial.monomial(self.rank, exponent))

    def unit(self, coord: int, value: int) -> tuple[int, ...]:
        exponent = [0] * self.rank
        exponent[coord] = value
        return tuple(exponent)

    def exponent_vector(self, name: str) -> tuple[int, ...]:
        kind, token, pos = self.peek()
        if kind == "op" and token == "(":
            if not self.vector_mode:
                raise ParseError("vector exponents need the single-variable form", pos)
            self.advance()
            coords = [self.signed_int()]
            while self.at_op(","):
                self.advance()
                coords.append(self.signed_int())
            self.expect_op(")")
            if len(coords) != self.rank:
                raise ParseError(f"expected {self.rank} exponent coordinates", pos)
            return tuple(coords)
        if self.vector_mode:
            raise ParseError(f"expected '(' after {name}^", pos)
        return self.unit(self.coords[name], self.signed_int())

    def signed_int(self) -> int:
        sign = 1
        while (op := self.at_op("+", "-")) is not None:
            self.advance()
            if op == "-":
                sign = -sign
        kind, token, pos = self.peek()
        if kind != "int":
            raise ParseError("expected an integer", pos)
        self.advance()
        return sign * int(token)


def parse_ratfunc(text: str, rank: int = 1, names: tuple[str, ...] = ("X",)) -> RationalFunction:
    """Parse a rational-function expression of the given rank."""
    return _Parser(text, rank, names).parse()


def parse_poly(text: str, rank: int = 1, names: tuple[str, ...] = ("X",)) -> LaurentPolynomial:
    """Parse an expression and require it to be a Laurent polynomial.

    Monomial denominators are folded back into negative exponents.
    """
    value = parse_ratfunc(text, rank, names)
    if len(value.den) != 1:
        raise ParseError("expression is not a polynomial", 0)
    exponent, coeff = next(value.den.terms())
    return value.num.shift(tuple(-e for e in exponent)).scale(1 / coeff)


def parse_rational(text: str) -> Fraction:
    """Parse a plain rational number written as ``p`` or ``p/q``."""
    try:
        return Fraction(text.replace("−", "-").strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational {text!r}", 0) from exc
