"""Text format for polynomials.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

``/`` is only legal when the divisor is a nonzero constant, so rational
literals like ``2/3`` parse while genuinely rational expressions such as
``y/x`` are rejected with a position-carrying error.  ``**`` is accepted
as a synonym for ``^``.  Printing (``str(poly)``) and :func:`parse_poly`
round-trip on canonical forms.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .poly import Poly, VarContext

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_']*)|(?P<op>\*\*|[-+*/^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        if match.lastgroup == "op" and match.group("op") == "**":
            tokens.append(("op", "^", match.start("op")))
        else:
            kind = match.lastgroup
            tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: VarContext):
        self.text = text
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)
        self.advance()

    def parse(self) -> Poly:
        result = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos)
        return result

    def expr(self) -> Poly:
        result = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                result = result + rhs if value == "+" else result - rhs
            else:
                return result

    def term(self) -> Poly:
        result = self.unary()
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value in "*/":
                self.advance()
                rhs = self.unary()
                if value == "*":
                    result = result * rhs
                else:
                    if not rhs.is_constant():
                        raise ParseError("division by a non-constant is not a polynomial", pos)
                    divisor = rhs.constant_value()
                    if divisor == 0:
                        raise ParseError("division by zero", pos)
                    result = result * (Fraction(1) / divisor)
            else:
                return result

    def unary(self) -> Poly:
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.advance()
            return -self.unary()
        if kind == "op" and value == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            ekind, evalue, epos = self.peek()
            if ekind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", epos)
            self.advance()
            return base ** int(evalue)
        return base

    def atom(self) -> Poly:
        kind, value, pos = self.advance()
        if kind == "int":
            return Poly.constant(self.ctx, int(value))
        if kind == "name":
            if value not in self.ctx:
                raise ParseError(f"unknown variable {value!r}", pos)
            return Poly.variable(self.ctx, value)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"expected a number, variable or '(', got {value!r}" if value else "unexpected end of input", pos)


def parse_poly(text: str, ctx: VarContext) -> Poly:
    """Parse ``text`` into a canonical polynomial over ``ctx``."""
    return _Parser(text, ctx).parse()
