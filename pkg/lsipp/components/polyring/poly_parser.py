# ======================================================================= #
#  Copyright (C) 2025 The lsipp-relax contributors                        #
#                                                                         #
#  This file is part of lsipp-relax - semidefinite relaxations for linear #
#  semi-infinite polynomial programs                                      #
#                                                                         #
#  This file may be distributed under the terms of the GNU GPLv3 license  #
# ======================================================================= #
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List

from lsipp.components.polyring.polynomial import Polynomial
from lsipp.core.constants import VAR_PREFIX
from lsipp.core.errors import PolynomialParseError

# definition of a token:
#  - a decimal number with optional fraction and exponent part, or
#  - a variable: the prefix followed by a positive index, or
#  - a single operator or parenthesis character
TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    rf"|(?P<var>{VAR_PREFIX}\d+)"
    r"|(?P<op>[-+*/^()]))"
)
TRAILING_SPACE_RE = re.compile(r"\s*$")


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while not TRAILING_SPACE_RE.fullmatch(text, pos):
        match = TOKEN_RE.match(text, pos)
        if match is None:
            offset = len(text) - len(text[pos:].lstrip())
            raise PolynomialParseError(text, offset, "unexpected character")
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over  expr := term (('+'|'-') term)*"""

    def __init__(self, text: str, nvars: int) -> None:
        self.text = text
        self.nvars = nvars
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _fail(self, reason: str, token: Token | None = None) -> PolynomialParseError:
        return PolynomialParseError(self.text, (token or self.current).pos, reason)

    def parse(self) -> Polynomial:
        if self.current.kind == "end":
            raise self._fail("empty expression")
        result = self._expr()
        if self.current.kind != "end":
            raise self._fail(f"unexpected '{self.current.text}'")
        return result

    def _expr(self) -> Polynomial:
        result = self._term()
        while self.current.text in ("+", "-"):
            op = self._advance().text
            rhs = self._term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _term(self) -> Polynomial:
        result = self._unary()
        while self.current.text in ("*", "/"):
            op = self._advance()
            rhs = self._unary()
            if op.text == "*":
                result = result * rhs
                continue
            if rhs.degree > 0 or rhs.is_zero:
                raise self._fail("division only by a nonzero constant", op)
            result = result * (1.0 / rhs.coef((0,) * self.nvars))
        return result

    def _unary(self) -> Polynomial:
        if self.current.text == "-":
            self._advance()
            return -self._unary()
        if self.current.text == "+":
            self._advance()
            return self._unary()
        return self._power()

    def _power(self) -> Polynomial:
        base = self._atom()
        if self.current.text != "^":
            return base
        self._advance()
        token = self._advance()
        if token.kind != "num" or not token.text.isdigit():
            raise self._fail("exponent must be a nonnegative integer", token)
        return base ** int(token.text)

    def _atom(self) -> Polynomial:
        token = self._advance()
        if token.kind == "num":
            return Polynomial.constant(self.nvars, float(token.text))
        if token.kind == "var":
            index = int(token.text[len(VAR_PREFIX):])
            if not 1 <= index <= self.nvars:
                raise self._fail(
                    f"variable {token.text} outside {VAR_PREFIX}1..{VAR_PREFIX}{self.nvars}",
                    token,
                )
            return Polynomial.variable(self.nvars, index - 1)
        if token.text == "(":
            inner = self._expr()
            if self.current.text != ")":
                raise self._fail("missing closing parenthesis")
            self._advance()
            return inner
        raise self._fail(
            "unexpected end of expression" if token.kind == "end" else f"unexpected '{token.text}'",
            token,
        )


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """
    Parse the text form of a polynomial in the variables Y1..Yn, e.g.
    "3*Y1^2*Y2 - 1" or "(Y1 + 5*Y2)*Y1^2 - (Y1^2 + Y2^2)^2". Rationals such as
    "1/3" are read as the nearest double.

    :param text: the expression
    :param nvars: number of variables of the polynomial ring
    :return: the parsed polynomial
    """
    return _Parser(text, nvars).parse()
