"""Recursive descent parser for polynomial expressions.

Grammar (whitespace-insensitive, implicit multiplication not allowed)::

    expr     := term (('+' | '-') term)*
    term     := ['+' | '-'] factor ('*' factor)*
    factor   := rational | var ['^' uint] | '(' expr ')' ['^' uint]
    rational := uint ['/' uint]

The optional leading sign on a term lets canonical output such as
``-x^3 + y^2`` parse back.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .errors import NegativeExponent, ParseError, UnknownVariable
from .polyring import Polynomial, Ring, pow_

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'num', 'name', 'op', 'end'
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            if "\n" in chunk:
                line += chunk.count("\n")
                line_start = pos + chunk.rindex("\n") + 1
        else:
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.tokens = tokenize(text)
        self.pos = 0
        self.ring = ring

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def _error(self, message, tok=None, cls=ParseError):
        tok = tok or self.tok
        return cls(message, tok.line, tok.column)

    def advance(self) -> Token:
        tok = self.tok
        self.pos += 1
        return tok

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.pos += 1
            return True
        return False

    def expect(self, op: str):
        if not self.accept(op):
            found = self.tok.text or "end of input"
            raise self._error(f"expected {op!r}, found {found!r}")

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            raise self._error("empty expression")
        result = self.expr()
        if self.tok.kind != "end":
            raise self._error(f"unexpected {self.tok.text!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        negate = False
        if self.accept("-"):
            negate = True
        elif self.accept("+"):
            pass
        result = self.factor()
        while self.accept("*"):
            result = result * self.factor()
        return -result if negate else result

    def exponent(self) -> int:
        if self.tok.kind == "op" and self.tok.text == "-":
            raise self._error("negative exponents are not allowed", cls=NegativeExponent)
        if self.tok.kind != "num":
            raise self._error("expected a nonnegative integer exponent")
        return int(self.advance().text)

    def factor(self) -> Polynomial:
        tok = self.tok
        if tok.kind == "num":
            self.advance()
            value = Fraction(int(tok.text))
            if self.accept("/"):
                if self.tok.kind != "num":
                    raise self._error("expected an integer denominator")
                den_tok = self.advance()
                if int(den_tok.text) == 0:
                    raise self._error("zero denominator", den_tok)
                value /= int(den_tok.text)
            return self.ring.const(value)
        if tok.kind == "name":
            self.advance()
            if tok.text not in self.ring.names:
                raise self._error(f"unknown variable {tok.text!r}", tok, UnknownVariable)
            result = self.ring.var(tok.text)
            if self.accept("^"):
                result = pow_(result, self.exponent())
            return result
        if self.accept("("):
            result = self.expr()
            self.expect(")")
            if self.accept("^"):
                result = pow_(result, self.exponent())
            return result
        found = tok.text or "end of input"
        raise self._error(f"unexpected {found!r}")


def parse_polynomial(text: str, variables: Sequence[str] | Ring) -> Polynomial:
    """Parse ``text`` into a polynomial over the given ordered variables."""
    ring = variables if isinstance(variables, Ring) else Ring(variables)
    return _Parser(text, ring).parse()


def parse_map(text: str, variables: Sequence[str] | Ring) -> List[Polynomial]:
    """Parse ';'-separated components, e.g. ``"x^2; y^3"``."""
    ring = variables if isinstance(variables, Ring) else Ring(variables)
    return [parse_polynomial(part, ring) for part in text.split(";")]
