"""Recursive-descent parser for λ-algebra and q-series expressions.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := ("+" | "-") factor | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | "N" INT | "q" | "(" expr ")"

Rationals are written ``p/q``.  In q-series mode a divisor must be
invertible over the roots of unity of bounded order (typically products of
``1 - q^k``); anything else raises :class:`UnsupportedDenominator`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ExprSyntaxError, UnsupportedDenominator
from .lambda_ring import DEFAULT_DEGREE, SymFunc
from .qseries import QRat

_TOKEN = re.compile(r"\s*(?:(\d+)|(N)|(q)|([-+*/^()]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[start]!r}", text, start,
                                  ("number", "N<k>", "q", "operator", "parenthesis"))
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("N", "N", start))
        elif m.group(3):
            tokens.append(("q", "q", start))
        else:
            tokens.append(("op", m.group(4), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, kind: str, deg: int, max_root: int | None):
        self.text = text
        self.kind = kind
        self.deg = deg
        self.max_root = max_root
        self.tokens = _tokenize(text)
        self.i = 0

    # token helpers

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, expected) -> None:
        tok = self.peek()
        raise ExprSyntaxError(message, self.text, tok[2], expected)

    def accept(self, op: str) -> bool:
        tok = self.peek()
        if tok[0] == "op" and tok[1] == op:
            self.i += 1
            return True
        return False

    # values

    def const(self, c):
        if self.kind == "sym":
            return SymFunc.const(c, self.deg)
        return QRat({0: c}, (), self.deg, self.max_root)

    def lift(self, s: SymFunc):
        return s if self.kind == "sym" else QRat({0: s}, (), self.deg, self.max_root)

    # grammar

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression", ("expression",))
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input", ("operator", "end of input"))
        return value

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            if self.accept("*"):
                value = value * self.factor()
            elif self.accept("/"):
                pos = self.peek()[2]
                value = self.divide(value, self.factor(), pos)
            else:
                return value

    def divide(self, a, b, pos: int):
        if self.kind == "sym":
            if not b.is_constant() or not b.augment():
                raise ExprSyntaxError("division by a non-constant or zero symmetric function",
                                      self.text, pos, ("nonzero rational",))
            return a.scale(1 / b.augment())
        if not b:
            raise ExprSyntaxError("division by zero", self.text, pos, ("nonzero divisor",))
        try:
            return a / b
        except UnsupportedDenominator as exc:
            raise UnsupportedDenominator(f"{exc} (divisor at position {pos})") from None

    def factor(self):
        if self.accept("-"):
            return -self.factor()
        if self.accept("+"):
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        if not self.accept("^"):
            return base
        negative = self.accept("-")
        tok = self.peek()
        if tok[0] != "int":
            self.fail("exponent must be an integer", ("integer",))
        self.take()
        n = int(tok[1])
        if not negative:
            return base ** n
        if self.kind == "sym":
            raise ExprSyntaxError("negative powers are not allowed in symmetric functions",
                                  self.text, tok[2], ("non-negative integer",))
        if not base:
            raise ExprSyntaxError("zero raised to a negative power", self.text, tok[2], ())
        return self.divide(self.const(1), base ** n, tok[2])

    def atom(self):
        tok = self.peek()
        kind, val, pos = tok
        if kind == "int":
            self.take()
            return self.const(int(val))
        if kind == "N":
            self.take()
            nxt = self.peek()
            if nxt[0] != "int" or nxt[2] != pos + 1:
                self.fail("generator needs an index, as in N1", ("generator index",))
            self.take()
            k = int(nxt[1])
            if k < 1:
                raise ExprSyntaxError("generator index must be positive", self.text, nxt[2],
                                      ("positive integer",))
            return self.lift(SymFunc.gen(k, self.deg))
        if kind == "q":
            if self.kind == "sym":
                self.fail("the variable q is not allowed in a symmetric function",
                          ("number", "N<k>", "("))
            self.take()
            return QRat({1: 1}, (), self.deg, self.max_root)
        if self.accept("("):
            value = self.expr()
            if not self.accept(")"):
                self.fail("missing closing parenthesis", (")",))
            return value
        expected = ("number", "N<k>", "(") if self.kind == "sym" else ("number", "N<k>", "q", "(")
        self.fail("unexpected end of input" if kind == "end" else f"unexpected token {val!r}", expected)


def parse_input(text: str, kind: str = "qrat", deg: int = DEFAULT_DEGREE,
                max_root: int | None = None):
    """Parse ``text`` into a SymFunc (``kind="sym"``) or a QRat (``kind="qrat"``)."""
    if kind not in ("sym", "qrat"):
        raise ValueError(f"unknown kind {kind!r}")
    return _Parser(text, kind, deg, max_root).parse()
