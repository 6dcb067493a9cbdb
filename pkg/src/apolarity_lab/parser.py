"""Recursive-descent reader for polynomial text.

Accepts sums, products, integer powers, parentheses, rational literals,
division by nonzero constants and the imaginary unit written ``i``.  A
numeric literal directly followed by ``i`` is an imaginary literal, and in
that position ``a/b i`` reads as (a/b)*i, so ``(1/2+3/4i)`` means
1/2 + 3/4*i.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomial import Poly, VariableFrame
from .scalars import GaussianRational

__all__ = ["PolySyntaxError", "UnknownVariableError", "parse_poly"]


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}: {text!r}")


class UnknownVariableError(PolySyntaxError):
    pass


_NUMBER = re.compile(r"(\d+)(?:\s*/\s*(\d+)(?=\s*i(?![A-Za-z0-9_])))?(\s*i(?![A-Za-z0-9_]))?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            m = _NUMBER.match(text, pos)
            num, den, imag = m.groups()
            value = Fraction(int(num), int(den) if den else 1)
            if den and int(den) == 0:
                raise PolySyntaxError("zero denominator", text, pos)
            toks.append(("num", GaussianRational(0, value) if imag else GaussianRational(value), pos))
            pos = m.end()
            continue
        if ch.isalpha() or ch == "_":
            m = _IDENT.match(text, pos)
            toks.append(("id", m.group(), pos))
            pos = m.end()
            continue
        if ch in "+-*/^()":
            toks.append((ch, ch, pos))
            pos += 1
            continue
        raise PolySyntaxError(f"unexpected character {ch!r}", text, pos)
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, frame: VariableFrame):
        self.text = text
        self.frame = frame
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", self.text, tok[2])
        self.i += 1
        return tok

    def error(self, msg):
        raise PolySyntaxError(msg, self.text, self.peek()[2])

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty input")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if q.degree() > 0:
                    raise PolySyntaxError("division by a non-constant", self.text, pos)
                if q.is_zero():
                    raise PolySyntaxError("division by zero", self.text, pos)
                p = p / q.coefficient((0,) * self.frame.n)
        return p

    def unary(self) -> Poly:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, val, pos = self.peek()
            if kind != "num" or not val.is_real() or val.re.denominator != 1:
                raise PolySyntaxError("exponent must be a nonnegative integer", self.text, pos)
            self.take()
            return base ** int(val.re)
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return Poly.constant(self.frame, val)
        if kind == "id":
            self.take()
            if val == "i":
                return Poly.constant(self.frame, GaussianRational(0, 1))
            if val not in self.frame.variables:
                raise UnknownVariableError(f"unknown variable {val!r} for frame {self.frame}", self.text, pos)
            return Poly.var(self.frame, val)
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        what = "end of input" if kind == "end" else repr(val)
        self.error(f"unexpected {what}")


def parse_poly(text: str, frame: VariableFrame) -> Poly:
    """Parse polynomial text in the given frame.

    >>> from apolarity_lab.polynomial import X
    >>> str(parse_poly("(x1+x2)*(x1-x2)", X(2)))
    'x1^2 - x2^2'
    """
    return _Parser(text, frame).parse()
