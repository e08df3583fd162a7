"""Textual forms for expressions.

Two formats are supported:

* the structured term format used for round-tripping and the atlas export:
  ``rat(c; p0,p1,...; q0,q1,...)`` and ``log(c; l0,l1,...)`` terms joined
  by `` + ``, with exact coefficient literals like ``-3/4`` or ``1/2+1/3 i``;

* a natural formula notation for CLI convenience, e.g. ``z/(1-z+z^2)`` or
  ``z(2-z)/(2(1-z)^2)``, which parses to a single rational term.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .analytic import AnalyticExpr, LogTerm, Poly, RationalTerm
from .numkernel import GaussRational

__all__ = [
    "format_gauss", "parse_gauss", "format_expr", "parse_expr_text",
    "parse_formula", "parse_any",
]


def format_gauss(c: GaussRational) -> str:
    return c.literal()


_REAL_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)$")
_IMAG_RE = re.compile(r"^([+-]?\d+(?:/\d+)?|[+-]?)i$")
_BOTH_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)([+-](?:\d+(?:/\d+)?)?)i$")


def _sign_body(body: str) -> Fraction:
    if body in ("", "+"):
        return Fraction(1)
    if body == "-":
        return Fraction(-1)
    return Fraction(body)


def parse_gauss(text: str) -> GaussRational:
    """Parse literals like ``3``, ``-1/2``, ``i``, ``-i``, ``2/3 i``, ``1/2-1/3 i``."""
    t = "".join(text.split())
    m = _REAL_RE.match(t)
    if m:
        return GaussRational(Fraction(m.group(1)))
    m = _IMAG_RE.match(t)
    if m:
        return GaussRational(0, _sign_body(m.group(1)))
    m = _BOTH_RE.match(t)
    if m:
        return GaussRational(Fraction(m.group(1)), _sign_body(m.group(2)))
    raise ValueError(f"bad exact literal {text!r}")


def _format_poly(p: Poly) -> str:
    if p.is_zero:
        return "0"
    return ",".join(format_gauss(c) for c in p.coeffs)


def _parse_poly(text: str) -> Poly:
    text = text.strip()
    if text == "0":
        return Poly.zero()
    return Poly([parse_gauss(part) for part in text.split(",")])


def format_expr(e: AnalyticExpr) -> str:
    if not e.terms:
        return "rat(0; 0; 1)"
    parts = []
    for t in e.terms:
        if isinstance(t, RationalTerm):
            parts.append(f"rat({format_gauss(t.c)}; {_format_poly(t.num)}; {_format_poly(t.den)})")
        else:
            parts.append(f"log({format_gauss(t.c)}; {_format_poly(t.arg)})")
    return " + ".join(parts)


_TERM_RE = re.compile(r"(rat|log)\(([^()]*)\)")


def parse_expr_text(text: str) -> AnalyticExpr:
    """Parse the structured ``rat(...) + log(...)`` format."""
    terms = []
    consumed = _TERM_RE.sub("", text).replace("+", "").strip()
    if consumed:
        raise ValueError(f"unparsed content in expression text: {consumed!r}")
    for kind, body in _TERM_RE.findall(text):
        fields = [f.strip() for f in body.split(";")]
        if kind == "rat":
            if len(fields) != 3:
                raise ValueError("rat(...) takes three ;-separated fields")
            terms.append(RationalTerm(parse_gauss(fields[0]),
                                      _parse_poly(fields[1]),
                                      _parse_poly(fields[2])))
        else:
            if len(fields) != 2:
                raise ValueError("log(...) takes two ;-separated fields")
            terms.append(LogTerm(parse_gauss(fields[0]), _parse_poly(fields[1])))
    if not terms:
        raise ValueError("no terms found")
    return AnalyticExpr(terms)


# -- natural formula notation -------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([zi()+\-*/^]))")


def _tokenize(text: str):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad character in formula at {text[pos:]!r}")
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1))))
        else:
            tokens.append((m.group(2), None))
        pos = m.end()
    return tokens


class _RatFunc:
    """Unreduced quotient of two polynomials, used only while parsing."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero:
            raise ZeroDivisionError("zero denominator in formula")
        self.num, self.den = num, den

    def __add__(self, o):
        return _RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return _RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return _RatFunc(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        if o.num.is_zero:
            raise ZeroDivisionError("division by zero in formula")
        return _RatFunc(self.num * o.den, self.den * o.num)

    def __neg__(self):
        return _RatFunc(-self.num, self.den)

    def pow(self, k: int):
        out = _RatFunc(Poly.one(), Poly.one())
        for _ in range(k):
            out = out * self
        return out


class _FormulaParser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> _RatFunc:
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError("trailing tokens in formula")
        return value

    def expr(self) -> _RatFunc:
        if self.peek() == "-":
            self.take()
            value = -self.term()
        else:
            if self.peek() == "+":
                self.take()
            value = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> _RatFunc:
        value = self.factor()
        while True:
            nxt = self.peek()
            if nxt in ("*", "/"):
                op, _ = self.take()
                rhs = self.factor()
                value = value * rhs if op == "*" else value / rhs
            elif nxt in ("num", "z", "i", "("):
                value = value * self.factor()  # implicit multiplication
            else:
                return value

    def factor(self) -> _RatFunc:
        value = self.atom()
        if self.peek() == "^":
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be a literal integer")
            value = value.pow(val)
        return value

    def atom(self) -> _RatFunc:
        kind, val = self.take()
        if kind == "num":
            return _RatFunc(Poly((val,)), Poly.one())
        if kind == "z":
            return _RatFunc(Poly.var(), Poly.one())
        if kind == "i":
            return _RatFunc(Poly((GaussRational(0, 1),)), Poly.one())
        if kind == "(":
            value = self.expr()
            if self.peek() != ")":
                raise ValueError("unbalanced parentheses")
            self.take()
            return value
        raise ValueError(f"unexpected token {kind!r}")


def parse_formula(text: str) -> AnalyticExpr:
    """Parse natural notation like ``z(2-z)/(2(1-z)^2)`` into one rational term."""
    rf = _FormulaParser(_tokenize(text)).parse()
    return AnalyticExpr.rational(1, rf.num, rf.den)


def parse_any(text: str) -> AnalyticExpr:
    """Accept either the structured term format or natural formula notation."""
    if "rat(" in text or "log(" in text:
        return parse_expr_text(text)
    return parse_formula(text)
