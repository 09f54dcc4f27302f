"""Text grammar for polynomials, operators, and rational points.

Terms joined by + and -; a term is coeff, mono, or coeff*mono; a coeff is
int or int/int; a mono is var^exp factors joined by *, exponents any
integer.  Whitespace is insignificant.  Operators use the same grammar
with variables d<name>.  Printing in canonical graded-lex order followed
by parsing is the identity on canonical forms.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .diffops import DiffOp
from .poly import LaurentPoly


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^]))")


def _tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            if src[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {src[pos:].strip()[0]!r}", pos)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src, varnames):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0
        self.vars = {name: i for i, name in enumerate(varnames)}

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_int(self, what):
        kind, value, pos = self.next()
        if kind != "int":
            raise ParseError(f"expected {what}", pos)
        return value

    def parse(self):
        arity = len(self.vars)
        total = LaurentPoly.zero(arity)
        sign = 1
        kind, value, pos = self.peek()
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            self.next()
        while True:
            total = total + self.term(sign)
            kind, value, pos = self.next()
            if kind == "end":
                return total
            if kind != "op" or value not in "+-":
                raise ParseError("expected '+' or '-' between terms", pos)
            sign = -1 if value == "-" else 1

    def term(self, sign):
        arity = len(self.vars)
        coeff = Fraction(sign)
        expo = [0] * arity
        while True:
            kind, value, pos = self.next()
            if kind == "int":
                num = value
                if self.peek()[0] == "op" and self.peek()[1] == "/":
                    self.next()
                    den = self.expect_int("a denominator")
                    if den == 0:
                        raise ParseError("zero denominator", pos)
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
            elif kind == "name":
                if value not in self.vars:
                    raise ParseError(f"unknown variable {value!r}", pos)
                power = 1
                if self.peek()[0] == "op" and self.peek()[1] == "^":
                    self.next()
                    power = self.exponent()
                expo[self.vars[value]] += power
            else:
                raise ParseError("expected a coefficient or a variable", pos)
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.next()
                continue
            return LaurentPoly(arity, {tuple(expo): coeff})

    def exponent(self):
        kind, value, pos = self.peek()
        neg = False
        if kind == "op" and value == "-":
            self.next()
            neg = True
        value = self.expect_int("an integer exponent")
        return -value if neg else value


def parse_poly(src, varnames):
    """Parse a polynomial in the given ordered variables; exact, no floats."""
    varnames = list(varnames)
    if len(set(varnames)) != len(varnames):
        raise ValueError("variable names must be unique")
    return _Parser(src, varnames).parse()


def parse_operator(src, varnames):
    """Parse an operator expression over variables d<name> into a DiffOp."""
    symbol = parse_poly(src, ["d" + name for name in varnames])
    return DiffOp(symbol)


def parse_fraction(src):
    src = src.strip()
    if not re.fullmatch(r"-?\d+(/\d+)?", src):
        raise ValueError(f"not an exact fraction: {src!r}")
    return Fraction(src)


def parse_point(src):
    """Parse "(a,b,...)" with exact fraction components."""
    src = src.strip()
    if src.startswith("(") and src.endswith(")"):
        src = src[1:-1]
    return tuple(parse_fraction(part) for part in src.split(","))


def parse_generators(src):
    """Parse a semicolon-separated list of points."""
    return [parse_point(part) for part in src.split(";") if part.strip()]
