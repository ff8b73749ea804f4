"""Parsing of counting-function expressions and scheme names.

The expression language covers exactly what counting functions can hold:
sums and differences of rational multiples of rational powers of u.
Every canonically printed CountingFunction parses back to itself.

Grammar (whitespace insignificant)::

    Expr     := ['-'] Term (('+' | '-') Term)*
    Term     := Factor ('*' Factor)*
    Factor   := Base ['^' Exponent]
    Base     := 'u' | NUMBER | '(' Expr ')'
    Exponent := ['-'] NUMBER | '(' ['-'] NUMBER ')'
    NUMBER   := digits ['/' digits]

The bare variable u may carry any rational exponent (so u^(1/2) and
u^-2 are fine); parenthesized or numeric bases only take nonnegative
integer exponents, keeping every expression a finite term map after
expansion.  A Unicode minus sign is accepted as '-'.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import counting as cf
from .catalog import SchemeSpec, gl, gm, gm_tensor, sl, spec_f1
from .counting import CountingFunction
from .errors import ParseError, UnknownSchemeError

#: Expansion cap for powers of non-variable bases.
MAX_COMPOUND_EXPONENT = 512
#: Parenthesis nesting cap (keeps the recursive parser total on any input).
MAX_DEPTH = 64

GRAMMAR = """\
Expr     := ['-'] Term (('+' | '-') Term)*
Term     := Factor ('*' Factor)*
Factor   := Base ['^' Exponent]
Base     := 'u' | NUMBER | '(' Expr ')'
Exponent := ['-'] NUMBER | '(' ['-'] NUMBER ')'
NUMBER   := digits ['/' digits]

The bare variable u may carry any rational exponent; other bases only
take nonnegative integer exponents (at most 512), keeping expansion
finite.  Whitespace is insignificant; a Unicode minus works as '-'.
"""

_MINUS_CHARS = "-−"
_ASCII_DIGITS = "0123456789"


def _is_digit(c: str) -> bool:
    # str.isdigit() accepts Unicode digits (e.g. superscripts) that int()
    # rejects; the grammar means ASCII digits only.
    return c in _ASCII_DIGITS


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num', 'u', '+', '-', '*', '^', '(', ')'
    value: Fraction | None
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c in _MINUS_CHARS:
            tokens.append(_Token("-", None, i))
            i += 1
            continue
        if c in "+*^()":
            tokens.append(_Token(c, None, i))
            i += 1
            continue
        if c == "u":
            tokens.append(_Token("u", None, i))
            i += 1
            continue
        if _is_digit(c):
            start = i
            while i < n and _is_digit(text[i]):
                i += 1
            num = int(text[start:i])
            den = 1
            if i < n and text[i] == "/":
                j = i + 1
                if j >= n or not _is_digit(text[j]):
                    raise ParseError("expected digits after '/'", i + 1)
                i = j
                while i < n and _is_digit(text[i]):
                    i += 1
                den = int(text[j:i])
                if den == 0:
                    raise ParseError("zero denominator in rational literal", start)
            tokens.append(_Token("num", Fraction(num, den), start))
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.depth = 0

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> _Token:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def _expect(self, kind: str) -> _Token:
        tok = self._next()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.kind!r}", tok.offset)
        return tok

    def parse(self) -> CountingFunction:
        if not self.tokens:
            raise ParseError("empty input", 0)
        result = self._expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"unexpected trailing {tok.kind!r}", tok.offset)
        return result

    def _expr(self) -> CountingFunction:
        negate = False
        tok = self._peek()
        if tok is not None and tok.kind == "-":
            self._next()
            negate = True
        total = self._term()
        if negate:
            total = cf.otimes(cf.normalize([(0, -1)]), total)
        while True:
            tok = self._peek()
            if tok is None or tok.kind not in "+-":
                return total
            self._next()
            rhs = self._term()
            if tok.kind == "-":
                rhs = cf.otimes(cf.normalize([(0, -1)]), rhs)
            total = cf.oplus(total, rhs)

    def _term(self) -> CountingFunction:
        product = self._factor()
        while True:
            tok = self._peek()
            if tok is None or tok.kind != "*":
                return product
            self._next()
            product = cf.otimes(product, self._factor())

    def _factor(self) -> CountingFunction:
        base, bare_u = self._base()
        tok = self._peek()
        if tok is None or tok.kind != "^":
            return base
        self._next()
        exponent, exp_offset = self._exponent()
        if bare_u:
            return cf.normalize([(exponent, 1)])
        if exponent.denominator != 1 or exponent < 0:
            raise ParseError(
                "only the bare variable u takes rational or negative exponents",
                exp_offset)
        k = exponent.numerator
        if k > MAX_COMPOUND_EXPONENT:
            raise ParseError(
                f"exponent {k} exceeds the expansion cap {MAX_COMPOUND_EXPONENT}",
                exp_offset)
        if k == 0:
            return cf.ONE
        result = base
        for _ in range(k - 1):
            result = cf.otimes(result, base)
        return result

    def _base(self) -> tuple[CountingFunction, bool]:
        tok = self._next()
        if tok.kind == "u":
            return cf.U, True
        if tok.kind == "num":
            return cf.normalize([(0, tok.value)]), False
        if tok.kind == "(":
            self.depth += 1
            if self.depth > MAX_DEPTH:
                raise ParseError("nesting too deep", tok.offset)
            inner = self._expr()
            self._expect(")")
            self.depth -= 1
            return inner, False
        raise ParseError(f"expected a value, found {tok.kind!r}", tok.offset)

    def _exponent(self) -> tuple[Fraction, int]:
        tok = self._next()
        if tok.kind == "num":
            return tok.value, tok.offset
        if tok.kind == "-":
            num = self._expect("num")
            return -num.value, tok.offset
        if tok.kind == "(":
            sign = 1
            inner = self._next()
            if inner.kind == "-":
                sign = -1
                inner = self._next()
            if inner.kind != "num":
                raise ParseError("expected a rational exponent", inner.offset)
            self._expect(")")
            return sign * inner.value, tok.offset
        raise ParseError("expected an exponent", tok.offset)


def parse_expr(text: str) -> CountingFunction:
    """Parse an expression in u into a canonical counting function."""
    if not isinstance(text, str):
        raise ParseError("expected a string", 0)
    return _Parser(text).parse()


_SCHEME_PATTERNS = (
    (re.compile(r"SpecF1\Z"), lambda m: spec_f1()),
    (re.compile(r"Gm\Z"), lambda m: gm()),
    (re.compile(r"Gm\^(\d+)\Z"), lambda m: gm_tensor(int(m.group(1)))),
    (re.compile(r"SL\((\d+)\)\Z"), lambda m: sl(int(m.group(1)))),
    (re.compile(r"GL\((\d+)\)\Z"), lambda m: gl(int(m.group(1)))),
)


def parse_scheme(text: str) -> SchemeSpec:
    """Parse a scheme name: SpecF1, Gm, Gm^r, SL(r), or GL(r).

    Unknown names raise :class:`UnknownSchemeError`; a recognized name
    with an out-of-range rank raises :class:`ParameterRangeError`.
    """
    if not isinstance(text, str):
        raise UnknownSchemeError("expected a string", 0)
    name = text.strip()
    if not name:
        raise UnknownSchemeError("empty scheme name", 0)
    for pattern, build in _SCHEME_PATTERNS:
        m = pattern.match(name)
        if m:
            return build(m)
    raise UnknownSchemeError(f"unknown scheme name {name!r}", 0)
