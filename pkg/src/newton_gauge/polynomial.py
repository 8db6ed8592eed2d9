"""Dense integer polynomials in one variable: parsing, formatting, arithmetic.

A polynomial is stored as a tuple of arbitrary-precision coefficients
indexed by exponent, ``a_0 + a_1*x + ... + a_n*x^n``; the leading
coefficient is nonzero, and the zero polynomial is the empty tuple
(degree -1).  Values are immutable and all operations are pure.

Text grammar (EBNF)::

    expression := term (('+' | '-') term)*
    term       := factor (('*' factor) | factor)*
    factor     := '-' factor | atom ('^' nat)?
    atom       := integer | 'x' | '(' expression ')'

The second alternative inside ``term`` is juxtaposition: a '*' may be
omitted before ``x`` or ``(``, so ``2x^3`` and ``(x-1)(x+1)`` parse.
Juxtaposition of two integer literals ("2 3") is a syntax error.  The
canonical formatter emits descending powers with no spaces, writes ``*``
only between an integer coefficient and ``x`` ("2*x^3"), and omits unit
coefficients and the exponent 1, so ``parse(format(f)) == f``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .valuation import validate_prime

__all__ = [
    "Polynomial",
    "AnalysisInput",
    "ParseError",
    "InvalidInputError",
    "parse_polynomial",
    "format_polynomial",
    "multiply",
    "content_and_primitive",
]

# Dense storage makes x^k cost O(k) memory; cap parsed exponents so a CLI
# typo cannot allocate gigabytes.
MAX_PARSED_EXPONENT = 10**6


class ParseError(ValueError):
    """Syntax error in polynomial text, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvalidInputError(ValueError):
    """An analysis input violates the analyzer's preconditions."""


class Polynomial:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        return cls((0,) * exponent + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return multiply(self, other)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact convolution product of two polynomials."""
    if f.is_zero or g.is_zero:
        return Polynomial()
    a, b = f.coeffs, g.coeffs
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return Polynomial(out)


def content_and_primitive(f: Polynomial) -> tuple[int, Polynomial]:
    """Split f into (positive content, primitive part) with f == content * primitive."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no content")
    content = 0
    for c in f.coeffs:
        content = math.gcd(content, c)
    return content, Polynomial(c // content for c in f.coeffs)


# ---------------------------------------------------------------------------
# Parsing

_TOK_INT = "int"
_TOK_X = "x"
_TOK_OP = "op"
_TOK_END = "end"


def _tokenize(text: str) -> list[tuple[str, Union[int, str], int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((_TOK_INT, int(text[i:j]), i))
            i = j
        elif ch == "x":
            tokens.append((_TOK_X, "x", i))
            i += 1
        elif ch in "+-*^()":
            tokens.append((_TOK_OP, ch, i))
            i += 1
        elif ch.isalpha():
            raise ParseError(f"unknown variable {ch!r} (only 'x' is allowed)", i)
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append((_TOK_END, "", n))
    return tokens


class _Parser:
    """Recursive-descent parser for the grammar in the module docstring."""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, Union[int, str], int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, Union[int, str], int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        poly = self.expression()
        kind, value, at = self.peek()
        if kind != _TOK_END:
            raise ParseError(f"unexpected {value!r}", at)
        return poly

    def expression(self) -> Polynomial:
        poly = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == _TOK_OP and value in "+-":
                self.advance()
                rhs = self.term()
                poly = poly + rhs if value == "+" else poly - rhs
            else:
                return poly

    def term(self) -> Polynomial:
        poly = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == _TOK_OP and value == "*":
                self.advance()
                poly = poly * self.factor()
            elif kind == _TOK_X or (kind == _TOK_OP and value == "("):
                # Juxtaposition: implicit multiplication before 'x' or '('.
                poly = poly * self.factor()
            else:
                return poly

    def factor(self) -> Polynomial:
        kind, value, _ = self.peek()
        if kind == _TOK_OP and value == "-":
            self.advance()
            return -self.factor()
        poly = self.atom()
        kind2, value2, _ = self.peek()
        if kind2 == _TOK_OP and value2 == "^":
            self.advance()
            return poly ** self.exponent()
        return poly

    def atom(self) -> Polynomial:
        kind, value, at = self.advance()
        if kind == _TOK_INT:
            return Polynomial.constant(value)
        if kind == _TOK_X:
            return Polynomial.monomial(1, 1)
        if kind == _TOK_OP and value == "(":
            poly = self.expression()
            kind2, value2, at2 = self.advance()
            if not (kind2 == _TOK_OP and value2 == ")"):
                raise ParseError("expected ')'", at2)
            return poly
        if kind == _TOK_END:
            raise ParseError("unexpected end of input", at)
        raise ParseError(f"unexpected {value!r}", at)

    def exponent(self) -> int:
        kind, value, at = self.advance()
        if kind == _TOK_OP and value == "-":
            raise ParseError("exponent must be a non-negative integer", at)
        if kind != _TOK_INT:
            raise ParseError("expected an integer exponent", at)
        if value > MAX_PARSED_EXPONENT:
            raise ParseError(f"exponent {value} exceeds the limit {MAX_PARSED_EXPONENT}", at)
        return value


def parse_polynomial(text: str) -> Polynomial:
    """Parse an integer-polynomial expression in x into its expanded dense form."""
    return _Parser(text).parse()


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form: descending powers, no zero terms, no spaces."""
    if f.is_zero:
        return "0"
    parts = []
    for e in range(f.degree, -1, -1):
        c = f.coeffs[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            xpart = "x" if e == 1 else f"x^{e}"
            body = xpart if mag == 1 else f"{mag}*{xpart}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"-{body}" if c < 0 else f"+{body}")
    return "".join(parts)


@dataclass(frozen=True)
class AnalysisInput:
    """A polynomial together with the prime defining the valuation.

    Validates the analyzer's preconditions on construction: nonzero
    constant and leading terms, degree at least 2, and a prime modulus.
    """

    poly: Polynomial
    prime: int

    def __post_init__(self):
        try:
            is_prime = validate_prime(self.prime)
        except ValueError as exc:
            raise InvalidInputError(str(exc)) from None
        if not is_prime:
            raise InvalidInputError(f"{self.prime} is not prime")
        if self.poly.degree < 2:
            raise InvalidInputError(
                f"polynomial must have degree >= 2, got degree {self.poly.degree}"
            )
        if self.poly.constant_term == 0:
            raise InvalidInputError("polynomial must have a nonzero constant term")

    @property
    def degree(self) -> int:
        return self.poly.degree
