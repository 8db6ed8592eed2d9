"""Exact arithmetic substrate: p-adic valuations of integers, gcd, primality.

Valuations of nonzero integers are plain non-negative ints; the valuation
of 0 is the distinguished :data:`INFINITY` singleton, which compares
greater than every finite valuation.  Slopes built from valuations are
``fractions.Fraction`` values, which are always kept in lowest terms with
a positive denominator, so rational comparisons are exact.

Everything here is a pure function over immutable values and is safe to
call concurrently.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Union

__all__ = [
    "INFINITY",
    "Valuation",
    "Slope",
    "p_adic_valuation",
    "gcd_nonneg",
    "validate_prime",
]

# Exact rational slope; lowest terms and denominator > 0 are guaranteed
# by the Fraction constructor.
Slope = Fraction


@functools.total_ordering
class _Infinity:
    """Valuation of zero.  Greater than every int and equal only to itself."""

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("newton_gauge.INFINITY")

    def __repr__(self):
        return "INFINITY"

    def __add__(self, other):
        return self

    __radd__ = __add__


INFINITY = _Infinity()

Valuation = Union[int, _Infinity]


def p_adic_valuation(n: int, p: int) -> Valuation:
    """Largest exponent e with p**e dividing n; INFINITY for n == 0.

    The caller is responsible for p being prime (see :func:`validate_prime`);
    for composite p the result is merely the divisibility exponent.
    """
    if n == 0:
        return INFINITY
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def gcd_nonneg(a: int, b: int) -> int:
    """Greatest common divisor of |a| and |b|.

    Defined on absolute values so the result is always positive even when
    one argument is a (possibly negative) valuation difference.
    """
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def validate_prime(p: int) -> bool:
    """True iff p is prime, by trial division (fine at desk scale)."""
    if p < 2:
        raise ValueError(f"{p} is not a valid prime candidate (need p >= 2)")
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True
