"""Exact rational arithmetic and certified enclosures for powers and roots.

Exponents are exact ``fractions.Fraction`` values, which makes floors and
ceilings of a**c decidable: a**(n/d) is compared against integers by
clearing the denominator, entirely in integer arithmetic.  Enclosure
endpoints are dyadic rationals (integer mantissa over a power of two), so
comparisons and midpoints never accumulate rounding error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

Rational = Fraction


def introot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, k >= 1, in exact integer arithmetic."""
    if n < 0:
        raise ValueError("introot requires n >= 0")
    if k == 1 or n in (0, 1):
        return n
    if k == 2:
        return math.isqrt(n)
    # Newton iteration seeded from the bit length; converges from above.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    return x


def dyadic(mantissa: int, scale: int) -> Fraction:
    """The dyadic rational mantissa / 2**scale."""
    if scale >= 0:
        return Fraction(mantissa, 1 << scale)
    return Fraction(mantissa << -scale)


def is_dyadic(q: Fraction) -> bool:
    return q.denominator & (q.denominator - 1) == 0


@dataclass(frozen=True)
class Bracket:
    """A certified enclosure of a real number with dyadic endpoints."""

    lo: Fraction
    hi: Fraction
    closed_lo: bool = True
    closed_hi: bool = True

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("Bracket endpoints out of order")
        if self.lo == self.hi and not (self.closed_lo and self.closed_hi):
            raise ValueError("degenerate Bracket must be closed")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        above = x > self.lo or (self.closed_lo and x == self.lo)
        below = x < self.hi or (self.closed_hi and x == self.hi)
        return above and below

    def __float__(self) -> float:
        return float(self.midpoint())


def pow_floor(a: int, c: Rational) -> int:
    """floor(a ** c) exactly, for integer a >= 1 and rational c >= 1."""
    if a < 1:
        raise ValueError("pow_floor requires a >= 1")
    c = Fraction(c)
    if c < 1:
        raise ValueError("pow_floor requires c >= 1")
    n, d = c.numerator, c.denominator
    return introot(a ** n, d)


def pow_ceil(a: int, c: Rational) -> int:
    """ceil(a ** c) exactly, for integer a >= 1 and rational c >= 1."""
    if a < 1:
        raise ValueError("pow_ceil requires a >= 1")
    c = Fraction(c)
    if c < 1:
        raise ValueError("pow_ceil requires c >= 1")
    n, d = c.numerator, c.denominator
    t = a ** n
    r = introot(t, d)
    return r if r ** d == t else r + 1


def floor_scaled_root(x: int, k: int, scale: int) -> int:
    """floor(2**scale * x**(1/k)) exactly."""
    return introot(x << (k * scale), k)


def _scale_for_width(max_width: Fraction) -> int:
    """Smallest s with 2**-s <= max_width."""
    if max_width <= 0:
        raise ValueError("max_width must be positive")
    s = 0
    w = Fraction(1)
    while w > max_width:
        w /= 2
        s += 1
    return s


def root_enclosure(a: int, big_c: Rational, max_width: Rational) -> Bracket:
    """A Bracket containing a ** (1/C) with width <= max_width.

    Exact roots come back as degenerate closed brackets; otherwise the
    endpoints are outward-rounded dyadics at the coarsest scale meeting
    the width request.
    """
    if a < 1:
        raise ValueError("root_enclosure requires a >= 1")
    big_c = Fraction(big_c)
    if big_c < 1:
        raise ValueError("root_enclosure requires C >= 1")
    n, d = big_c.numerator, big_c.denominator
    # a ** (1/C) = (a**d) ** (1/n)
    t = a ** d
    r = introot(t, n)
    if r ** n == t:
        return Bracket(Fraction(r), Fraction(r))
    s = _scale_for_width(Fraction(max_width))
    m = introot(t << (n * s), n)
    return Bracket(dyadic(m, s), dyadic(m + 1, s))


def floor_pow_rational(q: Rational, c: Rational) -> int:
    """floor(q ** c) exactly for rational q > 0 and rational c >= 1."""
    q = Fraction(q)
    c = Fraction(c)
    if q <= 0:
        raise ValueError("floor_pow_rational requires q > 0")
    if c < 1:
        raise ValueError("floor_pow_rational requires c >= 1")
    n, d = c.numerator, c.denominator
    u = q.numerator ** n
    v = q.denominator ** n
    # Largest m with m**d * v <= u.
    m = introot(u // v, d)
    while (m + 1) ** d * v <= u:
        m += 1
    while m > 0 and m ** d * v > u:
        m -= 1
    return m
