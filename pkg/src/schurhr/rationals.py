"""Exact rational coefficients: canonical form, parsing and formatting.

Coefficients throughout the package are either Python ints or Fractions;
Fractions with denominator 1 are canonicalized to int so the common integer
paths stay fast.  JSON carries rationals as strings like "3", "-2/5".
"""

from fractions import Fraction

Rational = (int, Fraction)


def canon(c):
    """Canonical coefficient: int when the denominator is 1."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return int(c)
    raise TypeError(f"not an exact rational: {c!r}")


def parse_q(s):
    """Parse "n" or "n/d" (also accepts int/Fraction) into canonical form."""
    if isinstance(s, Rational):
        return canon(s)
    if isinstance(s, str):
        return canon(Fraction(s))
    raise TypeError(f"cannot parse rational from {s!r}")


def fmt_q(c):
    """Format a coefficient as "n" or "n/d"."""
    if type(c) is int:
        return str(c)
    return str(Fraction(c))
