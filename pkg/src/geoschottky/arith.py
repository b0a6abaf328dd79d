"""Exact rational scalars.

Everything geometric downstream is decided by exact comparisons on
``fractions.Fraction``; floats appear only in the SVG/CLI layer.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def canonicalize(numerator: int, denominator: int) -> Fraction:
    """Reduced fraction with positive denominator; rejects denominator 0."""
    if denominator == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(numerator, denominator)


def compare(x: Fraction, y: Fraction) -> int:
    """Total order: -1 if x < y, 0 if equal, 1 if x > y."""
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


def _isqrt_exact(n: int) -> int | None:
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_exact(x: Fraction) -> Fraction | None:
    """Exact square root, or None when x is not a perfect rational square.

    Canonical form makes numerator and denominator coprime, so x is a
    square iff both are perfect integer squares.
    """
    if x < 0:
        raise ValueError("sqrt_exact of a negative rational")
    pn = _isqrt_exact(x.numerator)
    if pn is None:
        return None
    pd = _isqrt_exact(x.denominator)
    if pd is None:
        return None
    return Fraction(pn, pd)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", integer, or decimal strings into an exact rational."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    """Canonical "p/q" (or plain integer) string; inverse of parse_rational."""
    return str(x)
