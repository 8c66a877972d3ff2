"""Exact rational scalars and their "p/q" string form.

Rationals are `fractions.Fraction` throughout: arbitrary-precision, always
in lowest terms with a positive denominator, so equality is structural.
"""

from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (optionally signed) into a Fraction."""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Format a Fraction as "p/q", or just "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
