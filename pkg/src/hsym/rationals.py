"""Canonical string form for exact rationals: "p/q" in lowest terms, "p" if integral."""

from fractions import Fraction

from .errors import InvalidInput


def format_rat(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rat(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInput(f"not a rational: {s!r}") from e
