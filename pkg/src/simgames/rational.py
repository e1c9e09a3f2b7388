"""Exact rational arithmetic used throughout the solver.

All payoffs, strategy weights and breakpoints are gmpy2 rationals
(arbitrary precision, always stored in lowest terms with a positive
denominator).  Floats are rejected at every parsing boundary: breakpoint
and genericity computations are tie-sensitive and a single rounding
error would corrupt them.
"""

from __future__ import annotations

from gmpy2 import mpq

Rat = mpq

ZERO = mpq(0)
ONE = mpq(1)


def as_rat(value) -> Rat:
    """Coerce an int, "p/q" string or rational to an exact rational."""
    if isinstance(value, mpq):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise ValueError(f"floats are not accepted as exact payoffs: {value!r}")
    raise ValueError(f"not a rational: {value!r}")


def parse_rational(text: str) -> Rat:
    """Parse "p/q" or a plain integer string into an exact rational."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    num, sep, den = text.partition("/")
    try:
        if not sep:
            return mpq(int(num))
        denominator = int(den)
        if denominator == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return mpq(int(num), denominator)
    except ValueError:
        raise
    except Exception as exc:  # int() failures on garbage
        raise ValueError(f"malformed rational {text!r}") from exc


def format_rational(value: Rat) -> str:
    """Render a rational as an explicit "p/q" string (denominator kept)."""
    q = as_rat(value)
    return f"{q.numerator}/{q.denominator}"
