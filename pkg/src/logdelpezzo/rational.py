"""Exact rationals: parsing and the ``"p/q"`` wire format."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

Rational = Fraction

_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)\s*")


def parse_rational(text) -> Fraction:
    """Parse ``"3/5"``, ``"2"``, ``"-1/3"`` or a sum such as ``"3/5+1/300"``.

    Integers and Fractions pass through.  Floats are refused: nothing in
    this package is allowed to touch binary floating point.
    """
    if isinstance(text, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, float):
        raise TypeError(f"refusing float input {text!r}; pass 'p/q' strings")
    s = str(text).strip()
    if not s:
        raise ValueError("empty rational")
    pos = 0
    total = Fraction(0)
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse rational {text!r}")
        sign, body = m.groups()
        if not sign and not first:
            raise ValueError(f"cannot parse rational {text!r}")
        val = Fraction(body)
        total += -val if sign == "-" else val
        pos = m.end()
        first = False
    return total


def fmt(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def fmt_all(qs: Iterable) -> list[str]:
    return [fmt(q) for q in qs]


def floor_frac(q: Fraction) -> int:
    return q.numerator // q.denominator
