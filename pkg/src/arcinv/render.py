"""Exact text rendering of the values that appear in reports.

Rationals render as "p/q" strings and never as floats; machine-format
reports keep the denominator even when it is 1 so that parsing stays
uniform.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def format_rational(value: Fraction | int | float, keep_unit_den: bool = False) -> str:
    if value == math.inf:
        return "infinity"
    value = Fraction(value)
    if value.denominator == 1 and not keep_unit_den:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_multiindex(l: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in l) + ")"
