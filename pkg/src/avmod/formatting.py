"""Shared canonical-form printing helpers.

Every algebra prints as a signed sum of terms; the parsers invert these
forms exactly, so any change here must keep parse(print(x)) == x.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple


def format_coefficient(c: Fraction) -> str:
    return str(c)


def join_terms(terms: Sequence[Tuple[Fraction, str]]) -> str:
    """Render [(coeff, body), ...] as "a*body1 - b*body2 + ...".

    A body of "1" stands for the unit term; unit coefficients are
    suppressed in front of non-unit bodies.  An empty list prints "0".
    """
    if not terms:
        return "0"
    pieces = []
    for idx, (c, body) in enumerate(terms):
        mag = abs(c)
        if body == "1":
            core = format_coefficient(mag)
        elif mag == 1:
            core = body
        else:
            core = f"{format_coefficient(mag)}*{body}"
        if idx == 0:
            pieces.append(f"-{core}" if c < 0 else core)
        else:
            pieces.append(f" - {core}" if c < 0 else f" + {core}")
    return "".join(pieces)


def format_monomial(exps, var: str = "x") -> str:
    """Render an exponent vector as "x1^2*x3"; the empty product is "1"."""
    factors = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"{var}{i}")
        elif e > 1:
            factors.append(f"{var}{i}^{e}")
    return "*".join(factors) if factors else "1"
