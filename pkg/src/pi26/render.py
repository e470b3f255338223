"""Decimal rendering of exact and high-precision values."""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

import mpmath


def to_decimal(x, digits: int) -> Decimal:
    """Round ``x`` to ``digits`` significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        if isinstance(x, Fraction):
            return Decimal(x.numerator) / Decimal(x.denominator)
        if isinstance(x, int):
            return +Decimal(x)
        if isinstance(x, mpmath.mpf):
            return +Decimal(mpmath.nstr(x, digits + 5, strip_zeros=False, min_fixed=1, max_fixed=0))
        return +Decimal(x)


def fixed(x, digits: int) -> str:
    """Plain positional notation with ``digits`` significant digits."""
    d = to_decimal(x, digits)
    return format(d, "f")


def sci(x, digits: int = 6) -> str:
    """Scientific notation like ``3.10676e-2`` (``digits`` significant digits)."""
    d = to_decimal(x, digits)
    if d == 0:
        return "0"
    sign = "-" if d < 0 else ""
    t = d.copy_abs().as_tuple()
    mant = "".join(map(str, t.digits)).ljust(digits, "0")[:digits]
    exp = t.exponent + len(t.digits) - 1
    body = mant[0] + ("." + mant[1:] if digits > 1 else "")
    return f"{sign}{body}e{exp}"


def parse_decimal(s: str) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 200
        return Decimal(s)


def last_place(s: str) -> Decimal:
    """Unit in the last printed place of a decimal literal such as ``-1.23e-7``."""
    mant, _, exp = s.lower().partition("e")
    decimals = len(mant.split(".")[1]) if "." in mant else 0
    return Decimal(1).scaleb(-decimals + (int(exp) if exp else 0))
