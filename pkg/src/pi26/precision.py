"""High-precision reals with an attached error bound, and guarded rounding."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

import mpmath


class PrecisionError(ArithmeticError):
    """Raised when a value is too close to a rounding boundary to round safely."""


@dataclass(frozen=True)
class HighPrecisionReal:
    value: mpmath.mpf
    precision: int  # decimal significant digits the value was computed at
    error_bound: mpmath.mpf  # absolute

    def __float__(self) -> float:
        return float(self.value)

    def round(self) -> int:
        return round_half_away(self)


def _round_exact(q: Fraction) -> int:
    fl = q.numerator // q.denominator
    rem = q - fl
    if rem > Fraction(1, 2) or (rem == Fraction(1, 2) and q > 0):
        return fl + 1
    return fl


def round_half_away(x) -> int:
    """Nearest integer, exact ties away from zero.

    A :class:`HighPrecisionReal` is only rounded when its distance to the
    nearest half-integer exceeds its error bound.
    """
    if isinstance(x, int):
        return x
    if isinstance(x, (Fraction, Decimal)):
        return _round_exact(Fraction(x))
    if isinstance(x, HighPrecisionReal):
        v = x.value
        bits = max(mpmath.mp.prec, v._mpf_[3]) + 64  # at least the value's own mantissa
        with mpmath.workprec(bits):
            fl = mpmath.floor(v)
            gap = abs(v - fl - mpmath.mpf(0.5))
            up = v - fl > mpmath.mpf(0.5)
        if gap <= x.error_bound:
            raise PrecisionError(
                f"value {mpmath.nstr(v, 40)} within {mpmath.nstr(x.error_bound, 3)} of a rounding boundary; "
                "recompute at higher precision"
            )
        return int(fl) + (1 if up else 0)
    raise TypeError(f"cannot round {type(x).__name__} safely")
