"""Polynomial extrapolation with two Thiele corrective functions.

Steps, all in exact rational arithmetic unless noted:

* delta_m = (pi(10^m) - P_{m-1}(m)) / pi(10^m) for m = 3..25
* Phi_k interpolates (m, delta_m) for m = 3..k, nodes in ascending order
* the corrected extrapolation Round(P_n(n+1) / (1 - Phi(n+1)))
* delta'_{n+1}: the relative error of that extrapolation when Phi_n is used
* psi interpolates delta'_{n+1} over n = 20..24, and bounds on psi give the range
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_poly import eval_poly, extrapolate_next, fit_polynomial
from .precision import round_half_away
from .table import PrimeCountTable
from .thiele import ThieleInterpolant, eval_thiele, fit_thiele

PSI_NODES = tuple(range(20, 25))
PAPER_PSI_LOW = Fraction("7e-9")
PAPER_PSI_HIGH = Fraction("7.1e-9")

__all__ = [
    "ConjectureResult",
    "DeltaSeries",
    "compute_delta",
    "compute_delta_prime",
    "conjecture",
    "conjecture_range",
    "corrective_phi",
    "delta_series",
    "extrapolate_corrected",
    "fit_psi",
    "psi_estimate",
    "reconstruct",
    "round_half_away",
]


def _check(name: str, v: int, lo: int, hi: int) -> None:
    if not lo <= v <= hi:
        raise ValueError(f"{name} must be in {lo}..{hi}, got {v}")


def compute_delta(table: PrimeCountTable, n: int) -> Fraction:
    """delta_{n+1}, the relative shortfall of P_n(n+1) against pi(10^(n+1))."""
    _check("n", n, 2, 24)
    true = table[n + 1]
    return Fraction(true - extrapolate_next(table, n), true)


@lru_cache(maxsize=None)
def _deltas(table: PrimeCountTable) -> dict[int, Fraction]:
    return {n + 1: compute_delta(table, n) for n in range(2, 25)}


@lru_cache(maxsize=None)
def corrective_phi(table: PrimeCountTable, k: int, digits: int | None = None) -> ThieleInterpolant:
    """Phi_k: Thiele interpolant of (m, delta_m) for m = 3..k."""
    _check("k", k, 4, 25)
    d = _deltas(table)
    return fit_thiele([(m, d[m]) for m in range(3, k + 1)], digits=digits)


def _predecessor(table: PrimeCountTable, x: int) -> int:
    # P_x(x+1); for x = 1 the interpolant is the constant pi(10)
    return table[1] if x == 1 else extrapolate_next(table, x)


def corrected_quotient(table: PrimeCountTable, x: int, k: int) -> Fraction:
    """P_x(x+1) / (1 - Phi_k(x+1)) before rounding."""
    phi = eval_thiele(corrective_phi(table, k), x + 1)
    return Fraction(_predecessor(table, x)) / (1 - phi)


def reconstruct(table: PrimeCountTable, x: int, n: int) -> int:
    """Round(P_x(x+1) / (1 - Phi_{n+1}(x+1))), with Phi_4 standing in for n <= 3."""
    _check("n", n, 1, 24)
    _check("x", x, 1, n)
    return round_half_away(corrected_quotient(table, x, max(n + 1, 4)))


def extrapolate_corrected(table: PrimeCountTable, n: int) -> int:
    """Round(P_n(n+1) / (1 - Phi_n(n+1))): Phi_n is used one step past its last node."""
    _check("n", n, 4, 25)
    if n == 25:
        # P_25(26) lies past the table, so go through the fitted polynomial
        p = eval_poly(fit_polynomial(table, 25), 26)
    else:
        p = Fraction(extrapolate_next(table, n))
    return round_half_away(p / (1 - eval_thiele(corrective_phi(table, n), n + 1)))


def compute_delta_prime(table: PrimeCountTable, n: int) -> Fraction:
    _check("n", n, 4, 24)
    true = table[n + 1]
    return Fraction(true - extrapolate_corrected(table, n), true)


@dataclass(frozen=True)
class DeltaSeries:
    delta: dict[int, Fraction]  # m = 3..25
    delta_prime: dict[int, Fraction]  # m = 5..25


@lru_cache(maxsize=None)
def delta_series(table: PrimeCountTable) -> DeltaSeries:
    return DeltaSeries(
        delta=dict(_deltas(table)),
        delta_prime={n + 1: compute_delta_prime(table, n) for n in range(4, 25)},
    )


def fit_psi(delta_primes: dict[int, Fraction], *, absolute: bool = False, digits: int | None = None) -> ThieleInterpolant:
    """Thiele fit of delta'_{n+1} against n for n = 20..24.

    Signed values by default; ``absolute=True`` fits |delta'| instead.
    """
    missing = [n + 1 for n in PSI_NODES if n + 1 not in delta_primes]
    if missing:
        raise ValueError(f"delta' values missing for m = {missing}")
    pts = [(n, abs(delta_primes[n + 1]) if absolute else delta_primes[n + 1]) for n in PSI_NODES]
    return fit_thiele(pts, digits=digits)


def psi_estimate(table: PrimeCountTable, *, absolute: bool = False) -> Fraction:
    """|psi_26|: the second corrective function evaluated at n = 25."""
    psi = fit_psi(delta_series(table).delta_prime, absolute=absolute)
    return abs(eval_thiele(psi, 25))


@dataclass(frozen=True)
class ConjectureResult:
    center: int
    psi_abs: Fraction | None
    psi_low: Fraction
    psi_high: Fraction
    offset_low: int
    offset_high: int
    symmetric_low: int
    symmetric_high: int
    onesided_low: int
    onesided_high: int
    offset_form: str = "first-order"


def _offset(center: int, psi: Fraction, form: str) -> int:
    if form == "first-order":
        return round_half_away(center * psi)
    if form == "exact":
        return round_half_away(center * psi / (1 - psi))
    raise ValueError(f"unknown offset form {form!r}")


def conjecture_range(
    center: int,
    psi_low=PAPER_PSI_LOW,
    psi_high=PAPER_PSI_HIGH,
    *,
    psi_abs: Fraction | None = None,
    offset_form: str = "first-order",
) -> ConjectureResult:
    """Symmetric range center +- Round(center*psi_high) and the one-sided range
    [center + Round(center*psi_low), center + Round(center*psi_high)].

    ``offset_form="exact"`` uses center*psi/(1-psi) instead; it differs from the
    first-order form by about center*psi^2 (~1e8 at the default bounds).
    """
    lo, hi = Fraction(psi_low), Fraction(psi_high)
    if not (0 <= lo <= hi < 1):
        raise ValueError(f"need 0 <= psi_low <= psi_high < 1, got {lo}, {hi}")
    off_lo = _offset(center, lo, offset_form)
    off_hi = _offset(center, hi, offset_form)
    return ConjectureResult(
        center=center,
        psi_abs=psi_abs,
        psi_low=lo,
        psi_high=hi,
        offset_low=off_lo,
        offset_high=off_hi,
        symmetric_low=center - off_hi,
        symmetric_high=center + off_hi,
        onesided_low=center + off_lo,
        onesided_high=center + off_hi,
        offset_form=offset_form,
    )


def conjecture(table: PrimeCountTable, psi_low=PAPER_PSI_LOW, psi_high=PAPER_PSI_HIGH, offset_form="first-order"):
    center = extrapolate_corrected(table, 25)
    return conjecture_range(center, psi_low, psi_high, psi_abs=psi_estimate(table), offset_form=offset_form)
