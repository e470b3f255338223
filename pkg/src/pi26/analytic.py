"""Analytic approximations to pi(x) at arbitrary precision.

li(x) is summed from the classical series

    li(x) = gamma + ln ln x + sum_{k>=1} (ln x)^k / (k * k!)      (x > 1)

whose terms are all positive, so there is no cancellation; the error bound
combines the geometric tail estimate with accumulated rounding. mpmath is
used only as the multiprecision float type (and for its quadrature, in the
test oracle :func:`li_quadrature`).
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .precision import HighPrecisionReal, round_half_away
from .table import PrimeCountTable

DEFAULT_DIGITS = 60
DEFAULT_JMAX = 1000
MAX_SERIES_TERMS = 100_000

ESTIMATORS = ("pnt", "li", "r", "refined")


class SeriesError(ArithmeticError):
    pass


def _ctx(digits: int, guard: int = 10):
    if digits < 30:
        raise ValueError("working precision below 30 digits cannot resolve 10^26-scale integers")
    return mpmath.workdps(digits + guard)


def _li_from_log(L, digits: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """li(e^L) and an absolute error bound, for L > 0, in the current context."""
    eps = mpmath.mpf(10) ** (-digits)
    s = mpmath.euler + mpmath.log(L)
    mag = abs(s)
    power = mpmath.mpf(1)  # L^k / k!
    k = 0
    while True:
        k += 1
        power = power * L / k
        term = power / k
        s += term
        mag += term
        if k + 1 > L:
            # tail after k terms: term_{k+1} * 1/(1 - L/(k+2)), ratios are below L/(k+2)
            nxt = power * L / (k + 1) / (k + 1)
            tail = nxt / (1 - L / (k + 2))
            if tail < eps * abs(s) / 10:
                break
        if k > MAX_SERIES_TERMS:
            raise SeriesError(f"li series did not converge for ln x = {L}")
    rounding = 4 * (k + 4) * eps * mag
    return s, tail + rounding


def li(x, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """Principal-value logarithmic integral for x > 1."""
    with _ctx(digits):
        x = mpmath.mpf(x)
        if x <= 1:
            raise ValueError("li is only provided for x > 1")
        L = mpmath.log(x)
        v, err = _li_from_log(L, digits + 10)
        # error of ln x itself propagates through d li / dL = x / L * L = x
        err += x * mpmath.mpf(10) ** (-(digits + 10))
    return HighPrecisionReal(v, digits, err)


def Li_offset(x, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """Li(x) = li(x) - li(2)."""
    a, b = li(x, digits), li(2, digits)
    with _ctx(digits):
        return HighPrecisionReal(a.value - b.value, digits, a.error_bound + b.error_bound)


def li_quadrature(x, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """Independent li(x) by quadrature, for cross-checking the series.

    With t = e^u the principal value splits into regular pieces:
    li(e^L) = int_{-inf}^{-1} e^u/u du + int_{-1}^{L} (e^u - 1)/u du + ln L.
    """
    with mpmath.workdps(digits + 15):
        L = mpmath.log(mpmath.mpf(x))
        a = mpmath.quad(lambda u: mpmath.exp(u) / u, [-mpmath.inf, -40, -10, -1])
        pts = [-1, 0] + [p for p in (1, 4, 16) if p < L] + [L]
        b = mpmath.quad(lambda u: mpmath.expm1(u) / u if u != 0 else mpmath.mpf(1), pts)
        return a + b + mpmath.log(L)


_mu_cache: list[int] = [0, 1]


def mobius_table(limit: int) -> list[int]:
    """mu(0..limit) via a linear sieve on smallest prime factors (mu[0] unused)."""
    mu = [0] * (limit + 1)
    if limit >= 1:
        mu[1] = 1
    spf = [0] * (limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if p > spf[i] or ip > limit:
                break
            spf[ip] = p
            mu[ip] = 0 if p == spf[i] else -mu[i]
    return mu


def mobius(j: int, limit: int = DEFAULT_JMAX, extend: bool = True) -> int:
    global _mu_cache
    if j < 1:
        raise ValueError("mobius is defined for j >= 1")
    if j >= len(_mu_cache):
        if j > limit and not extend:
            raise ValueError(f"j = {j} beyond the sieve bound {limit}")
        _mu_cache = mobius_table(max(limit, 2 * j))
    return _mu_cache[j]


def riemann_R(x, jmax: int = DEFAULT_JMAX, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """R(x) = sum_{j <= jmax} mu(j)/j * li(x^(1/j)), summed in ascending j."""
    mu = mobius_table(jmax)
    with _ctx(digits):
        L = mpmath.log(mpmath.mpf(x))
        if L <= 0:
            raise ValueError("R is only provided for x > 1")
        total = mpmath.mpf(0)
        err = mpmath.exp(L) * mpmath.mpf(10) ** (-(digits + 10))
        for j in range(1, jmax + 1):
            if mu[j] == 0:
                continue
            # li(x^(1/j)) = li(exp(ln x / j))
            v, e = _li_from_log(L / j, digits + 10)
            total += mu[j] * v / j
            err += e / j
        err += jmax * mpmath.mpf(10) ** (-(digits + 10)) * abs(total)
    return HighPrecisionReal(total, digits, err)


def riemann_refined(x, jmax: int = DEFAULT_JMAX, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """R(x) - 1/ln x + arctan(pi/ln x)/pi."""
    r = riemann_R(x, jmax, digits)
    with _ctx(digits):
        L = mpmath.log(mpmath.mpf(x))
        v = r.value - 1 / L + mpmath.atan(mpmath.pi / L) / mpmath.pi
        err = r.error_bound + 4 * mpmath.mpf(10) ** (-(digits + 10))
    return HighPrecisionReal(v, digits, err)


def pnt_value(n: int, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """10^n / ln(10^n)."""
    with _ctx(digits):
        x = mpmath.mpf(10) ** n
        v = x / (n * mpmath.log(10))
        err = abs(v) * mpmath.mpf(10) ** (-(digits + 8))
    return HighPrecisionReal(v, digits, err)


def pnt_estimate(n: int, digits: int = DEFAULT_DIGITS) -> int:
    return round_half_away(pnt_value(n, digits))


def estimate(n: int, which: str, jmax: int = DEFAULT_JMAX, digits: int = DEFAULT_DIGITS) -> HighPrecisionReal:
    """Estimator ``which`` (pnt, li, r, refined) evaluated at 10^n."""
    x = 10**n  # exact int; converted inside each working-precision context
    if which == "pnt":
        return pnt_value(n, digits)
    if which == "li":
        return Li_offset(x, digits)
    if which == "r":
        return riemann_R(x, jmax, digits)
    if which == "refined":
        return riemann_refined(x, jmax, digits)
    raise ValueError(f"unknown estimator {which!r}; expected one of {ESTIMATORS}")


def delta_double_prime(table: PrimeCountTable, n: int, which: str, jmax: int = DEFAULT_JMAX,
                       digits: int = DEFAULT_DIGITS) -> Fraction:
    """(pi(10^n) - Round(f(10^n))) / pi(10^n).

    Exact once the estimate is rounded, so the result is a Fraction.
    """
    if n > 25:
        raise ValueError(f"pi(10^{n}) is not known; use range membership instead")
    true = table[n]
    return Fraction(true - round_half_away(estimate(n, which, jmax, digits)), true)


def approx_table(ns=(24, 25, 26), which=("pnt", "li", "r"), table: PrimeCountTable | None = None,
                 jmax: int = DEFAULT_JMAX, digits: int = DEFAULT_DIGITS) -> list[dict]:
    rows = []
    for n in ns:
        for w in which:
            val = round_half_away(estimate(n, w, jmax, digits))
            rel = None
            if table is not None and n <= 25:
                rel = Fraction(table[n] - val, table[n])
            rows.append({"n": n, "estimator": w, "rounded": val, "delta_double_prime": rel})
    return rows
