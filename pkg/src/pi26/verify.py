"""Check groups comparing recomputed values against the bundled reference values."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable

from . import analytic, golden
from .exact_poly import eval_poly, extrapolate_next, fit_polynomial
from .pipeline import (
    PAPER_PSI_HIGH,
    PAPER_PSI_LOW,
    conjecture_range,
    corrective_phi,
    delta_series,
    extrapolate_corrected,
    fit_psi,
    psi_estimate,
    reconstruct,
)
from .precision import round_half_away
from .render import last_place, parse_decimal, sci
from .table import DEFAULT_ORACLE_LIMIT, PrimeCountTable, sieve_pi
from .thiele import folded_coefficients

PHI_DIGITS = 50  # working precision the printed Phi_25 coefficients were produced at
PHI_UNITS = 2  # tolerance in units of the last printed digit
PSI_SIG_DIGIT = 45
PSI_UNITS = 2


@dataclass
class Check:
    group: str
    name: str
    expected: str
    actual: str
    passed: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def _eq(group, name, expected, actual) -> Check:
    return Check(group, name, str(expected), str(actual), expected == actual)


def _within(group, name, printed: str, actual, unit: Decimal, units: int) -> Check:
    with localcontext() as ctx:
        ctx.prec = 200
        a = actual if isinstance(actual, Decimal) else Decimal(actual.numerator) / Decimal(actual.denominator)
        diff = abs(a - parse_decimal(printed))
        ok = diff <= units * unit
        shown = format(+a, "")
    return Check(group, name, printed, shown, bool(ok))


def check_table(table: PrimeCountTable, max_n: int = 8, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> list[Check]:
    max_n = min(max_n, int(math.log10(oracle_limit) + 1e-9))
    return [_eq("table_sieve", f"pi(10^{n})", table[n], sieve_pi(10**n, oracle_limit)) for n in range(1, max_n + 1)]


def check_polynomials(table: PrimeCountTable) -> list[Check]:
    out = []
    for n, coeffs in sorted(golden.polynomials().items()):
        fitted = fit_polynomial(table, n).coeffs
        out.append(Check("polynomials", f"P_{n}", " ".join(map(str, coeffs)), " ".join(map(str, fitted)), fitted == coeffs))
    return out


def check_forward_differences(table: PrimeCountTable) -> list[Check]:
    return [
        _eq("polynomials", f"P_{n}({n + 1}) by forward differences", eval_poly(fit_polynomial(table, n), n + 1), extrapolate_next(table, n))
        for n in range(1, 25)
    ]


def check_reconstruction(table: PrimeCountTable) -> list[Check]:
    return [
        _eq("reconstruction", f"x={x},n={n}", table[x + 1], reconstruct(table, x, n))
        for n in range(1, 25)
        for x in range(1, n + 1)
    ]


def check_phi25(table: PrimeCountTable) -> list[Check]:
    printed = golden.phi25_coefficients()
    exact_cs, _ = folded_coefficients(corrective_phi(table, 25))
    out = [_eq("phi25", "c1 exact", Fraction(61, 84), exact_cs[0])]
    cs, K = folded_coefficients(corrective_phi(table, 25, digits=PHI_DIGITS))
    values = {f"c{i}": v for i, v in enumerate(cs, start=1)} | {"K": K}
    for name, s in printed.items():
        out.append(_within("phi25", name, s, values[name], last_place(s), PHI_UNITS))
    return out


def check_delta_prime(table: PrimeCountTable) -> list[Check]:
    dp = delta_series(table).delta_prime
    printed = golden.delta_prime_table()
    return [_eq("delta_prime", f"delta'_{m}", printed[m], sci(dp[m], 6)) for m in sorted(printed)]


def check_psi(table: PrimeCountTable) -> list[Check]:
    printed = golden.psi_coefficients()
    ds, M = folded_coefficients(fit_psi(delta_series(table).delta_prime))
    values = {f"d{i}": v for i, v in enumerate(ds, start=1)} | {"M": M}
    out = []
    for name, s in printed.items():
        p = parse_decimal(s)
        unit = Decimal(1).scaleb(p.adjusted() - (PSI_SIG_DIGIT - 1))
        out.append(_within("psi", name, s, values[name], unit, PSI_UNITS))
    expected = golden.conjecture_integers()["psi26_abs"]
    out.append(_eq("psi", "|psi_26|", expected, sci(psi_estimate(table), 6)))
    return out


def check_extrapolation(table: PrimeCountTable) -> list[Check]:
    g = golden.conjecture_integers()
    return [
        _eq("extrapolation", "n=25 (center)", int(g["center_25"]), extrapolate_corrected(table, 25)),
        _eq("extrapolation", "n=24", int(g["center_24"]), extrapolate_corrected(table, 24)),
    ]


def check_conjecture(table: PrimeCountTable) -> list[Check]:
    g = golden.conjecture_integers()
    r = conjecture_range(int(g["center_25"]), PAPER_PSI_LOW, PAPER_PSI_HIGH)
    return [
        _eq("conjecture", key, int(g[key]), getattr(r, key))
        for key in ("offset_low", "offset_high", "symmetric_low", "symmetric_high", "onesided_low", "onesided_high")
    ]


def check_approximations(table: PrimeCountTable, digits: int = analytic.DEFAULT_DIGITS,
                 jmax: int = analytic.DEFAULT_JMAX) -> list[Check]:
    out = []
    rounded_r = {}
    for row in golden.approximations():
        n, w = row["n"], row["estimator"]
        val = round_half_away(analytic.estimate(n, w, jmax, digits))
        if w == "r":
            rounded_r[n] = val
        out.append(_eq("approximations", f"Round({w}(10^{n}))", row["rounded"], val))
        if row["delta_double_prime"] is not None:
            rel = Fraction(table[n] - val, table[n])
            out.append(_eq("approximations", f"delta''_{n} {w}", row["delta_double_prime"], sci(rel, 6)))
    for n, r in sorted(rounded_r.items()):
        refined = round_half_away(analytic.estimate(n, "refined", jmax, digits))
        out.append(_eq("approximations", f"Round(refined(10^{n})) == Round(R)", r, refined))
    return out


def check_range_membership(table: PrimeCountTable, digits: int = analytic.DEFAULT_DIGITS,
                           jmax: int = analytic.DEFAULT_JMAX) -> list[Check]:
    g = golden.conjecture_integers()
    lo, hi = int(g["onesided_low"]), int(g["onesided_high"])
    out = []
    for w in ("li", "r"):
        v = round_half_away(analytic.estimate(26, w, jmax, digits))
        out.append(Check("range_membership", f"Round({w}(10^26)) in one-sided range", f"[{lo}, {hi}]", str(v), lo <= v <= hi))
    return out


def run_all(table: PrimeCountTable, *, digits: int = analytic.DEFAULT_DIGITS,
            oracle_limit: int = DEFAULT_ORACLE_LIMIT, jmax: int = analytic.DEFAULT_JMAX,
            progress: Callable[[str], None] | None = None) -> list[Check]:
    groups: list[tuple[str, Callable[[], list[Check]]]] = [
        ("table_sieve", lambda: check_table(table, 8, oracle_limit)),
        ("polynomials", lambda: check_polynomials(table) + check_forward_differences(table)),
        ("reconstruction", lambda: check_reconstruction(table)),
        ("phi25", lambda: check_phi25(table)),
        ("delta_prime", lambda: check_delta_prime(table)),
        ("psi", lambda: check_psi(table)),
        ("extrapolation", lambda: check_extrapolation(table)),
        ("conjecture", lambda: check_conjecture(table)),
        ("approximations", lambda: check_approximations(table, digits, jmax)),
        ("range_membership", lambda: check_range_membership(table, digits, jmax)),
    ]
    out: list[Check] = []
    for name, fn in groups:
        if progress:
            progress(name)
        try:
            out.extend(fn())
        except (ArithmeticError, ValueError) as exc:
            # a corrupted table can make a later stage break down; that is a failure, not a crash
            out.append(Check(name, "error", "", f"{type(exc).__name__}: {exc}", False))
    return out
