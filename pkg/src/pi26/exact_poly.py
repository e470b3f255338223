"""Exact-rational interpolation of pi(10^x) at x = 1..n.

Everything here is Fraction/int arithmetic. The polynomial is built in
Newton form over the consecutive nodes and then expanded into monomial
coefficients by repeated multiplication with (x - x_j).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .table import PrimeCountTable


@dataclass(frozen=True)
class RationalPolynomial:
    coeffs: tuple[Fraction, ...]  # coeffs[i] multiplies x**i
    fit_n: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        return eval_poly(self, x)


def divided_differences(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Newton coefficients f[x_0], f[x_0,x_1], ..., f[x_0..x_{n-1}]."""
    col = [Fraction(y) for y in ys]
    out = [col[0]]
    for k in range(1, len(xs)):
        col = [(col[i + 1] - col[i]) / (xs[i + k] - xs[i]) for i in range(len(col) - 1)]
        out.append(col[0])
    return out


def newton_to_monomial(xs: Sequence[int], newton: Sequence[Fraction]) -> list[Fraction]:
    # Horner on the Newton form, with polynomials as coefficient lists
    poly = [Fraction(newton[-1])]
    for k in range(len(newton) - 2, -1, -1):
        shifted = [Fraction(0)] + poly  # x * poly
        for i, c in enumerate(poly):
            shifted[i] -= xs[k] * c
        shifted[0] += newton[k]
        poly = shifted
    return poly


def _check_n(n: int, lo: int, hi: int) -> None:
    if not lo <= n <= hi:
        raise ValueError(f"n must be in {lo}..{hi}, got {n}")


def fit_polynomial(table: PrimeCountTable, n: int) -> RationalPolynomial:
    _check_n(n, 1, 25)
    xs = list(range(1, n + 1))
    ys = [table[x] for x in xs]
    coeffs = newton_to_monomial(xs, divided_differences(xs, ys))
    return RationalPolynomial(tuple(coeffs), fit_n=n)


def eval_poly(p: RationalPolynomial, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def forward_differences(ys: Sequence[int]) -> list[int]:
    """Leading forward differences Delta^k y_0 for k = 0..len(ys)-1."""
    row = list(ys)
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


def extrapolate_next(table: PrimeCountTable, n: int) -> int:
    """P_n(n+1) as an exact integer, via Newton's forward-difference formula."""
    _check_n(n, 1, 24)
    diffs = forward_differences([table[x] for x in range(1, n + 1)])
    return sum(comb(n, k) * d for k, d in enumerate(diffs))
