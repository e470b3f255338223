"""Loaders for the bundled reference values (fitted coefficients, relative differences, range integers)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from importlib import resources


def _rows(name: str) -> list[list[str]]:
    text = resources.files("pi26.data").joinpath(name).read_text("utf-8")
    return [line.split("\t") for line in text.splitlines() if line.strip() and not line.startswith("#")]


@lru_cache(maxsize=None)
def polynomials() -> dict[int, tuple[Fraction, ...]]:
    """n -> monomial coefficients (constant term first)."""
    out: dict[int, dict[int, Fraction]] = {}
    for n, i, c in _rows("polynomials.tsv"):
        out.setdefault(int(n), {})[int(i)] = Fraction(c)
    return {n: tuple(cs[i] for i in range(len(cs))) for n, cs in out.items()}


@lru_cache(maxsize=None)
def phi25_coefficients() -> dict[str, str]:
    """Printed decimals keyed c1..c22, K."""
    return {k: v for k, v in _rows("phi25_folded.tsv")}


@lru_cache(maxsize=None)
def psi_coefficients() -> dict[str, str]:
    """Printed decimals keyed d1..d4, M."""
    return {k: v for k, v in _rows("psi_folded.tsv")}


@lru_cache(maxsize=None)
def delta_prime_table() -> dict[int, str]:
    return {int(m): v for m, v in _rows("delta_prime.tsv")}


@lru_cache(maxsize=None)
def approximations() -> list[dict]:
    return [
        {"n": int(n), "estimator": w, "rounded": int(r), "delta_double_prime": None if d == "-" else d}
        for n, w, r, d in _rows("approximations.tsv")
    ]


@lru_cache(maxsize=None)
def conjecture_integers() -> dict[str, str]:
    return {k: v for k, v in _rows("conjecture_integers.tsv")}
