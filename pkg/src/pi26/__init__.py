"""Polynomial and Thiele-continued-fraction extrapolation of pi(10^n), with analytic comparisons."""

from .table import PrimeCountTable, load_table, sieve_pi, verify_table

__version__ = "0.1.0"

__all__ = ["PrimeCountTable", "load_table", "sieve_pi", "verify_table"]
