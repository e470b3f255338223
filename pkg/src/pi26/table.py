"""Known values of pi(10^n) and a sieve oracle to check the small ones."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator, Mapping

import numpy as np

MAX_EXPONENT = 25
DEFAULT_ORACLE_LIMIT = 10**8

# the two values printed explicitly alongside the method; a table that disagrees is rejected
ANCHORS = {
    24: 18435599767349200867866,
    25: 176846309399143769411680,
}


class TableError(ValueError):
    pass


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class PrimeCountTable:
    """Immutable map n -> pi(10^n) for n = 1..25."""

    values: tuple[int, ...]
    source: str = "built-in"
    sources: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.values) != MAX_EXPONENT:
            raise TableError(f"expected {MAX_EXPONENT} entries, got {len(self.values)}")
        for n in range(2, MAX_EXPONENT + 1):
            if self.values[n - 1] <= self.values[n - 2]:
                raise TableError(f"values not strictly increasing at exponent {n}")
        for n, v in ANCHORS.items():
            if self.values[n - 1] != v:
                raise TableError(f"entry {n} is {self.values[n - 1]}, expected {v}")

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= MAX_EXPONENT:
            raise KeyError(n)
        return self.values[n - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(range(1, MAX_EXPONENT + 1))

    def __len__(self) -> int:
        return MAX_EXPONENT

    def items(self):
        return [(n, self[n]) for n in self]

    def provenance(self, n: int) -> str:
        return self.sources[n - 1] if self.sources else self.source

    def replace(self, n: int, value: int, *, check: bool = False) -> "PrimeCountTable":
        """Copy with one entry swapped, for fault injection in tests.

        With ``check=False`` the invariants are bypassed so that a corrupted
        table can still be fed to :func:`verify_table`.
        """
        vals = list(self.values)
        vals[n - 1] = value
        if check:
            return PrimeCountTable(tuple(vals), source=f"{self.source} (edited)")
        t = object.__new__(PrimeCountTable)
        object.__setattr__(t, "values", tuple(vals))
        object.__setattr__(t, "source", f"{self.source} (edited)")
        object.__setattr__(t, "sources", ())
        return t


def parse_table(text: str, source: str = "<string>") -> PrimeCountTable:
    entries: dict[int, int] = {}
    sources: dict[int, str] = {}
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise TableError(f"{source}:{lineno}: malformed line {raw!r}")
        try:
            n, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise TableError(f"{source}:{lineno}: malformed line {raw!r}") from None
        if not 1 <= n <= MAX_EXPONENT:
            raise TableError(f"{source}:{lineno}: exponent {n} out of range 1..{MAX_EXPONENT}")
        if n <= last:
            raise TableError(f"{source}:{lineno}: exponents must increase (got {n} after {last})")
        if value < 0:
            raise TableError(f"{source}:{lineno}: negative value")
        if entries and value <= entries[last]:
            raise TableError(f"{source}:{lineno}: non-monotone value for exponent {n}")
        entries[n] = value
        sources[n] = f"{source}:{lineno}"
        last = n
    for n in range(1, MAX_EXPONENT + 1):
        if n not in entries:
            raise TableError(f"{source}: missing exponent {n}")
    return PrimeCountTable(
        tuple(entries[n] for n in range(1, MAX_EXPONENT + 1)),
        source=source,
        sources=tuple(sources[n] for n in range(1, MAX_EXPONENT + 1)),
    )


def load_table(path: str | Path | None = None) -> PrimeCountTable:
    if path is None:
        text = resources.files("pi26.data").joinpath("pi_powers_of_ten.tsv").read_text("utf-8")
        return parse_table(text, source="built-in")
    path = Path(path)
    return parse_table(path.read_text("utf-8"), source=str(path))


def _count_odd_primes_segmented(limit: int, segment: int = 1 << 22) -> int:
    # odd-only segmented sieve; returns the count of odd primes <= limit
    if limit < 3:
        return 0
    root = math.isqrt(limit)
    small = np.ones(root + 1, dtype=bool)
    small[:2] = False
    for p in range(2, math.isqrt(root) + 1):
        if small[p]:
            small[p * p :: p] = False
    base = np.nonzero(small)[0]
    base = base[base > 2]

    count = 0
    lo = 3
    while lo <= limit:
        hi = min(lo + 2 * segment, limit + 1)  # [lo, hi), lo odd
        n_odd = (hi - lo + 1) // 2
        seg = np.ones(n_odd, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            seg[(start - lo) // 2 :: p] = False
        # primes in base are marked composite only from p*p on, so no correction needed
        count += int(seg.sum())
        lo += 2 * n_odd
    return count


def sieve_pi(x: int, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    """Exact number of primes <= x by a segmented sieve of Eratosthenes."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x > oracle_limit:
        raise OracleLimitError(f"{x} exceeds the sieve oracle limit {oracle_limit}")
    if x < 2:
        return 0
    return 1 + _count_odd_primes_segmented(x)


@dataclass
class TableCheck:
    n: int
    expected: int
    actual: int

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class TableReport:
    checks: list[TableCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[int]:
        return [c.n for c in self.checks if not c.passed]


def verify_table(
    table: PrimeCountTable | Mapping[int, int],
    max_n: int,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
) -> TableReport:
    if 10**max_n > oracle_limit:
        raise OracleLimitError(f"10^{max_n} exceeds the sieve oracle limit {oracle_limit}")
    return TableReport([TableCheck(n, table[n], sieve_pi(10**n, oracle_limit)) for n in range(1, max_n + 1)])
