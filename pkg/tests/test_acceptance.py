"""Acceptance criteria, one marker per criterion.

The terminal summary prints a PASS/FAIL line per criterion (see conftest).
Criteria 2 and 6 are known to fail against the bundled reference values;
README.md explains why. They are left failing rather than loosened.
"""

import random
import time
from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest

from pi26 import analytic, golden, pipeline
from pi26.exact_poly import eval_poly, extrapolate_next, fit_polynomial
from pi26.precision import round_half_away
from pi26.render import last_place, parse_decimal, sci
from pi26.table import sieve_pi
from pi26.thiele import (
    BreakdownError,
    PoleError,
    eval_folded,
    eval_thiele,
    fit_thiele,
    folded_coefficients,
)

crit = pytest.mark.criterion


def _clear_caches():
    for f in (pipeline._deltas, pipeline.corrective_phi, pipeline.delta_series):
        f.cache_clear()


def _within(actual, printed: str, unit: Decimal, units: int) -> bool:
    a = Fraction(actual) if not isinstance(actual, Fraction) else actual
    return abs(a - Fraction(parse_decimal(printed))) <= units * Fraction(unit)


@crit(1, "exact interpolating polynomials P_2..P_25")
def test_c1_polynomials(table):
    _clear_caches()
    t0 = time.perf_counter()
    fitted = {n: fit_polynomial(table, n).coeffs for n in range(2, 26)}
    elapsed = time.perf_counter() - t0
    assert fitted == golden.polynomials()
    assert fitted[2] == (-17, 21)
    assert fitted[4][-1] == Fraction(398, 3)
    assert fitted[25][0] == 11356590626799451081145
    assert elapsed < 5


@crit(2, "reconstruction identity for every 1 <= x <= n <= 24")
def test_c2_reconstruction_sweep(table):
    _clear_caches()
    t0 = time.perf_counter()
    wrong = [(x, n, got) for n in range(1, 25) for x in range(1, n + 1)
             if (got := pipeline.reconstruct(table, x, n)) != table[x + 1]]
    elapsed = time.perf_counter() - t0
    assert elapsed < 30
    assert not wrong, f"{len(wrong)} of 300 pairs differ, e.g. (x, n, got) = {wrong[:3]}"


@crit(3, "folded Phi_25 coefficients")
def test_c3_phi25(table):
    _clear_caches()
    t0 = time.perf_counter()
    exact_cs, _ = folded_coefficients(pipeline.corrective_phi(table, 25))
    cs, K = folded_coefficients(pipeline.corrective_phi(table, 25, digits=50))
    elapsed = time.perf_counter() - t0
    assert exact_cs[0] == Fraction(61, 84)
    values = {f"c{i}": v for i, v in enumerate(cs, 1)} | {"K": K}
    printed = golden.phi25_coefficients()
    assert len(printed) == 23
    bad = [name for name, s in printed.items() if not _within(values[name], s, last_place(s), 2)]
    assert not bad
    assert elapsed < 5


@crit(4, "corrected relative differences delta'_5..delta'_25")
def test_c4_delta_prime(table):
    dp = pipeline.delta_series(table).delta_prime
    got = {m: sci(v, 6) for m, v in dp.items()}
    assert len(got) == 21
    assert got == golden.delta_prime_table()
    assert got[10] == "-8.04909e-3"
    assert got[25] == "1.34117e-8"


@crit(5, "corrected extrapolations at n = 25 and n = 24")
def test_c5_extrapolations(table):
    assert pipeline.extrapolate_corrected(table, 25) == 1699246738822618041025224
    assert pipeline.extrapolate_corrected(table, 24) == 176846307027334692763889


@crit(6, "signed psi fit coefficients and |psi_26|")
def test_c6_psi(table):
    ds, M = folded_coefficients(pipeline.fit_psi(pipeline.delta_series(table).delta_prime))
    values = {f"d{i}": v for i, v in enumerate(ds, 1)} | {"M": M}
    bad = []
    for name, s in golden.psi_coefficients().items():
        unit = Decimal(1).scaleb(parse_decimal(s).adjusted() - 44)  # 45th significant digit
        if not _within(values[name], s, unit, 2):
            bad.append(f"{name}: printed {s}, fitted {sci(values[name], 20)}")
    psi26 = sci(pipeline.psi_estimate(table), 6)
    if psi26 != "7.07767e-9":
        bad.append(f"|psi_26|: printed 7.07767e-9, fitted {psi26}")
    assert not bad, "; ".join(bad)


@crit(7, "offsets and range bounds from (center, 7e-9, 7.1e-9)")
def test_c7_ranges():
    g = golden.conjecture_integers()
    r = pipeline.conjecture_range(int(g["center_25"]), Fraction("7e-9"), Fraction("7.1e-9"))
    assert r.offset_high == 12064651845640588
    assert r.offset_low == 11894727171758326
    for key in ("symmetric_low", "symmetric_high", "onesided_low", "onesided_high"):
        assert getattr(r, key) == int(g[key]), key


@crit(8, "x/log x, Li and R at 10^24..10^26")
def test_c8_approximations(table):
    t0 = time.perf_counter()
    for row in golden.approximations():
        n, w = row["n"], row["estimator"]
        v = round_half_away(analytic.estimate(n, w, digits=60))
        assert v == row["rounded"], (n, w)
        if row["delta_double_prime"] is not None:
            assert sci(Fraction(table[n] - v, table[n]), 6) == row["delta_double_prime"], (n, w)
    for n in (24, 25, 26):
        assert round_half_away(analytic.estimate(n, "refined", digits=60)) == \
            round_half_away(analytic.estimate(n, "r", digits=60))
    assert time.perf_counter() - t0 < 120


@crit(9, "Li(10^26) and R(10^26) inside the one-sided range")
def test_c9_range_membership():
    lo, hi = 1699246750717345212783550, 1699246750887269886665812
    for w in ("li", "r"):
        assert lo <= round_half_away(analytic.estimate(26, w)) <= hi, w


@crit(10, "sieve oracle for the table")
def test_c10_sieve(table):
    t0 = time.perf_counter()
    for n in range(1, 9):
        assert sieve_pi(10**n, oracle_limit=10**8) == table[n], n
    assert time.perf_counter() - t0 < 60


@crit(10, "li series against quadrature")
@pytest.mark.parametrize("x", [2, 10**3, 10**12])
def test_c10_li_dual_oracle(x):
    digits = analytic.DEFAULT_DIGITS
    s = analytic.li(x, digits).value
    q = analytic.li_quadrature(x, digits)
    with mpmath.workdps(digits + 10):
        assert abs(s - q) <= abs(q) * mpmath.mpf(10) ** (5 - digits)


@crit(10, "forward differences against direct evaluation")
def test_c10_forward_differences(table):
    for n in range(1, 25):
        assert extrapolate_next(table, n) == eval_poly(fit_polynomial(table, n), n + 1), n


def _random_points(rng, k):
    xs = set()
    while len(xs) < k:
        xs.add(Fraction(rng.randint(-30, 30), rng.randint(1, 9)))
    return [(x, Fraction(rng.randint(-30, 30), rng.randint(1, 9))) for x in sorted(xs, key=lambda _: rng.random())]


@crit(11, "Thiele node exactness on random rational data")
def test_c11_node_exactness():
    rng = random.Random(26)
    fitted = skipped = 0
    while fitted < 200:
        pts = _random_points(rng, rng.randint(2, 8))
        try:
            t = fit_thiele(pts)
        except BreakdownError:
            skipped += 1
            continue
        for x, y in pts:
            try:
                assert eval_thiele(t, x) == y, pts
            except PoleError:
                # the continued fraction is 0/0 at this node; count as breakdown
                skipped += 1
                break
        else:
            fitted += 1
    assert skipped < 200


@crit(11, "fold/unfold equality at random points")
def test_c11_fold_unfold(table):
    t = pipeline.corrective_phi(table, 25)
    cs, K = folded_coefficients(t)
    rng = random.Random(1229)
    done = 0
    while done < 1000:
        x = Fraction(rng.randint(-10**4, 10**4), rng.randint(1, 100))
        try:
            a = eval_thiele(t, x)
        except PoleError:
            continue
        assert eval_folded(cs, K, t.nodes, x) == a, x
        done += 1


@crit(11, "rounded approximation integers stable when precision doubles")
@pytest.mark.parametrize("which", ["pnt", "li", "r", "refined"])
def test_c11_precision_doubling(which):
    for n in (24, 25, 26):
        assert round_half_away(analytic.estimate(n, which, digits=60)) == \
            round_half_away(analytic.estimate(n, which, digits=120)), n
