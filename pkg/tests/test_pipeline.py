from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pi26 import golden
from pi26.pipeline import (
    compute_delta,
    compute_delta_prime,
    conjecture,
    conjecture_range,
    corrected_quotient,
    delta_series,
    extrapolate_corrected,
    fit_psi,
    psi_estimate,
    reconstruct,
    round_half_away,
)
from pi26.render import sci

CENTER = 1699246738822618041025224


def test_delta_examples(table):
    assert compute_delta(table, 2) == Fraction(61, 84)
    assert compute_delta(table, 3) == Fraction(796, 1229)


def test_delta_in_unit_interval(table):
    d = delta_series(table).delta
    assert sorted(d) == list(range(3, 26))
    assert all(0 < v < 1 for v in d.values())


@pytest.mark.parametrize("q, expected", [(Fraction(5, 2), 3), (Fraction(61, 84), 1), (Fraction(-7, 3), -2),
                                          (Fraction(-5, 2), -3), (Fraction(1, 2), 1), (Fraction(-1, 2), -1), (7, 7)])
def test_round_half_away(q, expected):
    assert round_half_away(q) == expected


@given(st.fractions(max_denominator=1000))
def test_round_half_away_nearest(q):
    r = round_half_away(q)
    assert abs(q - r) <= Fraction(1, 2)
    assert round_half_away(-q) == -r


def test_reconstruct_examples(table):
    assert reconstruct(table, 3, 24) == 1229
    assert reconstruct(table, 24, 24) == table[25]
    assert reconstruct(table, 3, 3) == 1229  # Phi_4 stands in for n <= 3


def test_phi4_outside_precondition(table):
    # x > n is rejected; the raw Phi_4 quotient at x=5 is far from pi(10^6)
    with pytest.raises(ValueError, match="x must be"):
        reconstruct(table, 5, 3)
    assert round_half_away(corrected_quotient(table, 5, 4)) == 73093
    assert round_half_away(corrected_quotient(table, 5, 6)) == 78498


@pytest.mark.parametrize("n", [4, 10, 24])
def test_quotient_exact_at_phi_nodes(table, n):
    # x+1 in 3..n+1 is a node of Phi_{n+1}, so no rounding is needed there
    for x in range(2, n + 1):
        assert corrected_quotient(table, x, n + 1) == table[x + 1]


def test_reconstruct_range(table):
    with pytest.raises(ValueError):
        reconstruct(table, 5, 4)
    with pytest.raises(ValueError):
        reconstruct(table, 1, 25)


def test_extrapolate_corrected_examples(table):
    assert extrapolate_corrected(table, 25) == CENTER
    assert extrapolate_corrected(table, 24) == 176846307027334692763889


def test_delta_prime_examples(table):
    assert sci(compute_delta_prime(table, 4)) == "3.10676e-2"
    assert sci(compute_delta_prime(table, 20)) == "-3.64154e-7"
    assert sci(compute_delta_prime(table, 24)) == "1.34117e-8"


def test_delta_prime_matches_golden(table):
    dp = delta_series(table).delta_prime
    assert {m: sci(v) for m, v in dp.items()} == golden.delta_prime_table()


def test_psi_first_level_is_delta_prime_21(table):
    dp = delta_series(table).delta_prime
    psi = fit_psi(dp)
    assert psi.levels[0] == dp[21]
    assert len(psi.nodes) == 5


def test_psi_requires_all_nodes():
    with pytest.raises(ValueError, match="missing"):
        fit_psi({21: Fraction(1), 22: Fraction(2)})


def test_psi_estimate_magnitude(table):
    # order of the last few delta' values; the printed 6-digit value is checked in acceptance
    assert Fraction(1, 10**10) < psi_estimate(table) < Fraction(1, 10**7)


def test_conjecture_defaults():
    r = conjecture_range(CENTER)
    assert (r.offset_low, r.offset_high) == (11894727171758326, 12064651845640588)
    assert (r.symmetric_low, r.symmetric_high) == (1699246726757966195384636, 1699246750887269886665812)
    assert (r.onesided_low, r.onesided_high) == (1699246750717345212783550, 1699246750887269886665812)


def test_conjecture_degenerate():
    r = conjecture_range(CENTER, 0, 0)
    assert r.symmetric_low == r.symmetric_high == r.onesided_low == r.onesided_high == CENTER


def test_conjecture_wide():
    r = conjecture_range(CENTER, 0, Fraction(1, 2))
    half = round_half_away(Fraction(CENTER, 2))
    assert (r.symmetric_low, r.symmetric_high) == (CENTER - half, CENTER + half)


def test_exact_offset_form_differs_by_second_order():
    a = conjecture_range(CENTER)
    b = conjecture_range(CENTER, offset_form="exact")
    diff = b.offset_high - a.offset_high
    approx = CENTER * Fraction("7.1e-9") ** 2
    assert abs(diff - approx) < 2


@pytest.mark.parametrize("lo, hi", [(-1, 0), (Fraction(2, 10**9), Fraction(1, 10**9)), (0, 1)])
def test_conjecture_bad_bounds(lo, hi):
    with pytest.raises(ValueError):
        conjecture_range(CENTER, lo, hi)


def test_conjecture_from_table(table):
    r = conjecture(table)
    assert r.center == CENTER
    assert r.onesided_high == 1699246750887269886665812
