"""How many digits of the folded Phi_25 coefficients survive fixed-precision arithmetic.

For each working precision the fit is redone in decimals and compared with the
exact rational fit; the column shows the worst count of correct significant
digits over the 23 coefficients.
"""

import argparse
import math
from fractions import Fraction

from pi26 import load_table
from pi26.pipeline import corrective_phi
from pi26.thiele import folded_coefficients


def correct_digits(approx, exact: Fraction) -> float:
    err = abs(Fraction(approx) - exact)
    if err == 0:
        return math.inf
    return -math.log10(err / abs(exact))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--digits", type=int, nargs="+", default=[30, 40, 50, 60, 80, 100])
    args = ap.parse_args()
    table = load_table()
    exact_cs, exact_K = folded_coefficients(corrective_phi(table, 25))
    exact = exact_cs + [exact_K]
    print("working_digits,worst_correct_digits,worst_coefficient")
    for d in args.digits:
        cs, K = folded_coefficients(corrective_phi(table, 25, digits=d))
        scores = [correct_digits(a, e) for a, e in zip(cs + [K], exact)]
        worst = min(range(len(scores)), key=scores.__getitem__)
        name = "K" if worst == len(cs) else f"c{worst + 1}"
        print(f"{d},{scores[worst]:.1f},{name}")


if __name__ == "__main__":
    main()
