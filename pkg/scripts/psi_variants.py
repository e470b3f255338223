"""Compare the second corrective function fitted to signed and to absolute delta' values.

Prints the folded coefficients of both fits next to the bundled reference
values, and |psi| at n = 25 for each.
"""

from pi26 import golden, load_table
from pi26.pipeline import delta_series, fit_psi
from pi26.render import parse_decimal, sci
from pi26.thiele import eval_thiele, folded_coefficients


def main():
    dp = delta_series(load_table()).delta_prime
    ref = golden.psi_coefficients()
    fits = {}
    for label, absolute in (("signed", False), ("absolute", True)):
        psi = fit_psi(dp, absolute=absolute)
        ds, M = folded_coefficients(psi)
        fits[label] = ({f"d{i}": v for i, v in enumerate(ds, 1)} | {"M": M}, abs(eval_thiele(psi, 25)))
    print(f"{'name':<6}{'reference':>24}{'signed':>24}{'absolute':>24}")
    for name, s in ref.items():
        row = [sci(fits[k][0][name], 12) for k in ("signed", "absolute")]
        print(f"{name:<6}{sci(parse_decimal(s), 12):>24}{row[0]:>24}{row[1]:>24}")
    print(f"{'|psi|':<6}{golden.conjecture_integers()['psi26_abs']:>24}"
          f"{sci(fits['signed'][1], 6):>24}{sci(fits['absolute'][1], 6):>24}")


if __name__ == "__main__":
    main()
