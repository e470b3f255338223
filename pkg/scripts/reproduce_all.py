"""Regenerate every table, figure dataset and the conjecture range into one directory.

    python scripts/reproduce_all.py [outdir]
"""

import sys
from pathlib import Path

from pi26.cli import main

COMMANDS = [
    ("table.csv", ["table"]),
    ("polynomials_25.csv", ["poly", "--n", "25"]),
    ("phi25_exact.csv", ["phi"]),
    ("phi25_50digit.csv", ["phi", "--working-digits", "50"]),
    ("delta.csv", ["delta"]),
    ("delta_prime.csv", ["delta-prime"]),
    ("conjecture.csv", ["conjecture"]),
    ("approx_24.csv", ["approx", "--n", "24"]),
    ("approx_25.csv", ["approx", "--n", "25"]),
    ("approx_26.csv", ["approx", "--n", "26"]),
    ("verify.jsonl", ["verify", "--format", "json"]),
]


def run(outdir: Path) -> int:
    outdir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for name, argv in COMMANDS:
        fmt = [] if "--format" in argv else ["--format", "csv"]
        path = outdir / name
        with open(path, "w", encoding="utf-8", newline="") as fh:
            stdout, sys.stdout = sys.stdout, fh
            try:
                code = main(fmt + argv)
            finally:
                sys.stdout = stdout
        print(f"{code}  {path}")
        worst = max(worst, code)
    main(["--out", str(outdir), "figures"])
    return worst


if __name__ == "__main__":
    sys.exit(run(Path(sys.argv[1] if len(sys.argv) > 1 else "out")))
