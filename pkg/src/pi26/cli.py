"""Command-line entry point: ``pi26 [global flags] <command> [flags]``.

Exit codes: 0 success / all checks pass, 1 verification failures,
2 configuration or I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import analytic, pipeline
from .exact_poly import fit_polynomial
from .render import fixed, sci
from .table import DEFAULT_ORACLE_LIMIT, TableError, load_table
from .thiele import ThieleError, folded_coefficients

FORMATS = ("human", "csv", "json")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    table_path: str | None = None
    precision_digits: int = analytic.DEFAULT_DIGITS
    oracle_limit: int = DEFAULT_ORACLE_LIMIT
    output_format: str = "human"
    output_dir: Path = Path(".")

    def __post_init__(self):
        if self.precision_digits < 30:
            raise ConfigError("--digits must be at least 30")
        if self.oracle_limit < 10**2:
            raise ConfigError("--oracle-limit must be at least 100")
        if self.output_format not in FORMATS:
            raise ConfigError(f"--format must be one of {FORMATS}")


def _cell(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return "" if v is None else str(v)


def emit(rows: list[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        for r in rows:
            out.write(json.dumps({k: (_cell(v) if isinstance(v, Fraction) else v) for k, v in r.items()}) + "\n")
        return
    if not rows:
        return
    cols = list(rows[0])
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\r\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r[c]) for c in cols])
        return
    widths = {c: max(len(c), *(len(_cell(r[c])) for r in rows)) for c in cols}
    out.write("  ".join(c.ljust(widths[c]) for c in cols).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(_cell(r[c]).ljust(widths[c]) for c in cols).rstrip() + "\n")


def format_polynomial(coeffs) -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mag = str(a.numerator) if a.denominator == 1 else f"({a.numerator}/{a.denominator})"
        var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if a == 1 and i > 0:
            mag = ""
        parts.append((sign, mag + var))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {t}" for s, t in parts[1:])


# commands ---------------------------------------------------------------------


def cmd_table(cfg: RunConfig, args) -> int:
    t = load_table(cfg.table_path)
    emit([{"n": n, "value": v, "source": t.provenance(n)} for n, v in t.items()], cfg.output_format)
    return 0


def cmd_verify(cfg: RunConfig, args) -> int:
    from .verify import run_all

    t = load_table(cfg.table_path)
    log = (lambda g: print(f"# running {g}", file=sys.stderr)) if args.progress else None
    checks = run_all(t, digits=cfg.precision_digits, oracle_limit=cfg.oracle_limit, jmax=args.jmax, progress=log)
    failed_groups = list(dict.fromkeys(c.group for c in checks if not c.passed))
    if cfg.output_format == "human":
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.group:<18} {c.name}"
            if not c.passed:
                line += f"\n      expected {c.expected}\n      actual   {c.actual}"
            print(line)
        groups = list(dict.fromkeys(c.group for c in checks))
        print(f"{len(groups) - len(failed_groups)}/{len(groups)} check groups pass")
        if failed_groups:
            print(f"first failing group: {failed_groups[0]}")
    else:
        emit([c.as_dict() for c in checks], cfg.output_format)
    return 1 if failed_groups else 0


def cmd_poly(cfg: RunConfig, args) -> int:
    p = fit_polynomial(load_table(cfg.table_path), args.n)
    if cfg.output_format == "human":
        print(f"P_{args.n}(x) = {format_polynomial(p.coeffs)}")
    else:
        emit([{"power": i, "coefficient": c} for i, c in enumerate(p.coeffs)], cfg.output_format)
    return 0


def cmd_phi(cfg: RunConfig, args) -> int:
    t = load_table(cfg.table_path)
    digits = args.sub_digits or 50
    phi = pipeline.corrective_phi(t, args.n, digits=args.working_digits)
    cs, K = folded_coefficients(phi)
    rows = [{"name": f"c{i}", "value": fixed(c, digits)} for i, c in enumerate(cs, start=1)]
    rows.append({"name": "K", "value": fixed(K, digits)})
    emit(rows, cfg.output_format)
    return 0


def cmd_delta(cfg: RunConfig, args) -> int:
    d = pipeline.delta_series(load_table(cfg.table_path)).delta
    digits = args.sub_digits or 50
    emit([{"m": m, "delta": fixed(v, digits), "exact": v} for m, v in sorted(d.items())], cfg.output_format)
    return 0


def cmd_delta_prime(cfg: RunConfig, args) -> int:
    dp = pipeline.delta_series(load_table(cfg.table_path)).delta_prime
    digits = args.sub_digits or 6
    emit([{"m": m, "delta_prime": sci(v, digits), "exact": v} for m, v in sorted(dp.items())], cfg.output_format)
    return 0


def cmd_conjecture(cfg: RunConfig, args) -> int:
    t = load_table(cfg.table_path)
    r = pipeline.conjecture(t, Fraction(args.psi_low), Fraction(args.psi_high), offset_form=args.offset_form)
    rows = [
        {"quantity": "center", "value": r.center},
        {"quantity": "psi26_abs", "value": sci(r.psi_abs, 6)},
        {"quantity": "offset_low", "value": r.offset_low},
        {"quantity": "offset_high", "value": r.offset_high},
        {"quantity": "symmetric_low", "value": r.symmetric_low},
        {"quantity": "symmetric_high", "value": r.symmetric_high},
        {"quantity": "onesided_low", "value": r.onesided_low},
        {"quantity": "onesided_high", "value": r.onesided_high},
    ]
    emit(rows, cfg.output_format)
    return 0


def cmd_approx(cfg: RunConfig, args) -> int:
    t = load_table(cfg.table_path)
    which = analytic.ESTIMATORS if args.which == "all" else (args.which,)
    digits = args.sub_digits or cfg.precision_digits
    if digits < 30:
        raise ConfigError("--digits must be at least 30")
    rows = analytic.approx_table((args.n,), which, t, jmax=args.jmax, digits=digits)
    for r in rows:
        d = r["delta_double_prime"]
        r["delta_double_prime"] = "-" if d is None else sci(d, 6)
    emit(rows, cfg.output_format)
    return 0


def cmd_figures(cfg: RunConfig, args) -> int:
    t = load_table(cfg.table_path)
    s = pipeline.delta_series(t)
    digits = args.sub_digits or 50
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    for name, col, data in (
        ("fig2_1.csv", "delta", s.delta),
        ("fig2_2.csv", "abs_delta_prime", {m: abs(v) for m, v in s.delta_prime.items()}),
    ):
        buf = io.StringIO()
        emit([{"m": m, col: sci(v, digits)} for m, v in sorted(data.items())], "csv", buf)
        (cfg.output_dir / name).write_text(buf.getvalue(), encoding="utf-8", newline="")
        print(cfg.output_dir / name)
    return 0


# parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pi26", description=__doc__.splitlines()[0])
    p.add_argument("--table", dest="table_path", help="tab-separated n<TAB>pi(10^n) file overriding the built-in table")
    p.add_argument("--digits", type=int, default=analytic.DEFAULT_DIGITS, help="working precision in decimal digits")
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    p.add_argument("--format", choices=FORMATS, default="human")
    p.add_argument("--out", type=Path, default=Path("."), help="output directory for figure data")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", dest="sub_format", choices=FORMATS)
        sp.add_argument("--digits", dest="sub_digits", type=int)
        sp.add_argument("--out", dest="sub_out", type=Path)
        sp.set_defaults(func=fn)
        return sp

    add("table", cmd_table, "print the pi(10^n) table")
    v = add("verify", cmd_verify, "recompute every reference value and compare")
    v.add_argument("--jmax", type=int, default=analytic.DEFAULT_JMAX)
    v.add_argument("--progress", action="store_true")
    sp = add("poly", cmd_poly, "exact interpolating polynomial P_n")
    sp.add_argument("--n", type=int, required=True)
    sp = add("phi", cmd_phi, "folded coefficients of the corrective function Phi_n")
    sp.add_argument("--n", type=int, default=25)
    sp.add_argument("--working-digits", type=int, default=None,
                    help="fit in fixed-precision decimals instead of exact rationals")
    add("delta", cmd_delta, "relative differences delta_m")
    add("delta-prime", cmd_delta_prime, "corrected relative differences delta'_m")
    sp = add("conjecture", cmd_conjecture, "center value and ranges for pi(10^26)")
    sp.add_argument("--psi-low", default="7e-9")
    sp.add_argument("--psi-high", default="7.1e-9")
    sp.add_argument("--offset-form", choices=("first-order", "exact"), default="first-order")
    sp = add("approx", cmd_approx, "x/log x, Li, R and refined R at 10^n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--which", choices=(*analytic.ESTIMATORS, "all"), default="all")
    sp.add_argument("--jmax", type=int, default=analytic.DEFAULT_JMAX)
    add("figures", cmd_figures, "write fig2_1.csv and fig2_2.csv")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            table_path=args.table_path,
            precision_digits=args.digits,
            oracle_limit=args.oracle_limit,
            output_format=args.sub_format or args.format,
            output_dir=args.sub_out or args.out,
        )
        return args.func(cfg, args)
    except (ConfigError, TableError, ThieleError, OSError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
