"""``coeffbound`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Iterable, Sequence

import numpy as np

from . import experiments, landau, verification
from .functional_bounds import bound_minus, bound_plus, combined_bound, newman_bound, shapiro_C
from .interpolation import extend_weights

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class WeightParseError(UsageError):
    def __init__(self, msg: str, line: int, col: int, source: str = "<inline>"):
        super().__init__(f"{source}:{line}:{col}: {msg}")
        self.line, self.col = line, col


# ---------------------------------------------------------------- parsing

def _precision(text: str) -> int:
    p = int(text)
    if not 1 <= p <= 17:
        raise argparse.ArgumentTypeError("precision must be in [1, 17]")
    return p


def _parse_tokens(text: str, source: str) -> list[complex]:
    """Complex numbers separated by commas and/or whitespace; ``#`` starts a comment."""
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        col = 0
        for raw in body.replace(",", " ").split(" "):
            start = col + 1
            col += len(raw) + 1
            if not raw.strip():
                continue
            try:
                values.append(complex(raw.strip().replace("i", "j")))
            except ValueError:
                raise WeightParseError(f"cannot parse {raw.strip()!r} as a number",
                                       lineno, start, source) from None
    if not values:
        raise WeightParseError("no weights given", 1, 1, source)
    return values


def read_weights(inline: str | None, path: str | None) -> np.ndarray:
    if (inline is None) == (path is None):
        raise UsageError("give exactly one of --t and --t-file")
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        return np.array(_parse_tokens(text, path), dtype=complex)
    return np.array(_parse_tokens(inline, "<inline>"), dtype=complex)


# ---------------------------------------------------------------- output

def fmt(x: float, precision: int) -> str:
    return f"{x:.{precision}f}"


class Output:
    def __init__(self, path: str | None):
        self.path = path

    def write(self, text: str) -> None:
        if not text.endswith("\n"):
            text += "\n"
        if self.path in (None, "-"):
            sys.stdout.write(text)
            return
        try:
            with open(self.path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {self.path}: {exc.strerror}") from None


def to_csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def to_json(obj) -> str:
    return json.dumps(obj, indent=2)


def grid_svg(cells: list[experiments.GridCell]) -> str:
    """Static dot grid: ``d`` across, ``n`` up; improved cells drawn as dots."""
    dmax = max(c.d for c in cells)
    step, pad = 8, 40
    width = pad * 2 + step * dmax
    height = pad * 2 + step * dmax
    shade = {"open": "#000000", "newman_known": "#707070", "trivial": "#c0c0c0"}

    def xy(d, n):
        return pad + step * d, height - pad - step * n

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    x0, y0 = xy(0, 0)
    x1, y1 = xy(dmax, dmax)
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>')
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>')
    for t in range(0, dmax + 1, 10):
        x, _ = xy(t, 0)
        _, y = xy(0, t)
        out.append(f'<text x="{x}" y="{y0 + 15}" font-size="9" text-anchor="middle">{t}</text>')
        out.append(f'<text x="{x0 - 6}" y="{y + 3}" font-size="9" text-anchor="end">{t}</text>')
    out.append(f'<text x="{(x0 + x1) // 2}" y="{height - 8}" font-size="11" text-anchor="middle">d</text>')
    out.append(f'<text x="12" y="{(y0 + y1) // 2}" font-size="11">n</text>')
    for c in cells:
        if c.improved:
            x, y = xy(c.d, c.n)
            out.append(f'<circle cx="{x}" cy="{y}" r="2.5" fill="{shade[c.classification]}"/>')
    out.append("</svg>")
    return "\n".join(out)


# ---------------------------------------------------------------- commands

def cmd_landau(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    b = landau.landau_bound(args.n)
    frac = b.value_exact
    if args.format == "json":
        args.out.write(to_json({"n": args.n, "numerator": frac.numerator,
                                "denominator": frac.denominator, "value": b.value_float}))
    else:
        args.out.write(f"{frac.numerator}/{frac.denominator} = {fmt(b.value_float, args.precision)}")
    return EXIT_OK


def cmd_newman(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    v = newman_bound(args.n)
    args.out.write(to_json({"n": args.n, "value": v}) if args.format == "json"
                   else fmt(v, args.precision))
    return EXIT_OK


def cmd_shapiro_c(args) -> int:
    if not 0 <= args.n < args.d:
        raise UsageError("need 0 <= n < d")
    v = shapiro_C(args.n, args.d)
    args.out.write(to_json({"n": args.n, "d": args.d, "value": v}) if args.format == "json"
                   else fmt(v, args.precision))
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.d < 1:
        raise UsageError("--d must be >= 1")
    t = read_weights(args.t, args.t_file)
    if args.combined:
        if args.sign or args.n is not None:
            raise UsageError("--combined excludes --sign and --n")
        if t.size > args.d:
            raise UsageError(f"got {t.size} weights for dimension d = {args.d}")
        full = np.zeros(args.d, dtype=complex)
        full[: t.size] = t
        cert = combined_bound(full)
    else:
        if not args.sign or args.n is None:
            raise UsageError("give --combined, or both --sign and --n")
        n = args.n
        if n < 1:
            raise UsageError("--n must be >= 1")
        if t.size == n:
            t_half = t
        elif t.size == args.d:
            # a full vector must have the matching (anti-)periodic structure
            t_half = t[:n]
            if np.abs(extend_weights(t_half, args.d, args.sign) - t).max() > 1e-12 * max(1.0, np.abs(t).max()):
                raise UsageError(f"weights are not {'anti-' if args.sign == 'plus' else ''}periodic "
                                 f"with the period required by --sign {args.sign} --n {n}")
        else:
            raise UsageError(f"expected {n} (half) or {args.d} (full) weights, got {t.size}")
        fn = bound_plus if args.sign == "plus" else bound_minus
        try:
            cert = fn(t_half, args.d)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    args.out.write(to_json(cert.to_dict()))
    return EXIT_OK


def _grid_cells(args):
    if args.dmax < 2:
        raise UsageError("--dmax must be >= 2")
    return experiments.figure1_grid(args.dmax, jobs=args.jobs)


def cmd_grid(args) -> int:
    cells = _grid_cells(args)
    p = args.precision
    if args.format == "svg":
        text = grid_svg(cells)
    elif args.format == "json":
        text = to_json([{"d": c.d, "n": c.n, "shapiro_c": c.C, "landau": c.L,
                         "improved": c.improved, "classification": c.classification}
                        for c in cells])
    else:
        text = to_csv(["d", "n", "C", "L", "improved", "classification"],
                      [[c.d, c.n, fmt(c.C, p), fmt(c.L, p), str(c.improved).lower(), c.classification]
                       for c in cells])
    args.out.write(text)
    return EXIT_OK


def cmd_taylor(args) -> int:
    if args.n < 0 or args.m < 0:
        raise UsageError("--n and --m must be >= 0")
    try:
        table = landau.taylor_f_n(args.n, args.m, exact=args.exact)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for nu, b in enumerate(table.coeffs):
        row = {"nu": nu, "b": float(b)}
        if table.exact is not None:
            q = table.exact[nu]
            row["exact"] = f"{q.numerator}/{q.denominator}"
        rows.append(row)
    if args.format == "json":
        args.out.write(to_json({"n": args.n, "m": args.m, "coefficients": rows}))
    else:
        header = ["nu", "b"] + (["exact"] if args.exact else [])
        args.out.write(to_csv(header, [[r["nu"], fmt(r["b"], args.precision)]
                                       + ([r["exact"]] if args.exact else []) for r in rows]))
    return EXIT_OK


def cmd_roots(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    table = experiments.fig2_table(args.n)
    if args.format == "json":
        args.out.write(to_json([{"modulus": r.modulus, "phase_deg": r.phase_deg,
                                 "zero_modulus": r.zero_modulus} for r in table]))
    else:
        p = args.precision
        args.out.write(to_csv(["modulus", "phase_deg", "zero_modulus"],
                              [[fmt(r.modulus, p), fmt(r.phase_deg, p), fmt(r.zero_modulus, p)]
                               for r in table]))
    return EXIT_OK


def cmd_converge(args) -> int:
    ds = [int(x) for x in args.d.split(",") if x.strip()]
    if args.n < 1 or not ds or min(ds) <= args.n:
        raise UsageError("need n >= 1 and every d > n")
    rows = experiments.thm21_convergence(args.n, ds)
    if args.format == "json":
        args.out.write(to_json([{"d": r.d, "ratio": r.ratio, "gap": r.gap, "envelope": r.envelope}
                                for r in rows]))
    else:
        p = args.precision
        args.out.write(to_csv(["d", "ratio", "gap", "envelope"],
                              [[r.d, fmt(r.ratio, p), f"{r.gap:.{p}e}", f"{r.envelope:.{p}e}"]
                               for r in rows]))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        results = verification.run_suites(args.suite)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    ok = all(r.passed for r in results)
    if args.format == "json":
        args.out.write(to_json({"passed": ok, "suites": [r.to_dict() for r in results]}))
    else:
        lines = [f"{r.name}: {'pass' if r.passed else 'FAIL'}  max_residual={r.max_residual:.3e}  "
                 f"checked={r.checked}" for r in results]
        first = next((r for r in results if not r.passed), None)
        if first is not None:
            lines.append("counterexample: " + json.dumps({"suite": first.name, **first.counterexample}))
        args.out.write("\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- parser

def _default_jobs() -> int:
    raw = os.environ.get("COEFFBOUND_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_precision, default=12,
                        help="decimal digits in text and CSV output (1-17, default 12)")
    common.add_argument("--output", "-o", default=None, help="output file (default: stdout)")

    parser = argparse.ArgumentParser(prog="coeffbound",
                                     description="Sharp coefficient-sum bounds for polynomials on the unit disk.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, formats, default, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--format", choices=formats, default=default)
        p.set_defaults(func=func)
        return p

    p = add("landau", cmd_landau, ["text", "json"], "text", "exact Landau bound L_n")
    p.add_argument("--n", type=int, required=True)

    p = add("newman", cmd_newman, ["text", "json"], "text", "Newman's bound for n")
    p.add_argument("--n", type=int, required=True)

    p = add("shapiro-c", cmd_shapiro_c, ["text", "json"], "text", "combined bound C_{n,d}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("bound", cmd_bound, ["json"], "json", "bound for a general weight vector")
    p.add_argument("--t", help="inline weights, e.g. '1,1,0' or '1+2j 0.5'")
    p.add_argument("--t-file", help="file of weights (commas or whitespace, '#' comments)")
    p.add_argument("--d", type=int, required=True, help="polynomials of degree < d")
    p.add_argument("--sign", choices=["plus", "minus"])
    p.add_argument("--n", type=int, help="half-period for --sign")
    p.add_argument("--combined", action="store_true", help="use the combined (non-sharp) bound")

    p = add("grid", cmd_grid, ["csv", "json", "svg"], "csv", "C_{n,d} against L_n for all n < d <= dmax")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="worker processes (default: $COEFFBOUND_JOBS or 1)")

    p = add("taylor", cmd_taylor, ["csv", "json"], "csv", "Taylor coefficients of f_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=20, help="number of coefficients (default 20)")
    p.add_argument("--exact", action="store_true", help="also print exact rationals (m <= 200)")

    p = add("roots", cmd_roots, ["csv", "json"], "csv", "poles of f_n (roots of P_n)")
    p.add_argument("--n", type=int, required=True)

    p = add("converge", cmd_converge, ["csv", "json"], "csv", "head-sum ratio of the near-extremal truncation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", default="10,20,50,100,200", help="comma-separated degrees")

    p = add("verify", cmd_verify, ["text", "json"], "text", "run identity suites")
    p.add_argument("--suite", nargs="+", default=["all"],
                   help=f"suites to run: all or any of {', '.join(verification.SUITES)}")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.out = Output(args.output)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"coeffbound {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
