"""Command-line front end.

Matrices are read as JSON ``{"rows": [["-3", "6", "0"], ...]}`` with exact
rational strings, from a path or ``-`` for stdin. Results go to stdout and
diagnostics to stderr. Exit codes: 0 success, 1 computational error,
2 usage or parse error.
"""

import argparse
import json
import sys

import numpy as np

from .closed_form import closed_form, eval_closed_form, markov_limit
from .densemat import Mat
from .errors import DimError, MatpowError, ParseError
from .minpoly import charpoly, minimal_polynomial
from .polynomial import format_poly
from .quotient_pow import PowerMethod, bench_power_methods, bench_to_csv, matrix_power
from .scalar import format_rational, parse_rational

VERIFY_RTOL = 1e-9


def parse_matrix_text(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "rows" not in doc:
        raise ParseError('expected an object with a "rows" key')
    rows = doc["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError('"rows" must be a non-empty list of lists')
    m = len(rows)
    for i, row in enumerate(rows):
        if len(row) != m:
            raise DimError(f"row {i} has {len(row)} entries, expected {m}")
    out = []
    for i, row in enumerate(rows):
        parsed = []
        for j, x in enumerate(row):
            try:
                parsed.append(parse_rational(x))
            except ParseError as exc:
                raise ParseError(f"entry [{i}][{j}]: {exc}") from None
        out.append(parsed)
    return Mat(out)


def parse_matrix(source):
    """Read a matrix from a path, ``-`` (stdin) or an open file object."""
    if hasattr(source, "read"):
        return parse_matrix_text(source.read())
    if source == "-":
        return parse_matrix_text(sys.stdin.read())
    with open(source, encoding="utf-8") as fh:
        return parse_matrix_text(fh.read())


def render_matrix(a):
    return json.dumps({"rows": [[format_rational(x) for x in row] for row in a.rows]})


def _render_float_matrix(arr):
    return "\n".join(" ".join(f"{x:.12g}" for x in row) for row in arr)


def _cmd_minpoly(a, args, out):
    rep = minimal_polynomial(a)
    print(f"q(k) = {format_poly(rep.q)}", file=out)
    print(f"r = {rep.r}", file=out)
    for row in rep.b_hat.leading_rows():
        print(" ".join(format_rational(x) for x in row), file=out)
    return 0


def _cmd_charpoly(a, args, out):
    print(f"delta(k) = {format_poly(charpoly(a))}", file=out)
    return 0


def _cmd_pow(a, args, out):
    print(render_matrix(matrix_power(a, args.n, args.method)), file=out)
    return 0


def _cmd_closed_form(a, args, out):
    print(closed_form(a, args.modulus), file=out)
    return 0


def _cmd_eval(a, args, out):
    print(_render_float_matrix(eval_closed_form(closed_form(a, args.modulus), args.n)), file=out)
    return 0


def verify(a, n_max, modulus="minpoly"):
    """``[(n, ok), ...]`` comparing every exact method and the closed form."""
    cf = closed_form(a, modulus)
    results = []
    for n in range(n_max + 1):
        exact = [matrix_power(a, n, m) for m in PowerMethod]
        ok = all(x == exact[0] for x in exact[1:])
        ref = exact[0].to_numpy()
        err = np.max(np.abs(eval_closed_form(cf, n) - ref))
        ok = ok and err <= VERIFY_RTOL * max(1.0, float(np.max(np.abs(ref))))
        results.append((n, ok))
    return results


def _cmd_verify(a, args, out):
    results = verify(a, args.n_max, args.modulus)
    for n, ok in results:
        print(f"n={n} {'PASS' if ok else 'FAIL'}", file=out)
    return 0 if all(ok for _, ok in results) else 1


def _cmd_markov_limit(a, args, out):
    print(_render_float_matrix(markov_limit(a)), file=out)
    return 0


def _cmd_bench(a, args, out):
    out.write(bench_to_csv(bench_power_methods(a, args.n_list, args.methods)))
    return 0


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _nonneg(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0 or n > 2**63 - 1:
        raise argparse.ArgumentTypeError(f"out of range: {n}")
    return n


def build_parser():
    parser = argparse.ArgumentParser(prog="matpow", description="Exact matrix powers and minimal polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("matrix", nargs="?", default="-", help="JSON matrix file, or - for stdin")
        p.set_defaults(func=func)
        return p

    add("minpoly", _cmd_minpoly, "minimal polynomial and leading rows of the reduced power stack")
    add("charpoly", _cmd_charpoly, "characteristic polynomial")
    p = add("pow", _cmd_pow, "exact A^n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--method", choices=[m.value for m in PowerMethod], default=PowerMethod.VIA_MINPOLY.value)
    for name, func, help_ in (
        ("closed-form", _cmd_closed_form, "A^n as explicit functions of n"),
        ("eval", _cmd_eval, "closed form evaluated numerically at n"),
        ("verify", _cmd_verify, "compare all methods and the closed form for n = 0..K"),
    ):
        p = add(name, func, help_)
        p.add_argument("--modulus", choices=["minpoly", "charpoly"], default="minpoly")
        if name == "eval":
            p.add_argument("--n", type=_nonneg, required=True)
        if name == "verify":
            p.add_argument("--n-max", type=_nonneg, required=True)
    add("markov-limit", _cmd_markov_limit, "limit of A^n for a row-stochastic matrix")
    p = add("bench", _cmd_bench, "time the power methods, CSV output")
    p.add_argument("--n-list", type=_int_list, required=True)
    p.add_argument(
        "--methods",
        type=lambda s: [PowerMethod(x) for x in s.split(",")],
        default=list(PowerMethod),
    )
    return parser


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        a = parse_matrix(args.matrix)
    except (ParseError, DimError, OSError) as exc:
        print(f"matpow: {exc}", file=err)
        return 2
    try:
        return args.func(a, args, out)
    except MatpowError as exc:
        print(f"matpow: {type(exc).__name__}: {exc}", file=err)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
