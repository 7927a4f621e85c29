"""hypersum command line: eval, verify, table, cf.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings

from . import contfrac as cf
from . import elliptic_core as ec
from . import identities
from . import jacobi_fourier as jf
from .errors import ConvergenceError, DomainError
from .qseries import eta_product

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
TOL_ENV = "HYPERSUM_TOL"

CSV_COLUMNS = ("id", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
               "abs_residual", "rel_residual", "tol_abs", "tol_rel", "pass", "terms_used")

_JACOBI = ("sn", "cn", "dn", "cd", "sd", "nd")
_CONSTANTS = ("q", "k", "kprime", "K", "Kprime", "E", "alpha", "mu", "mu_corrected", "eta")
EVAL_FUNCTIONS = _JACOBI + tuple(n for n in jf.FOURIER_NAMES if n not in _JACOBI) + _CONSTANTS


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage().strip()}\n{self.prog}: error: {message}")


def _real(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _real_list(text):
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("empty list")
    return [_real(p) for p in parts]


def _complex(text):
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def build_parser():
    parser = _Parser(prog="hypersum", description="Hyperbolic sums, q-series and elliptic-function identities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a function at r (and an argument)")
    p.add_argument("fn", choices=EVAL_FUNCTIONS)
    p.add_argument("--r", type=_real, required=True)
    p.add_argument("--theta", help="argument, e.g. K/2, iKprime, 0.3K, -K+2iKprime/3")
    p.add_argument("--u", help="argument (alias of --theta)")

    p = sub.add_parser("verify", help="run identity checks")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true")
    group.add_argument("--id", dest="ident")
    p.add_argument("--r", type=_real_list, required=True, help="comma separated r values")
    p.add_argument("--tol", type=_real)
    p.add_argument("--output", choices=("human", "json", "csv"), default="human")

    sub.add_parser("table", help="print the special-value table")

    p = sub.add_parser("cf", help="evaluate the continued fraction u0(a, q)")
    p.add_argument("--a", type=_complex, required=True)
    p.add_argument("--q", type=_real, required=True)
    p.add_argument("--depth", type=int, default=cf.DEPTH_CAP)
    return parser


def _fmt(z):
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.16g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.16g}{sign}{abs(z.imag):.16g}i"


def _default_tol():
    text = os.environ.get(TOL_ENV)
    if text is None or text == "":
        return None
    try:
        tol = float(text)
    except ValueError:
        raise UsageError(f"{TOL_ENV}={text!r} is not a number") from None
    if not tol > 0:
        raise UsageError(f"{TOL_ENV} must be positive")
    return tol


def _argument(text, ctx):
    try:
        return jf.parse_lattice(text, ctx)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _eval(args, out):
    ctx = ec.context_from_r(args.r)
    if args.fn in _CONSTANTS:
        values = {"q": ctx.q, "k": ctx.k, "kprime": ctx.kprime, "K": ctx.bigK,
                  "Kprime": ctx.bigKprime, "E": ctx.bigE, "alpha": ctx.alpha}
        if args.fn in values:
            value = values[args.fn]
        elif args.fn == "mu":
            value = ec.mu(args.r)
        elif args.fn == "mu_corrected":
            value = ec.mu_corrected(args.r)
        else:
            value = eta_product(ctx.q)
        print(_fmt(value), file=out)
        return EXIT_OK
    text = args.theta if args.theta is not None else args.u
    if text is None:
        raise UsageError(f"eval {args.fn} needs --theta or --u")
    u = _argument(text, ctx)
    if args.fn in _JACOBI:
        value = getattr(jf, args.fn)(ctx, u)
    elif args.fn == "cd1":
        value = jf.cd1_any(ctx, u)
    elif args.fn == "ss":
        value = jf.ss(ctx, u)
    else:
        value = jf.fourier_fn(args.fn, ctx, u)
    print(_fmt(value), file=out)
    return EXIT_OK


def _num(v):
    return "" if v is None or (isinstance(v, float) and math.isnan(v)) else repr(v)


def _write_reports(reports, mode, out):
    if mode == "json":
        for rep in reports:
            out.write(json.dumps(rep.to_dict(), allow_nan=False) + "\n")
    elif mode == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rep in reports:
            d = rep.to_dict()
            writer.writerow([d["id"], json.dumps(d["params"]),
                             _num(d["lhs"]["re"]), _num(d["lhs"]["im"]),
                             _num(d["rhs"]["re"]), _num(d["rhs"]["im"]),
                             _num(d["abs_residual"]), _num(d["rel_residual"]),
                             repr(d["tol"]["abs"]), repr(d["tol"]["rel"]),
                             "true" if d["pass"] else "false",
                             "" if d["terms_used"] is None else d["terms_used"]])
        out.write(buf.getvalue())
    else:
        for rep in reports:
            status = "PASS" if rep.passed else "FAIL"
            params = ", ".join(f"{k}={v}" for k, v in rep.params.items()) or "-"
            line = (f"{status}  {rep.id:<18} {params:<28} lhs={_fmt(rep.lhs)}  rhs={_fmt(rep.rhs)}"
                    f"  abs={rep.abs_residual:.3e}  rel={rep.rel_residual:.3e}")
            if rep.error:
                line += f"  error: {rep.error}"
            if rep.erratum and not rep.passed:
                line += f"  [erratum: {rep.erratum}]"
            out.write(line + "\n")
        failed = sum(not rep.passed for rep in reports)
        out.write(f"{len(reports) - failed}/{len(reports)} passed\n")


def _verify(args, out):
    tol = args.tol if args.tol is not None else _default_tol()
    if tol is not None and not tol > 0:
        raise UsageError("--tol must be positive")
    if any(not r > 0 for r in args.r):
        raise DomainError("every r must be positive")
    if args.ident is not None:
        if args.ident not in identities.CATALOG:
            raise UsageError(f"unknown identity id {args.ident!r}; known: {', '.join(identities.identity_ids())}")
        reports = identities.verify_all(args.r, tol, ids=[args.ident])
    else:
        reports = identities.verify_all(args.r, tol)
    _write_reports(reports, args.output, out)
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_FAIL


def table_rows():
    """(label, value) pairs of the special-value table."""
    c1 = ec.context_from_r(1.0)
    rows = [
        ("sum n/(e^{2 pi n}-1)", identities.verify("eq7", {}).lhs.real),
        ("1/24 - 1/(8 pi)", 1 / 24 - 1 / (8 * math.pi)),
        ("sum_odd n/(e^{pi n}-1)", identities.verify("eq17", {}).lhs.real),
        ("-1/24 + 16 pi/Gamma(-1/4)^4", -1 / 24 + 16 * math.pi / ec.gamma_minus_quarter_4th()),
        ("Gamma(1/4)", ec.gamma_quarter()),
        ("alpha(4)", ec.context_from_r(4.0).alpha),
        ("1 + 4 sum (-1)^n/(e^{(2n+1) pi}-1)", identities.verify("cor1", {"r": 1.0}).lhs.real),
        ("2K/pi at r=1", 2 * c1.bigK / math.pi),
        ("sum (-1)^n/sinh((n+1/2) pi)", identities.verify("thm8", {"r": 1.0}).lhs.real),
        ("K k/pi at r=1", c1.bigK * c1.k / math.pi),
        ("cd1(q, iK') at r=1, closed form", jf.cd1_special(c1, "iK'")),
        ("cd1(q, iK') at r=1, q-product route", jf.cd1(c1, 1j * c1.bigKprime).real),
    ]
    return rows


def _table(args, out):
    rows = table_rows()
    width = max(len(label) for label, _ in rows)
    for label, value in rows:
        out.write(f"{label:<{width}}  {_fmt(value)}\n")
    return EXIT_OK


def _cf(args, out):
    if args.depth < 1:
        raise UsageError("--depth must be >= 1")
    value, state = cf.u0_cf(args.a, args.q, depth_cap=args.depth, return_state=True)
    out.write(f"u0        {_fmt(value)}\n")
    out.write(f"depth     {state.depth}\n")
    out.write(f"delta     {state.delta:.3e}\n")
    if abs(args.a) < 1:
        prod = cf.u0_product(args.a, args.q)
        out.write(f"product   {_fmt(prod)}\n")
        out.write(f"residual  {abs(value - prod):.3e}\n")
    return EXIT_OK


_COMMANDS = {"eval": _eval, "verify": _verify, "table": _table, "cf": _cf}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ConvergenceError, ArithmeticError) as exc:
        print(f"hypersum: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def run():
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed the pipe (e.g. `| head`); not an error of ours
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = EXIT_OK
    sys.exit(code)


if __name__ == "__main__":
    run()
