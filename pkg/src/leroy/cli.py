"""Command-line front end.

Records go to stdout (JSON objects or CSV rows), diagnostics to stderr.
Numbers are written as decimal strings so 30+ digit values survive.

Exit codes: 0 success, 1 selftest failure, 2 invalid flags, 3 evaluation error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

import mpmath

from .asymptotics import classify_regime, estimate_order_type, expand_negative_axis
from .contour import eval_contour_minus, eval_contour_plus
from .errors import LeRoyError
from .laplace import LEMMA, SUITE, WRIGHT, verify_point
from .numerics import PrecisionConfig
from .selftest import SUITES
from .series import Params, eval_series

SCHEMA = "leroy-report/1"
CSV_HEADER = ("t", "F_series", "F_asym", "rel_diff")
DEFAULT_DIGITS = 30

# (alpha, beta, m, t_min, t_max)
FIGURES = {
    1: ("0.6", "0.8", 3, "5", "100"),
    2: ("0.5", "0.75", 4, "5", "100"),
    3: ("0.5", "0.5", 4, "5", "100"),
    4: ("0.7", "1.0", 3, "5", "100"),
    5: ("0.7", "1.0", 3, "100", "2000"),
}

EXIT_OK, EXIT_SELFTEST, EXIT_USAGE, EXIT_EVAL = 0, 1, 2, 3


class UsageError(Exception):
    """Flag values that parse but make no sense together."""


def _decimal(text: str) -> str:
    try:
        Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}") from None
    return text.strip()


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return n


def _default_digits() -> int:
    env = os.environ.get("LEROY_DIGITS")
    if env is None:
        return DEFAULT_DIGITS
    try:
        return _positive_int(env)
    except argparse.ArgumentTypeError:
        raise UsageError(f"LEROY_DIGITS must be a positive integer, got {env!r}") from None


def _value_record(value: Any, digits: int) -> dict:
    v = mpmath.mpmathify(value)
    return {"re": mpmath.nstr(mpmath.re(v), digits), "im": mpmath.nstr(mpmath.im(v), digits)}


def _jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, (mpmath.mpf, mpmath.mpc)) or type(x).__name__ in ("mpf", "mpc"):
        return mpmath.nstr(x, 20)
    return str(x)


def _emit(record: dict) -> None:
    record = {"schema": SCHEMA, **record}
    sys.stdout.write(json.dumps(_jsonable(record), indent=2) + "\n")


def _params(args: argparse.Namespace, gamma: Any = None) -> Params:
    try:
        return Params(args.alpha, args.beta, args.gamma if gamma is None else gamma)
    except (LeRoyError, ValueError) as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# subcommands


def cmd_eval(args: argparse.Namespace) -> int:
    p = _params(args)
    prec = PrecisionConfig(args.digits, max_working_digits=max(4000, args.digits + 10))
    zarg: Any = args.z_re if Fraction(args.z_im) == 0 else (args.z_re, args.z_im)
    if args.method == "series":
        result = eval_series(p, zarg, prec, max_terms=args.max_terms)
    elif args.method == "contour-plus":
        result = eval_contour_plus(p, zarg, prec=prec)
    elif args.method == "contour-minus":
        result = eval_contour_minus(p, zarg, prec=prec)
    else:
        if Fraction(args.z_im) != 0 or Fraction(args.z_re) >= 0:
            raise UsageError("--method asym needs a negative real argument")
        result = expand_negative_axis(p, -Fraction(args.z_re), args.K, prec)
    diag = dict(result.diagnostics)
    if "regime" in diag:
        diag["regime"] = diag["regime"].label
    _emit(
        {
            "input": {
                "alpha": args.alpha,
                "beta": args.beta,
                "gamma": args.gamma,
                "z": {"re": args.z_re, "im": args.z_im},
                "method": args.method,
                "digits": args.digits,
            },
            "value": _value_record(result.value, result.working_digits),
            "abs_err_estimate": mpmath.nstr(result.abs_err, 5),
            "terms_used": result.terms_used,
            "working_digits": result.working_digits,
            "diagnostics": diag,
        }
    )
    return EXIT_OK


def _grid(t_min: Fraction, t_max: Fraction, points: int, spacing: str) -> list[str]:
    if points == 1:
        return [str(t_min)]
    ctx = mpmath.MPContext()
    ctx.dps = 30
    lo, hi = ctx.mpf(t_min.numerator) / t_min.denominator, ctx.mpf(t_max.numerator) / t_max.denominator
    if spacing == "log":
        ts = [lo * (hi / lo) ** (ctx.mpf(i) / (points - 1)) for i in range(points)]
    else:
        ts = [lo + (hi - lo) * i / (points - 1) for i in range(points)]
    return [ctx.nstr(t, 15) for t in ts]


def cmd_figure(args: argparse.Namespace) -> int:
    if args.figure is not None:
        alpha, beta, m, t_min, t_max = FIGURES[args.figure]
    else:
        if args.alpha is None or args.beta is None or args.m is None:
            raise UsageError("give --figure or all of --alpha --beta --m")
        alpha, beta, m, t_min, t_max = args.alpha, args.beta, args.m, "5", "100"
    t_min = Fraction(args.t_min if args.t_min is not None else t_min)
    t_max = Fraction(args.t_max if args.t_max is not None else t_max)
    if not 0 < t_min < t_max:
        raise UsageError("need 0 < t-min < t-max")
    try:
        p = Params(alpha, beta, m)
    except (LeRoyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    prec = PrecisionConfig(args.digits, max_working_digits=max(4000, args.digits + 10))
    print(f"# regime {classify_regime(p).label}", file=sys.stderr)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(CSV_HEADER)
    for t in _grid(t_min, t_max, args.points, args.spacing):
        f = eval_series(p, "-" + t, prec).value
        a = expand_negative_axis(p, t, args.K, prec).value
        rel = abs(f - a) / abs(f) if f != 0 else mpmath.inf
        out.writerow((t, mpmath.nstr(f, 20), mpmath.nstr(a, 20), mpmath.nstr(rel, 6)))
        sys.stdout.flush()
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    names = list(SUITES) if not args.suite else args.suite
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    results = []
    for name in names:
        r = SUITES[name](args.digits) if args.digits else SUITES[name]()
        print(f"{name}: {'pass' if r.passed else 'FAIL'} max residual {r.max_residual:.3g} (tol {r.tolerance:g})", file=sys.stderr)
        results.append(r)
    passed = all(r.passed for r in results)
    _emit(
        {
            "passed": passed,
            "suites": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "max_residual": r.max_residual,
                    "tolerance": r.tolerance,
                    "seconds": round(r.seconds, 3),
                    "details": r.details,
                }
                for r in results
            ],
        }
    )
    return EXIT_OK if passed else EXIT_SELFTEST


def cmd_order_type(args: argparse.Namespace) -> int:
    p = _params(args)
    est = estimate_order_type(p, args.n_max)
    _emit(
        {
            "input": {"alpha": args.alpha, "beta": args.beta, "gamma": args.gamma, "n_max": args.n_max},
            "rho_est": est.rho_est,
            "rho_raw": est.rho_raw,
            "rho_target": est.rho_target,
            "type_est": est.type_est,
            "table": [{"n": n, "rho_raw": r, "rho_local": loc, "type": ty} for n, r, loc, ty in est.table],
        }
    )
    return EXIT_OK


def cmd_laplace_verify(args: argparse.Namespace) -> int:
    if args.suite:
        points = [(Params(a, b, g), lam, s, kind) for a, b, g, lam, s, kind in SUITE]
    else:
        p = _params(args)
        points = [(p, args.lam, args.s, args.kind)]
    checks = []
    for p, lam, s, kind in points:
        c = verify_point(p, lam, s, args.digits, kind=kind)
        checks.append(
            {
                "kind": c.kind,
                "params": repr(c.params),
                "lambda": str(lam),
                "s": str(s),
                "lhs": _value_record(c.lhs, args.digits),
                "rhs": _value_record(c.rhs, args.digits),
                "residual": c.residual,
                "scaled_residual": c.scaled_residual,
                "diagnostics": c.diagnostics,
            }
        )
    _emit({"checks": checks})
    return EXIT_OK


def conjecture_window(beta: Fraction, gamma: Fraction) -> bool:
    """``0 < gamma (beta - 1/2) < 1``."""
    x = gamma * (beta - Fraction(1, 2))
    return 0 < x < 1


def cmd_conjecture_probe(args: argparse.Namespace) -> int:
    p = _params(args)
    if not conjecture_window(p.beta, p.gamma):
        raise UsageError("parameters outside the window 0 < gamma (beta - 1/2) < 1")
    t_min, t_max = Fraction(args.t_min), Fraction(args.t_max)
    if not 0 < t_min < t_max or t_min <= 1:
        raise UsageError("need 1 < t-min < t-max")
    prec = PrecisionConfig(args.digits, max_working_digits=max(args.max_working_digits, args.digits + 10))
    expo = (Fraction(1, 2) - p.gamma * (p.beta - Fraction(1, 2))) / (p.alpha * p.gamma)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(("t", "F_neg_t", "ratio"))
    for t in _grid(t_min, t_max, args.points, "log"):
        try:
            f = eval_series(p, "-" + t, prec).value
        except LeRoyError as exc:
            print(f"# t={t}: {exc}", file=sys.stderr)
            out.writerow((t, "nan", "nan"))
            continue
        tv = mpmath.mpf(t)
        ratio = f * mpmath.log(tv) / tv ** (mpmath.mpf(expo.numerator) / expo.denominator)
        out.writerow((t, mpmath.nstr(f, 20), mpmath.nstr(ratio, 12)))
        sys.stdout.flush()
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_params(sp: argparse.ArgumentParser, *, gamma_default: str = "1") -> None:
    sp.add_argument("--alpha", type=_decimal, default="1")
    sp.add_argument("--beta", type=_decimal, default="1")
    sp.add_argument("--gamma", type=_decimal, default=gamma_default)


def build_parser(default_digits: int = DEFAULT_DIGITS) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="leroy", description="Le Roy type function F_{alpha,beta}^{(gamma)}(z).")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="evaluate at one point")
    _add_params(sp)
    sp.add_argument("--z-re", type=_decimal, default="0")
    sp.add_argument("--z-im", type=_decimal, default="0")
    sp.add_argument("--digits", type=_positive_int, default=default_digits)
    sp.add_argument("--method", choices=("series", "contour-plus", "contour-minus", "asym"), default="series")
    sp.add_argument("--K", type=_positive_int, default=None, help="terms of H for --method asym")
    sp.add_argument("--max-terms", type=_positive_int, default=200_000)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("figure", help="series against asymptotics on the negative axis (CSV)")
    sp.add_argument("--figure", type=int, choices=sorted(FIGURES))
    sp.add_argument("--alpha", type=_decimal)
    sp.add_argument("--beta", type=_decimal)
    sp.add_argument("--m", type=_positive_int)
    sp.add_argument("--t-min", type=_decimal)
    sp.add_argument("--t-max", type=_decimal)
    sp.add_argument("--points", type=_positive_int, default=50)
    sp.add_argument("--spacing", choices=("linear", "log"), default="linear")
    sp.add_argument("--K", type=_positive_int, default=None)
    sp.add_argument("--digits", type=_positive_int, default=min(default_digits, 20))
    sp.set_defaults(func=cmd_figure)

    sp = sub.add_parser("selftest", help="run the invariant suites")
    sp.add_argument("--suite", action="append", help=f"one of {', '.join(SUITES)}; repeatable")
    sp.add_argument("--digits", type=_positive_int, default=None, help="override each suite's own precision")
    sp.set_defaults(func=cmd_selftest)

    sp = sub.add_parser("order-type", help="order and type from the Taylor coefficients")
    _add_params(sp)
    sp.add_argument("--n-max", type=_positive_int, default=2000)
    sp.set_defaults(func=cmd_order_type)

    sp = sub.add_parser("laplace-verify", help="quadrature check of the Laplace transform identities")
    _add_params(sp, gamma_default="2")
    sp.add_argument("--lambda", dest="lam", type=_decimal, default="1")
    sp.add_argument("--s", type=_decimal, default="2")
    sp.add_argument("--kind", choices=(LEMMA, WRIGHT), default=LEMMA)
    sp.add_argument("--suite", action="store_true", help="run the fixed nine-point suite")
    sp.add_argument("--digits", type=_positive_int, default=min(default_digits, 14))
    sp.set_defaults(func=cmd_laplace_verify)

    sp = sub.add_parser("conjecture-probe", help="F(-t) log t / t**e over a log grid (CSV)")
    _add_params(sp)
    sp.add_argument("--t-min", type=_decimal, default="100")
    sp.add_argument("--t-max", type=_decimal, default="1000000")
    sp.add_argument("--points", type=_positive_int, default=25)
    sp.add_argument("--digits", type=_positive_int, default=min(default_digits, 15))
    sp.add_argument("--max-working-digits", type=_positive_int, default=1000)
    sp.set_defaults(func=cmd_conjecture_probe)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        digits = _default_digits()
    except UsageError as exc:
        print(f"leroy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(digits)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"leroy {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LeRoyError, ValueError, ArithmeticError) as exc:
        print(f"leroy {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
