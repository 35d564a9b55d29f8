"""Invariant suites behind ``leroy selftest``.

Each suite returns a :class:`SuiteResult` with the worst residual it saw and
the tolerance it was held to. Nothing is thresholded silently: every
residual is kept in ``details``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .asymptotics import eval_H, estimate_order_type
from .contour import eval_contour_minus, eval_contour_plus, eval_extension_contour
from .laplace import run_suite
from .numerics import working_context
from .series import Params, eval_extension, eval_series
from .wright import WrightParams, eval_wright


@dataclass
class SuiteResult:
    name: str
    passed: bool
    max_residual: float
    tolerance: float
    seconds: float = 0.0
    details: list[dict] = field(default_factory=list)


def _finish(name: str, tol: float, details: list[dict], start: float) -> SuiteResult:
    worst = max((d["residual"] for d in details), default=0.0)
    return SuiteResult(name, worst <= tol, worst, tol, time.perf_counter() - start, details)


def suite_series(digits: int = 30) -> SuiteResult:
    """Normalisation ``F(0) Gamma(beta)**gamma = 1`` and the exponential reduction."""
    start = time.perf_counter()
    details = []
    ctx = working_context(digits + 10)
    for a, b, g in [("0.6", "0.8", "3"), ("2.5", "0.3", "1.7"), ("1", "1", "1"), ("0.5", "2", "4")]:
        p = Params(a, b, g)
        v = eval_series(p, 0, digits).value * ctx.exp(p.mp(ctx)[2] * ctx.loggamma(p.mp(ctx)[1]))
        details.append({"case": f"F(0) {p!r}", "residual": float(abs(v - 1))})
    for x in ("-5", "-1", "0.5", "3", "10"):
        v = eval_series(Params(1, 1, 1), x, digits).value
        e = ctx.exp(ctx.mpf(x))
        details.append({"case": f"exp({x})", "residual": float(abs(v - e) / e)})
    return _finish("series", 10.0 ** (2 - digits), details, start)


def suite_wright(digits: int = 30) -> SuiteResult:
    """Series against the ``1Psi_m`` representation for integer ``gamma``."""
    start = time.perf_counter()
    details = []
    for a, b, m in [("0.6", "0.8", 3), ("0.5", "0.75", 4), ("1.5", "2", 2)]:
        p = Params(a, b, m)
        w = WrightParams(upper=[(1, 1)], lower=[(a, b)] * m)
        for z in ("-20", "2", (1, 1)):
            zz = complex(*z) if isinstance(z, tuple) else z
            s = eval_series(p, zz, digits).value
            f = eval_wright(w, zz, digits).value
            details.append({"case": f"{p!r} z={zz}", "residual": float(abs(s - f) / max(1, abs(s)))})
    return _finish("wright", 10.0 ** (3 - digits), details, start)


CONTOUR_POINTS = (
    ("1", "1", "1", 1, "plus"),
    ("0.6", "0.8", "3", 2 + 1j, "plus"),
    ("0.8", "1", "2.5", 1j, "plus"),
    ("1", "1", "1", -1, "minus"),
    ("0.5", "0.75", "4", -10, "minus"),
    ("0.6", "0.8", "3", -2 + 2j, "minus"),
    ("0.5", "0.75", "4", 3, "extension"),
    ("1", "1", "1", 2, "extension"),
)


def suite_contour(digits: int = 16) -> SuiteResult:
    """The three loop integrals against their series."""
    start = time.perf_counter()
    details = []
    for a, b, g, z, side in CONTOUR_POINTS:
        p = Params(a, b, g)
        if side == "extension":
            r = eval_extension_contour(p, z, prec=digits)
            ref = eval_extension(p, z, digits + 10).value
        else:
            fn = eval_contour_plus if side == "plus" else eval_contour_minus
            r = fn(p, z, prec=digits)
            ref = eval_series(p, z, digits + 10).value
        details.append({"case": f"{side} {p!r} z={z}", "residual": float(abs(r.value - ref)), "abs_err": float(r.abs_err)})
    return _finish("contour", 1e-8, details, start)


def suite_extension(digits: int = 30) -> SuiteResult:
    """``F_{-alpha}(z) - Gamma(beta)**(-gamma) + F(1/z) = 0``."""
    start = time.perf_counter()
    details = []
    ctx = working_context(digits + 10)
    for a, b, g in [("0.6", "0.8", "3"), ("0.5", "0.75", "4"), ("1.3", "0.4", "2.5")]:
        p = Params(a, b, g)
        c0 = ctx.exp(-p.mp(ctx)[2] * ctx.loggamma(p.mp(ctx)[1]))
        for z in (1.5, -3, 2 + 2j, 100):
            ext = eval_extension(p, z, digits).value
            inv = eval_series(p, 1 / ctx.mpmathify(z), digits).value
            details.append({"case": f"{p!r} z={z}", "residual": float(abs(ext - c0 + inv) / (1 + abs(inv)))})
    return _finish("extension", 1e-12, details, start)


def suite_laplace(digits: int = 14) -> SuiteResult:
    start = time.perf_counter()
    details = []
    for check in run_suite(digits):
        details.append(
            {
                "case": f"{check.kind} {check.params!r} lambda={check.lam} s={check.s}",
                "residual": check.scaled_residual,
            }
        )
    return _finish("laplace", 1e-6, details, start)


def suite_asymptotics(digits: int = 30) -> SuiteResult:
    """``H_10`` against the series for the algebraic preset, far enough out that the
    decaying exponential terms are below the tolerance."""
    start = time.perf_counter()
    p = Params("0.6", "0.8", 3)
    details = []
    for t in (2000, 5000):
        ref = eval_series(p, -t, digits).value
        h = eval_H(p, t, 10, digits)
        details.append({"case": f"H_10 t={t}", "residual": float(abs(h - ref) / abs(ref))})
    return _finish("asymptotics", 1e-6, details, start)


def suite_order(digits: int = 30) -> SuiteResult:
    start = time.perf_counter()
    details = []
    for a, b, g in [("0.5", "1", "4"), ("1", "1", "1"), ("0.6", "0.8", "3"), ("2", "0.5", "0.5"), ("0.3", "1.5", "2")]:
        est = estimate_order_type(Params(a, b, g), 2000)
        details.append(
            {"case": f"rho {a},{b},{g}", "residual": abs(est.rho_est / est.rho_target - 1), "type_est": est.type_est}
        )
    return _finish("order", 0.05, details, start)


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "series": suite_series,
    "wright": suite_wright,
    "contour": suite_contour,
    "extension": suite_extension,
    "laplace": suite_laplace,
    "asymptotics": suite_asymptotics,
    "order": suite_order,
}
