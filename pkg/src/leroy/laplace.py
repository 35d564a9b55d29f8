"""Numerical checks of the Laplace-transform identities.

For ``gamma > 1`` and ``Re s > 0``::

    int_0^inf exp(-s t) t**(beta-1) F_{alpha,beta}^{(gamma)}(lam t**alpha) dt
        = s**(-beta) F_{alpha,beta}^{(gamma-1)}(lam s**(-alpha))

and for integer ``gamma = m``::

    int_0^inf exp(-s t) F_{alpha,beta}^{(m)}(t) dt = s**(-1) 2Psi_m[(1,1),(1,1); (alpha,beta) x m; 1/s]

The left sides are computed by Gauss-Legendre quadrature, never from the
series identity itself, so a small residual is real evidence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .contour import gauss_legendre
from .errors import DivergentParametersError, DomainError, QuadratureError
from .numerics import PrecisionConfig, as_precision, to_number, working_context
from .series import LeRoyCoefficients, Params, eval_series, sum_power_series
from .wright import WrightParams, eval_multi_index_ml, eval_wright

LEMMA = "lemma"
WRIGHT = "wright"

DEFAULT_TARGET = 14
GL_NODES = 16


@dataclass
class LaplaceCheck:
    """One verified point; ``residual = |lhs - rhs|`` is always reported."""

    params: Params
    lam: Any
    s: Any
    lhs: Any
    rhs: Any
    residual: float
    kind: str = LEMMA
    diagnostics: dict = field(default_factory=dict)

    @property
    def scaled_residual(self) -> float:
        return self.residual / (1 + abs(complex(self.rhs)))


def _check_s(ctx, s):
    sv = to_number(ctx, s)
    if not ctx.re(sv) > 0:
        raise DomainError("Laplace transform needs Re s > 0")
    return sv


def _truncation(growth: float, exponent: float, s_re: float, b: float, target: int) -> float:
    """Smallest ``T`` (doubling search) with ``exp(-Re s T) t**(b-1) exp(growth T**exponent)`` negligible."""
    if exponent > 1 or (exponent == 1 and growth >= s_re):
        raise DivergentParametersError("transform does not converge for given s")
    limit = -(target + 2) * math.log(10.0) - 20.0
    T = 1.0
    while True:
        log_bound = -s_re * T + growth * T**exponent + (b - 1) * math.log(T) + math.log1p(T)
        if log_bound < limit and T > 1:
            return T
        T *= 1.25
        if T > 1e7:
            raise DivergentParametersError("transform does not converge for given s")


def _panels(U: float) -> list[tuple[float, float]]:
    # geometric grading towards 0 for the algebraic endpoint behaviour,
    # then unit panels
    edge = min(1.0, U)
    out = [(0.0, edge * 2.0**-40)]
    out += [(edge * 2.0 ** -(k + 1), edge * 2.0**-k) for k in range(39, -1, -1)]
    x = edge
    while x < U:
        nxt = min(x + 1.0, U)
        out.append((x, nxt))
        x = nxt
    return out


def _quadrature(params: Params, lam, s, a: Fraction, b: Fraction, prec: PrecisionConfig) -> tuple[Any, dict]:
    """``int_0^inf exp(-s t) t**(b-1) F(lam t**a) dt`` with a halving error estimate."""
    ctx = working_context(prec.base_digits)
    sv = _check_s(ctx, s)
    lv = to_number(ctx, lam)
    af = ctx.mpf(a.numerator) / a.denominator
    bf = ctx.mpf(b.numerator) / b.denominator
    ag = float(params.alpha * params.gamma)
    growth = float(params.gamma) * float(abs(lv)) ** (1 / ag) if lv != 0 else 0.0
    T = _truncation(growth, float(a) / ag, float(ctx.re(sv)), float(b), prec.target_digits)
    substitute = b < 1
    U = T ** float(b) if substitute else T
    cache = LeRoyCoefficients(params)
    inner = PrecisionConfig(prec.target_digits + 2, prec.guard_digits, prec.max_working_digits)

    def f(u):
        if u == 0:
            t = ctx.zero
        else:
            t = u ** (1 / bf) if substitute else u
        F = eval_series(params, lv * t**af, inner, cache=cache).value
        w = ctx.exp(-sv * t) * F
        if substitute:
            return w / bf
        return w * t ** (bf - 1) if b != 1 else w

    def integrate(nodes: int, split: int):
        xs, ws = gauss_legendre(nodes, ctx)
        total = ctx.zero
        for lo, hi in _panels(U):
            lo, hi = ctx.mpf(lo), ctx.mpf(hi)
            h = (hi - lo) / split
            for j in range(split):
                mid = lo + (j + ctx.mpf(1) / 2) * h
                for x, w in zip(xs, ws):
                    total += w * f(mid + h / 2 * x) * (h / 2)
        return total

    coarse = integrate(GL_NODES, 1)
    fine = integrate(GL_NODES, 2)
    err = abs(fine - coarse)
    if err > ctx.mpf(10) ** (-(prec.target_digits - 6)) * max(1, abs(fine)):
        raise QuadratureError(f"Laplace quadrature failed: halving difference {ctx.nstr(err, 3)}")
    return fine, {"T": T, "substitution": substitute, "panels": len(_panels(U)), "nodes": GL_NODES, "quad_err": float(err)}


def laplace_lhs(params: Params, lam: Any, s: Any, prec: PrecisionConfig | int | None = None):
    """Quadrature of ``int_0^inf exp(-s t) t**(beta-1) F(lam t**alpha) dt``; needs ``gamma > 1``."""
    prec = as_precision(DEFAULT_TARGET if prec is None else prec)
    if not params.gamma > 1:
        raise DomainError("Laplace identity needs gamma > 1")
    _real_lambda(lam)
    value, _ = _quadrature(params, lam, s, params.alpha, params.beta, prec)
    return value


def laplace_rhs(params: Params, lam: Any, s: Any, prec: PrecisionConfig | int | None = None):
    """``s**(-beta) F_{alpha,beta}^{(gamma-1)}(lam s**(-alpha))`` with principal powers."""
    prec = as_precision(DEFAULT_TARGET if prec is None else prec)
    if not params.gamma > 1:
        raise DomainError("Laplace identity needs gamma > 1")
    ctx = working_context(prec.base_digits)
    sv = _check_s(ctx, s)
    alpha, beta, _ = params.mp(ctx)
    arg = to_number(ctx, lam) * sv ** (-alpha)
    lower = params.replace(gamma=params.gamma - 1)
    return sv ** (-beta) * eval_series(lower, arg, prec).value


def laplace_rhs_multi_index(params: Params, lam: Any, s: Any, prec: PrecisionConfig | int | None = None):
    """Right side for ``gamma = 3`` through the four-parameter Mittag-Leffler function."""
    prec = as_precision(DEFAULT_TARGET if prec is None else prec)
    if params.gamma != 3:
        raise DomainError("the multi-index form applies to gamma = 3")
    ctx = working_context(prec.base_digits)
    sv = _check_s(ctx, s)
    alpha, beta, _ = params.mp(ctx)
    pair = (params.alpha, params.beta)
    return sv ** (-beta) * eval_multi_index_ml([pair, pair], to_number(ctx, lam) * sv ** (-alpha), prec).value


def wright_form_params(params: Params) -> WrightParams:
    m = params.m
    if m is None:
        raise DomainError("the Wright form needs an integer gamma")
    return WrightParams(upper=[(1, 1), (1, 1)], lower=[(params.alpha, params.beta)] * m)


def laplace_wright_form(params: Params, s: Any, prec: PrecisionConfig | int | None = None):
    """``s**(-1) 2Psi_m[(1,1),(1,1); (alpha,beta) x m; 1/s]``, the transform of ``F^{(m)}(t)``."""
    prec = as_precision(DEFAULT_TARGET if prec is None else prec)
    w = wright_form_params(params)
    ctx = working_context(prec.base_digits)
    sv = _check_s(ctx, s)
    return eval_wright(w, 1 / sv, prec).value / sv


def laplace_termwise(params: Params, s: Any, prec: PrecisionConfig | int | None = None):
    """Oracle ``sum_k Gamma(k+1) / (Gamma(alpha k + beta)**m s**(k+1))`` summed directly."""
    prec = as_precision(DEFAULT_TARGET if prec is None else prec)
    if params.m is None:
        raise DomainError("the term-wise transform needs an integer gamma")
    m = params.m
    ctx = working_context(prec.base_digits)
    sv = _check_s(ctx, s)

    def coefficient(c, k: int):
        alpha, beta, _ = params.mp(c)
        return c.factorial(k) * c.rgamma(alpha * k + beta) ** m

    ratio = 0.5 if params.alpha * m > 1 else 1.0
    return sum_power_series(coefficient, 1 / sv, prec, method="fox_wright", max_ratio=ratio).value / sv


def laplace_wright_lhs(params: Params, s: Any, prec: PrecisionConfig | int | None = None):
    """Quadrature of ``int_0^inf exp(-s t) F^{(m)}(t) dt``."""
    prec = as_precision(DEFAULT_TARGET if prec is None else prec)
    wright_form_params(params)
    value, _ = _quadrature(params, 1, s, Fraction(1), Fraction(1), prec)
    return value


def _real_lambda(lam: Any) -> None:
    ctx = working_context(20)
    if not isinstance(to_number(ctx, lam), type(ctx.mpf(0))):
        raise DomainError("lambda must be real")


def verify_point(
    params: Params,
    lam: Any,
    s: Any,
    prec: PrecisionConfig | int | None = None,
    *,
    kind: str = LEMMA,
) -> LaplaceCheck:
    """Quadrature left side against the closed-form right side at one point."""
    prec = as_precision(DEFAULT_TARGET if prec is None else prec)
    if kind == LEMMA:
        if not params.gamma > 1:
            raise DomainError("Laplace identity needs gamma > 1")
        _real_lambda(lam)
        lhs, diag = _quadrature(params, lam, s, params.alpha, params.beta, prec)
        rhs = laplace_rhs(params, lam, s, prec)
        if params.gamma == 3:
            alt = laplace_rhs_multi_index(params, lam, s, prec)
            diag["multi_index_diff"] = float(abs(alt - rhs))
    elif kind == WRIGHT:
        lhs, diag = _quadrature(params, 1, s, Fraction(1), Fraction(1), prec)
        rhs = laplace_wright_form(params, s, prec)
        diag["termwise_diff"] = float(abs(laplace_termwise(params, s, prec) - rhs))
    else:
        raise DomainError(f"unknown check kind {kind!r}")
    return LaplaceCheck(params, lam, s, lhs, rhs, float(abs(lhs - rhs)), kind, diag)


# (alpha, beta, gamma, lambda, s, kind)
SUITE: tuple[tuple[str, str, str, str, str, str], ...] = (
    ("1", "1", "2", "-1", "1", LEMMA),
    ("0.5", "1", "2", "-1", "2", LEMMA),
    ("0.5", "0.75", "3", "1", "4", LEMMA),
    ("0.8", "0.6", "2", "2", "3", LEMMA),
    ("0.6", "0.8", "3", "-2", "1.5", LEMMA),
    ("0.7", "1.2", "2.5", "1", "2", LEMMA),
    ("1", "1", "1", "1", "2", WRIGHT),
    ("0.6", "0.8", "3", "1", "3", WRIGHT),
    ("0.5", "0.5", "4", "1", "10", WRIGHT),
)


def run_suite(prec: PrecisionConfig | int | None = None) -> list[LaplaceCheck]:
    """Verify every point of :data:`SUITE` in order."""
    out = []
    for alpha, beta, gamma, lam, s, kind in SUITE:
        out.append(verify_point(Params(alpha, beta, gamma), lam, s, prec, kind=kind))
    return out
