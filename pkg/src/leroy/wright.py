"""Generalized (Fox-)Wright function by direct series summation.

    pPsi_q(z) = sum_k z**k / k! * prod Gamma(rho_r k + a_r) / prod Gamma(sigma_r k + b_r)

For integer ``gamma = m`` the Le Roy type function is ``1Psi_m`` with upper
pair ``(1, 1)`` and ``m`` lower pairs ``(alpha, beta)``, which makes this an
independent route to the same values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .errors import DivergentParametersError, DomainError
from .numerics import PrecisionConfig, as_precision, exact_fraction, to_number, working_context
from .series import DEFAULT_MAX_TERMS, EvalResult, sum_power_series

Pair = tuple[Fraction, Fraction]


class UndefinedTermError(DomainError):
    """A numerator gamma factor hits a pole, so a series term is undefined."""


def _pairs(items: Sequence[Sequence[Any]]) -> tuple[Pair, ...]:
    out = []
    for item in items:
        scale, shift = item
        out.append((exact_fraction(scale)[0], exact_fraction(shift)[0]))
    return tuple(out)


@dataclass(frozen=True, init=False)
class WrightParams:
    """Upper pairs ``(rho_r, a_r)`` and lower pairs ``(sigma_r, b_r)``.

    The scale factor comes first in each pair, matching
    ``Gamma(rho_r k + a_r)`` and ``Gamma(sigma_r k + b_r)``.
    """

    upper: tuple[Pair, ...]
    lower: tuple[Pair, ...]

    def __init__(self, upper: Sequence = (), lower: Sequence = ()) -> None:
        up = _pairs(upper)
        lo = _pairs(lower)
        if any(r <= 0 for r, _ in up) or any(s <= 0 for s, _ in lo):
            raise DomainError("scale factors rho_r and sigma_r must be positive")
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)

    @property
    def kappa(self) -> Fraction:
        """Convergence index ``1 + sum sigma_r - sum rho_r``."""
        return 1 + sum((s for s, _ in self.lower), Fraction(0)) - sum((r for r, _ in self.upper), Fraction(0))

    def radius(self) -> float:
        """Radius of convergence: infinite when ``kappa > 0``, ``1/h`` when ``kappa == 0``."""
        k = self.kappa
        if k > 0:
            return math.inf
        if k < 0:
            return 0.0
        log_h = sum(-float(r) * math.log(float(r)) for r, _ in self.upper)
        log_h += sum(float(s) * math.log(float(s)) for s, _ in self.lower)
        return math.exp(-log_h)


def _is_pole(ctx, x) -> bool:
    return bool(ctx.isint(x)) and x <= 0


def _wright_coefficient(w: WrightParams):
    def coefficient(ctx, k: int):
        value = ctx.rgamma(k + 1)
        for rho, a in w.upper:
            x = ctx.mpf(rho.numerator) / rho.denominator * k + ctx.mpf(a.numerator) / a.denominator
            if _is_pole(ctx, x):
                raise UndefinedTermError(f"undefined term: numerator Gamma pole at k={k}")
            value *= ctx.gamma(x)
        for sigma, b in w.lower:
            x = ctx.mpf(sigma.numerator) / sigma.denominator * k + ctx.mpf(b.numerator) / b.denominator
            value *= ctx.rgamma(x)
        return value

    return coefficient


def _log_abs_term(upper, lower, k: int, log_abs_z: float) -> float:
    out = k * log_abs_z - math.lgamma(k + 1)
    for r, a in upper:
        out += math.lgamma(r * k + a)
    for s, b in lower:
        x = s * k + b
        if x <= 0 and x == int(x):
            return -math.inf
        out -= math.lgamma(x)
    return out


def _scan_extra_digits(upper, lower, abs_z: float, target: int) -> int:
    # float pre-scan for the largest term; the engine's escalation is the backstop
    if abs_z == 0:
        return 0
    up = [(float(r), float(a)) for r, a in upper]
    lo = [(float(s), float(b)) for s, b in lower]
    lz = math.log(abs_z)
    best = -math.inf
    k = 0
    while k < 10**6:
        try:
            val = _log_abs_term(up, lo, k, lz)
        except ValueError:
            val = -math.inf
        best = max(best, val)
        if k > 8 and val < best - (target + 5) * math.log(10) and val < 0:
            break
        k += 1 if k < 1000 else max(1, k // 1000)
    return max(0, int(math.ceil(best / math.log(10)))) + 2


def eval_wright(
    w: WrightParams,
    z: Any,
    prec: PrecisionConfig | int | None = None,
    *,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Evaluate ``pPsi_q(z)`` by its power series.

    Requires ``kappa > 0`` (entire function), or ``kappa == 0`` with ``|z|``
    inside the radius of convergence. Lower gamma factors at a pole
    contribute an exact zero; upper factors at a pole raise
    :class:`UndefinedTermError`.
    """
    prec = as_precision(prec)
    probe = working_context(20)
    zv = to_number(probe, z)
    radius = w.radius()
    if radius == 0.0:
        raise DivergentParametersError(f"divergent parameter set (kappa = {w.kappa})")
    if radius != math.inf and not abs(zv) < radius:
        raise DivergentParametersError(
            f"divergent parameter set: kappa = 0 and |z| = {float(abs(zv)):.6g} >= radius {radius:.6g}"
        )
    upper = [(float(r), float(a)) for r, a in w.upper]
    lower = [(float(s), float(b)) for s, b in w.lower]
    extra = _scan_extra_digits(upper, lower, float(abs(zv)), prec.target_digits)
    result = sum_power_series(
        _wright_coefficient(w),
        z,
        prec,
        extra_digits=extra,
        max_terms=max_terms,
        method="fox_wright",
        max_ratio=0.5 if radius == math.inf else 1.0,
    )
    result.diagnostics["kappa"] = str(w.kappa)
    return result


def eval_multi_index_ml(
    pairs: Sequence[Sequence[Any]],
    z: Any,
    prec: PrecisionConfig | int | None = None,
    *,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Multi-index Mittag-Leffler function ``sum_k z**k / prod_j Gamma(alpha_j k + beta_j)``.

    With ``m`` equal pairs ``(alpha, beta)`` this is ``F_{alpha,beta}^{(m)}(z)``.
    """
    prec = as_precision(prec)
    ps = _pairs(pairs)
    if not ps or any(a <= 0 for a, _ in ps):
        raise DomainError("multi-index Mittag-Leffler needs at least one pair with alpha_j > 0")

    def coefficient(ctx, k: int):
        value = ctx.one
        for a, b in ps:
            x = ctx.mpf(a.numerator) / a.denominator * k + ctx.mpf(b.numerator) / b.denominator
            value *= ctx.rgamma(x)
        return value

    probe = working_context(20)
    zv = to_number(probe, z)
    extra = _scan_extra_digits([(1.0, 1.0)], [(float(a), float(b)) for a, b in ps], float(abs(zv)), prec.target_digits)
    return sum_power_series(coefficient, z, prec, extra_digits=extra, max_terms=max_terms, method="fox_wright")
