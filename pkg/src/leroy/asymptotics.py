"""Large-argument behaviour for integer ``gamma = m``.

On the negative axis ``F(-t)`` is described by two kinds of terms:

* the algebraic series ``H(t) = -sum_k (-1)**k t**(-k) / Gamma(beta - alpha k)**m``;
* conjugate pairs of exponential terms ``E(e^{+-i j pi} t)``, which combine into
  real oscillating functions ``G_r``.

Which of them dominate depends only on ``alpha*m`` compared with 2. The
module also carries the growth (order/type) estimators computed from the
Taylor coefficients and the sector form of the leading exponential term for
arbitrary ``gamma``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .errors import DomainError
from .numerics import PrecisionConfig, as_precision, to_number, to_real, working_context
from .series import EvalResult, Params

ALGEBRAIC = "algebraic"
BOUNDARY = "boundary"
OSCILLATORY = "oscillatory"

DEFAULT_K = 10
REGIME_RTOL = 1e-12


@dataclass(frozen=True)
class Regime:
    """Regime of ``F(-t)`` for large ``t`` and the number of exponential pairs."""

    label: str
    alpha_m: Fraction
    P: int

    @property
    def harmonics(self) -> tuple[int, ...]:
        """Multiples ``j`` of ``pi`` in the angles ``j pi / (alpha m)`` of the retained pairs."""
        return tuple(2 * r - 1 for r in range(1, self.P + 1))


def pair_count(alpha_m: Fraction) -> int:
    """``floor((alpha m / 2 + 1) / 2)``, the number of exponential pairs kept."""
    return math.floor((Fraction(alpha_m) / 2 + 1) / 2)


def pair_count_by_search(alpha_m: Fraction) -> int:
    """Same count from the definition: ``2P+1`` is the smallest odd integer above ``alpha m / 2``."""
    half = Fraction(alpha_m) / 2
    odd = 1
    while not odd > half:
        odd += 2
    return (odd - 1) // 2


def _require_integer_gamma(params: Params) -> int:
    if not params.gamma_is_integer:
        raise DomainError("asymptotics undefined for non-integer gamma")
    return int(params.gamma)


def classify_regime(params: Params) -> Regime:
    m = _require_integer_gamma(params)
    am = params.alpha * m
    if params.exact:
        boundary = am == 2
    else:
        boundary = abs(float(am) - 2.0) <= REGIME_RTOL * 2.0
        if boundary and am != 2:
            warnings.warn("alpha*m treated as 2 within relative tolerance 1e-12", stacklevel=2)
    if boundary:
        return Regime(BOUNDARY, am, 1)
    if am < 2:
        return Regime(ALGEBRAIC, am, 0)
    return Regime(OSCILLATORY, am, pair_count(am))


def leading_coefficient(params: Params, ctx=None):
    """``a0 = (2 pi)**((1-m)/2) / (alpha sqrt(m))``."""
    m = _require_integer_gamma(params)
    if ctx is None:
        ctx = working_context(30)
    alpha = params.mp(ctx)[0]
    return (2 * ctx.pi) ** (ctx.mpf(1 - m) / 2) / (alpha * ctx.sqrt(m))


def theta_prime(params: Params) -> Fraction:
    """``m beta - (m - 1)/2``, the shift in the inverse-factorial expansion."""
    m = _require_integer_gamma(params)
    return m * params.beta - Fraction(m - 1, 2)


@dataclass
class AsymptoticExpansion:
    """Terms of the negative-axis expansion for one parameter set."""

    regime: Regime
    K: int
    a0: Any
    theta_prime: Fraction
    h_coefficients: list = field(default_factory=list)
    pair_harmonics: tuple[int, ...] = ()


def build_expansion(params: Params, K: int = DEFAULT_K, prec: PrecisionConfig | int | None = None) -> AsymptoticExpansion:
    prec = as_precision(prec)
    ctx = working_context(prec.base_digits)
    regime = classify_regime(params)
    return AsymptoticExpansion(
        regime=regime,
        K=K,
        a0=leading_coefficient(params, ctx),
        theta_prime=theta_prime(params),
        h_coefficients=[_h_coefficient(params, k, ctx) for k in range(1, K + 1)],
        pair_harmonics=_harmonics(regime),
    )


def _harmonics(regime: Regime, leading_only: bool = False) -> tuple[int, ...]:
    if regime.label == BOUNDARY:
        return (1,)
    if regime.label == OSCILLATORY:
        return (1,) if leading_only else regime.harmonics
    return ()


# ---------------------------------------------------------------------------
# algebraic part


def _h_coefficient(params: Params, k: int, ctx):
    # coefficient of t**(-k) in H(t); zero exactly where beta - alpha k is a pole
    m = int(params.gamma)
    alpha, beta, _ = params.mp(ctx)
    return -((-1) ** k) * ctx.rgamma(beta - alpha * k) ** m


def eval_H(params: Params, t: Any, K: int = DEFAULT_K, prec: PrecisionConfig | int | None = None):
    """Truncated algebraic series ``H_K(t) = -sum_{k=1}^{K} (-1)**k t**(-k) / Gamma(beta - alpha k)**m``."""
    _require_integer_gamma(params)
    if K < 1:
        raise DomainError("K must be >= 1")
    prec = as_precision(prec)
    ctx = working_context(prec.base_digits)
    tv = to_real(ctx, t)
    if tv <= 0:
        raise DomainError("H is evaluated for t > 0 only")
    inv = 1 / tv
    total = ctx.zero
    power = ctx.one
    for k in range(1, K + 1):
        power *= inv
        total += _h_coefficient(params, k, ctx) * power
    return total


def default_truncation(params: Params, t: Any, K: int = DEFAULT_K) -> int:
    """``K`` capped at the smallest term of the divergent series ``H`` at ``t``."""
    ctx = working_context(30)
    tv = to_real(ctx, t)
    last = None
    best = 1
    for k in range(1, K + 1):
        c = _h_coefficient(params, k, ctx)
        if c == 0:
            best = k
            continue
        size = abs(c) / tv**k
        if last is not None and size > last:
            break
        last = size
        best = k
    return best


# ---------------------------------------------------------------------------
# exponential part


def _pair_term(params: Params, t, harmonic: int, ctx):
    m = int(params.gamma)
    alpha, beta, _ = params.mp(ctx)
    am = alpha * m
    expo = (m + 1 - 2 * m * beta) / (2 * am)
    u = t ** (1 / am)
    angle = harmonic * ctx.pi / am
    return (
        2
        * leading_coefficient(params, ctx)
        * t**expo
        * ctx.exp(m * u * ctx.cos(angle))
        * ctx.cos(harmonic * ctx.pi * (m + 1 - 2 * m * beta) / (2 * am) + m * u * ctx.sin(angle))
    )


def eval_G_r(params: Params, t: Any, r: int, prec: PrecisionConfig | int | None = None):
    """Real sum ``E(e^{i j pi} t) + E(e^{-i j pi} t)`` of the ``r``-th conjugate pair, ``j = 2r - 1``.

    ``G_r(t) = 2 a0 t**c exp(m u cos(j pi/(alpha m))) cos(j pi c + m u sin(j pi/(alpha m)))``
    with ``u = t**(1/(alpha m))`` and ``c = (m+1-2 m beta)/(2 alpha m)``.
    Only odd multiples of ``pi`` occur because ``-t = e^{i pi} t`` is rotated
    by whole turns. ``G_1`` is the dominant pair. Valid for ``1 <= r <= P``
    (``r = 1`` is always allowed).
    """
    regime = classify_regime(params)
    limit = max(regime.P, 1) if regime.label != ALGEBRAIC else 1
    if not 1 <= r <= limit:
        raise DomainError(f"pair index r={r} outside 1..{limit}")
    prec = as_precision(prec)
    ctx = working_context(prec.base_digits)
    tv = to_real(ctx, t)
    if tv <= 0:
        raise DomainError("G_r is evaluated for t > 0 only")
    return _pair_term(params, tv, 2 * r - 1, ctx)


def eval_E_leading(params: Params, z: Any, prec: PrecisionConfig | int | None = None):
    """One-term exponential ``a0 z**c exp(m z**(1/(alpha m)))`` on the principal branch."""
    m = _require_integer_gamma(params)
    prec = as_precision(prec)
    ctx = working_context(prec.base_digits)
    zv = to_number(ctx, z)
    if zv == 0:
        raise DomainError("E is undefined at z = 0")
    alpha, beta, _ = params.mp(ctx)
    am = alpha * m
    return leading_coefficient(params, ctx) * zv ** ((m + 1 - 2 * m * beta) / (2 * am)) * ctx.exp(m * zv ** (1 / am))


def sector_halfwidth(params: Params) -> float:
    """Half-opening of the sector where the one-term exponential form holds (before the epsilon)."""
    ag = float(params.alpha_gamma)
    if ag < 2:
        return 0.5 * ag * math.pi
    if ag < 4:
        return (2 - 0.5 * ag) * math.pi
    return 0.0


def in_leading_sector(params: Params, z: Any, eps: float = 1e-9) -> bool:
    """Whether ``|arg z| <= halfwidth - eps`` (for ``alpha gamma >= 4`` only the positive axis)."""
    w = complex(z)
    arg = abs(math.atan2(w.imag, w.real))
    width = sector_halfwidth(params)
    if width == 0.0:
        return w.imag == 0 and w.real > 0
    return arg <= width - eps


def eval_sector_leading(params: Params, z: Any, prec: PrecisionConfig | int | None = None):
    """Leading form for any ``gamma > 0``; returns ``(value, in_sector)``.

    ``(2 pi)**((1-gamma)/2) / (alpha sqrt(gamma)) z**((gamma - 2 beta gamma + 1)/(2 alpha gamma)) exp(gamma z**(1/(alpha gamma)))``
    """
    prec = as_precision(prec)
    ctx = working_context(prec.base_digits)
    zv = to_number(ctx, z)
    if zv == 0:
        raise DomainError("leading form is undefined at z = 0")
    alpha, beta, gamma = params.mp(ctx)
    ag = alpha * gamma
    value = (
        (2 * ctx.pi) ** ((1 - gamma) / 2)
        / (alpha * ctx.sqrt(gamma))
        * zv ** ((gamma - 2 * beta * gamma + 1) / (2 * ag))
        * ctx.exp(gamma * zv ** (1 / ag))
    )
    return value, in_leading_sector(params, complex(zv))


# ---------------------------------------------------------------------------
# negative axis


def expand_negative_axis(
    params: Params,
    t: Any,
    K: int | None = None,
    prec: PrecisionConfig | int | None = None,
    *,
    leading_only: bool = False,
) -> EvalResult:
    """Asymptotic value of ``F(-t)`` for large ``t``.

    * ``alpha m < 2``: ``H_K(t)``
    * ``alpha m = 2``: ``G_1(t) + H_K(t)``
    * ``alpha m > 2``: ``G_1(t) + ... + G_P(t)`` (only ``G_1`` with ``leading_only``)

    ``K=None`` picks ``min(10, optimal truncation at t)``. The returned
    ``abs_err`` is indicative only: the first omitted ``H`` term plus the
    ``t**(-1/(alpha m))`` relative correction of the exponential terms.
    """
    m = _require_integer_gamma(params)
    regime = classify_regime(params)
    prec = as_precision(prec)
    ctx = working_context(prec.base_digits)
    tv = to_real(ctx, t)
    if tv <= 0:
        raise DomainError("expand_negative_axis needs t > 0")
    if K is None:
        K = default_truncation(params, tv)
    alpha = params.mp(ctx)[0]
    value = ctx.zero
    err = ctx.zero
    if regime.label in (ALGEBRAIC, BOUNDARY):
        value += eval_H(params, tv, K, prec)
        err += abs(_h_coefficient(params, K + 1, ctx)) / tv ** (K + 1)
    harmonics = _harmonics(regime, leading_only)
    for j in harmonics:
        g = _pair_term(params, tv, j, ctx)
        value += g
        err += abs(g) * tv ** (-1 / (alpha * m))
    return EvalResult(
        value=value,
        abs_err=err,
        terms_used=max(K, 1),
        working_digits=prec.base_digits,
        method="asymptotic",
        diagnostics={"regime": regime, "K": K, "harmonics": tuple(harmonics)},
    )


def pair_zeros(params: Params, t_max: float, harmonic: int = 1) -> list[float]:
    """Positive ``t <= t_max`` where the cosine factor of a pair term vanishes."""
    m = _require_integer_gamma(params)
    am = float(params.alpha) * m
    beta = float(params.beta)
    c0 = harmonic * math.pi * (m + 1 - 2 * m * beta) / (2 * am)
    slope = m * math.sin(harmonic * math.pi / am)
    if slope <= 0:
        return []
    out = []
    j = math.ceil((c0 - math.pi / 2) / math.pi)
    while True:
        u = (math.pi / 2 + j * math.pi - c0) / slope
        if u > 0:
            t = u**am
            if t > t_max:
                break
            out.append(t)
        j += 1
    return out


def envelope_slope(params: Params, ts: Sequence[float], values: Sequence[float]) -> float:
    """Growth rate of ``log |F(-t)|`` in ``u = t**(1/(alpha m))`` after the algebraic factor.

    Takes samples of ``F(-t)`` dense enough to resolve the oscillation, keeps
    the local maxima of ``|F| t**(-c)`` and fits a straight line in ``u``.
    Theory predicts the slope ``m cos(pi/(alpha m))``.
    """
    m = _require_integer_gamma(params)
    am = float(params.alpha) * m
    c = (m + 1 - 2 * m * float(params.beta)) / (2 * am)
    t = np.asarray(ts, dtype=float)
    logs = np.array([_log_abs(v) for v in values]) - c * np.log(t)
    peaks = [i for i in range(1, len(t) - 1) if logs[i] >= logs[i - 1] and logs[i] >= logs[i + 1]]
    if len(peaks) < 3:
        raise DomainError("too few local maxima to fit an envelope; sample more densely")
    u = t[peaks] ** (1 / am)
    slope, _ = np.polyfit(u, logs[peaks], 1)
    return float(slope)


def _log_abs(v: Any) -> float:
    import mpmath

    a = abs(v)
    if a == 0:
        return -math.inf
    return float(mpmath.log(a))


# ---------------------------------------------------------------------------
# growth indices from the Taylor coefficients


@dataclass
class OrderTypeEstimate:
    """Order and type estimates computed from ``c_n = Gamma(alpha n + beta)**(-gamma)``.

    ``rho_est`` differences ``L(n) = log(1/c_n)/n`` between ``N/2`` and ``N``,
    which removes the ``1/log n`` bias of ``rho_raw``, the plain
    ``max n log n / log(1/c_n)`` over ``[N/2, N]``. ``type_est`` uses
    ``rho = 1/(alpha gamma)`` exactly.
    """

    rho_est: float
    rho_raw: float
    rho_target: float
    type_est: float
    table: list[tuple[int, float, float, float]]


def estimate_order_type(params: Params, N: int = 2000, prec: PrecisionConfig | int | None = None) -> OrderTypeEstimate:
    if N < 10:
        raise DomainError("N must be >= 10")
    prec = as_precision(prec if prec is not None else 30)
    ctx = working_context(prec.base_digits)
    alpha, beta, gamma = params.mp(ctx)

    def log_inv(n: int):
        return gamma * ctx.loggamma(alpha * n + beta)

    def rho_local(n: int) -> float:
        half = n // 2
        return float(ctx.ln(2) / (log_inv(n) / n - log_inv(half) / half))

    rho = 1 / (alpha * gamma)

    def type_at(n: int) -> float:
        y = ctx.mpf(n) ** (1 / rho) * ctx.exp(-log_inv(n) / n)
        return float(y**rho / (ctx.e * rho))

    raw = ctx.zero
    for n in range(max(2, N // 2), N + 1):
        li = log_inv(n)
        if li > 0:
            raw = max(raw, n * ctx.ln(n) / li)

    table = []
    n = 10
    while n < N:
        table.append((n, _raw_at(ctx, n, log_inv), rho_local(n), type_at(n)))
        n *= 2
    table.append((N, _raw_at(ctx, N, log_inv), rho_local(N), type_at(N)))
    return OrderTypeEstimate(
        rho_est=rho_local(N),
        rho_raw=float(raw),
        rho_target=float(1 / params.alpha_gamma),
        type_est=type_at(N),
        table=table,
    )


def _raw_at(ctx, n: int, log_inv) -> float:
    li = log_inv(n)
    return float(n * ctx.ln(n) / li) if li > 0 else math.nan


# ---------------------------------------------------------------------------
# optional diagnostic


def classical_leroy_estimate(rho: Any, t: Any, prec: PrecisionConfig | int | None = None):
    """Published large-``t`` form of ``R_rho(-t**rho)`` for ``rho > 2`` (diagnostic only).

    ``2 rho**(-1/2) (2 pi)**((1-rho)/2) t**((1-rho)/2) exp(rho t cos(pi/rho)) sin(pi/rho + t rho sin(pi/rho))``.
    The logarithmic form for ``1 < rho < 2`` is not provided.
    """
    prec = as_precision(prec)
    ctx = working_context(prec.base_digits)
    r = to_real(ctx, rho)
    if r <= 2:
        raise DomainError("only rho > 2 is supported")
    tv = to_real(ctx, t)
    a0 = 2 / ctx.sqrt(r) * (2 * ctx.pi) ** ((1 - r) / 2)
    angle = ctx.pi / r
    return a0 * tv ** ((1 - r) / 2) * ctx.exp(r * tv * ctx.cos(angle)) * ctx.sin(angle + tv * r * ctx.sin(angle))
