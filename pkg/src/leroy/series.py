"""Power-series evaluation of the Le Roy type function and its special cases.

The function is

    F(z) = sum_{k>=0} z**k / Gamma(alpha*k + beta)**gamma

and the extension to a negative first parameter is the reciprocal-argument
series ``-sum_{k>=1} z**(-k) / Gamma(alpha*k + beta)**gamma``.

All evaluators share :func:`sum_power_series`, which owns the stopping rule
and the working-precision escalation; the Fox-Wright evaluator in
:mod:`leroy.wright` uses the same routine.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from mpmath.ctx_mp_python import _mpc

from .errors import DomainError, PrecisionBudgetError, TermBudgetError
from .numerics import (
    PrecisionConfig,
    as_precision,
    exact_fraction,
    is_real,
    to_number,
    working_context,
)

DEFAULT_MAX_TERMS = 200_000
# peak index beyond which positive arguments are summed around the peak only
WINDOW_THRESHOLD = 4000

METHODS = ("series", "contour", "asymptotic", "fox_wright")


@dataclass(frozen=True, init=False)
class Params:
    """Parameter triple ``(alpha, beta, gamma)``, stored as exact rationals.

    Decimal strings and float literals are read exactly as written, so the
    integer test on ``gamma`` and the regime test ``alpha*m == 2`` never
    depend on binary rounding. ``exact`` is False only when a parameter came
    in as a binary mpmath number.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    exact: bool

    def __init__(self, alpha: Any, beta: Any, gamma: Any = 1) -> None:
        a, ea = exact_fraction(alpha)
        b, eb = exact_fraction(beta)
        g, eg = exact_fraction(gamma)
        if a <= 0 or b <= 0 or g <= 0:
            raise DomainError(f"alpha, beta, gamma must all be positive (got {a}, {b}, {g})")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        object.__setattr__(self, "gamma", g)
        object.__setattr__(self, "exact", ea and eb and eg)

    def __repr__(self) -> str:
        return f"Params(alpha={_fmt(self.alpha)}, beta={_fmt(self.beta)}, gamma={_fmt(self.gamma)})"

    @property
    def gamma_is_integer(self) -> bool:
        return self.gamma.denominator == 1

    @property
    def m(self) -> int | None:
        return int(self.gamma) if self.gamma_is_integer else None

    @property
    def alpha_gamma(self) -> Fraction:
        return self.alpha * self.gamma

    def mp(self, ctx) -> tuple:
        """The triple as numbers of ``ctx``."""
        return tuple(ctx.mpf(q.numerator) / q.denominator for q in (self.alpha, self.beta, self.gamma))

    def replace(self, **changes: Any) -> Params:
        values = {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}
        values.update(changes)
        return Params(**values)


def _fmt(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return repr(float(q)) if Fraction(repr(float(q))) == q else str(q)


@dataclass
class EvalResult:
    """A computed value with its absolute error estimate and diagnostics."""

    value: Any
    abs_err: Any
    terms_used: int
    working_digits: int
    method: str
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")

    def __complex__(self) -> complex:
        return complex(self.value)

    def __float__(self) -> float:
        if isinstance(self.value, _mpc):
            if self.value.imag != 0:
                raise TypeError("complex result has no float value")
            return float(self.value.real)
        return float(self.value)


# ---------------------------------------------------------------------------
# coefficient tables


class LeRoyCoefficients:
    """Memoised ``Gamma(alpha*k + beta)**(-gamma)``, one table per working precision.

    Sharing one instance across evaluations at the same precision gives
    identical results to building the coefficients afresh; the lock keeps
    concurrent extension of a table consistent.
    """

    def __init__(self, params: Params) -> None:
        self.params = params
        self._tables: dict[int, list] = {}
        self._lock = threading.Lock()

    def __call__(self, ctx, k: int):
        table = self._tables.get(ctx.prec)
        if table is not None and k < len(table):
            return table[k]
        with self._lock:
            table = self._tables.setdefault(ctx.prec, [])
            if k >= len(table):
                alpha, beta, gamma = self.params.mp(ctx)
                for j in range(len(table), k + 1):
                    table.append(ctx.exp(-gamma * ctx.loggamma(alpha * j + beta)))
            return table[k]


# ---------------------------------------------------------------------------
# shared summation engine


def sum_power_series(
    coefficient: Callable[[Any, int], Any],
    z: Any,
    prec: PrecisionConfig | int | None = None,
    *,
    start: int = 0,
    extra_digits: int = 0,
    min_working_digits: int = 0,
    max_terms: int = DEFAULT_MAX_TERMS,
    method: str = "series",
    max_ratio: float = 0.5,
) -> EvalResult:
    """Sum ``sum_{k>=start} coefficient(ctx, k) * w**k`` to the requested accuracy.

    ``z`` is the series variable ``w``, or a callable ``ctx -> w`` when the
    variable must be formed at working precision (e.g. ``1/z``).

    Summation stops at the first ``k`` where the current term, the next term
    and the geometric tail bound ``|t_k| q/(1-q)`` (``q`` the next term ratio,
    required below ``max_ratio``) all fall under ``10**-target * max(1, |S|)``. The
    bound is rigorous when the term ratios are non-increasing, which holds for
    log-convex coefficient denominators such as ``Gamma(alpha*k+beta)**gamma``.

    The first pass runs at ``target + guard + extra_digits`` digits. If the
    largest term exceeds ``max(1, |S|)`` by more digits than that allowance
    covers, the sum is recomputed at a precision sized from the observed
    cancellation.
    """
    prec = as_precision(prec)
    eps_digits = prec.target_digits
    wp = max(prec.base_digits + int(extra_digits), int(min_working_digits))
    while True:
        if wp > prec.max_working_digits:
            raise PrecisionBudgetError(
                f"precision budget exhausted: need {wp} digits, cap is {prec.max_working_digits}"
            )
        ctx = working_context(wp)
        w = z(ctx) if callable(z) else to_number(ctx, z)
        eps = ctx.mpf(10) ** (-eps_digits)
        absw = abs(w)

        total = ctx.zero
        maxterm = ctx.zero
        wk = w**start if start else ctx.one
        k = start
        c_next = coefficient(ctx, k)
        tail = ctx.zero
        n = 0
        while True:
            c = c_next
            term = c * wk
            total += term
            n += 1
            aterm = abs(term)
            if aterm > maxterm:
                maxterm = aterm
            if absw == 0:
                break
            c_next = coefficient(ctx, k + 1)
            if c != 0 and c_next != 0:
                q = abs(c_next / c) * absw
                if q < max_ratio:
                    thr = eps * max(ctx.one, abs(total))
                    bound = aterm * q / (1 - q)
                    if aterm <= thr and bound <= thr:
                        tail = bound
                        break
            elif c == 0 and c_next == 0 and k > start + 64:
                # an identically vanishing tail would otherwise never stop
                break
            if n >= max_terms:
                raise TermBudgetError(f"term budget exhausted after {n} terms")
            k += 1
            wk *= w

        scale = max(ctx.one, abs(total))
        lost = max(0.0, float(ctx.log10(maxterm / scale))) if maxterm > 0 else 0.0
        room = wp - 1 - math.log10(n + 1) - lost
        if room >= eps_digits + 1:
            rounding = (n + 1) * maxterm * ctx.mpf(10) ** (1 - wp)
            return EvalResult(
                value=total,
                abs_err=tail + rounding,
                terms_used=n,
                working_digits=wp,
                method=method,
                diagnostics={"cancellation_digits": lost, "max_term": maxterm},
            )
        wp = max(wp + 5, prec.base_digits + int(math.ceil(lost + math.log10(n + 1))) + 2)


# ---------------------------------------------------------------------------
# Le Roy type function


def cancellation_digits(params: Params, z: Any) -> int:
    """Extra digits for summing at ``z``: ``gamma |z|^(1/(alpha gamma)) log10 e``.

    The largest series term is about ``exp(gamma |z|^(1/(alpha gamma)))``;
    on the positive axis every term is positive and nothing cancels.
    """
    zc = complex(z) if not isinstance(z, str) else complex(z.replace("i", "j"))
    if zc.imag == 0 and zc.real >= 0:
        return 0
    r = abs(zc)
    if r == 0:
        return 0
    g = float(params.gamma)
    ag = float(params.alpha_gamma)
    lr = math.log(r) / ag
    if lr > 700:
        raise PrecisionBudgetError(f"|z|={r:.3g} is far beyond any feasible working precision")
    return int(math.ceil(g * math.exp(lr) * math.log10(math.e))) + 2


def _peak_index(params: Params, x: float) -> float:
    """Index of the largest term ``x**k / Gamma(alpha k + beta)**gamma`` for ``x > 0``."""
    ag = float(params.alpha_gamma)
    return (math.exp(math.log(x) / ag) - float(params.beta)) / float(params.alpha)


def eval_series(
    params: Params,
    z: Any,
    prec: PrecisionConfig | int | None = None,
    *,
    max_terms: int = DEFAULT_MAX_TERMS,
    cache: LeRoyCoefficients | None = None,
    min_working_digits: int = 0,
) -> EvalResult:
    """Evaluate ``F_{alpha,beta}^{(gamma)}(z)`` from its defining power series.

    Parameters
    ----------
    params
        The parameter triple.
    z
        Argument: int, float, complex, decimal string or mpmath number.
    prec
        Accuracy target; the result carries about ``target_digits`` correct
        digits relative to ``max(1, |F(z)|)``.
    cache
        Optional shared coefficient table (see :class:`LeRoyCoefficients`).
    """
    prec = as_precision(prec)
    coeff = cache if cache is not None else LeRoyCoefficients(params)
    probe = working_context(20)
    zv = to_number(probe, z)
    if is_real(zv) and zv > 0 and _peak_index(params, float(zv)) > WINDOW_THRESHOLD:
        return _eval_positive_window(params, z, prec)
    extra = cancellation_digits(params, complex(zv))
    result = sum_power_series(
        coeff,
        z,
        prec,
        extra_digits=extra,
        min_working_digits=min_working_digits,
        max_terms=max_terms,
    )
    result.diagnostics["params"] = repr(params)
    return result


def eval_series_many(
    params: Params,
    zs: list,
    prec: PrecisionConfig | int | None = None,
    *,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> list[EvalResult]:
    """Evaluate on a list of arguments sharing one coefficient table.

    Every point runs at the working precision needed by the worst point, so
    the coefficients are computed once.
    """
    prec = as_precision(prec)
    if not zs:
        return []
    probe = working_context(20)
    extra = max(cancellation_digits(params, complex(to_number(probe, z))) for z in zs)
    wp = prec.base_digits + extra
    cache = LeRoyCoefficients(params)
    return [
        eval_series(params, z, prec, max_terms=max_terms, cache=cache, min_working_digits=wp)
        for z in zs
    ]


def _eval_positive_window(params: Params, z: Any, prec: PrecisionConfig) -> EvalResult:
    # Positive argument with a far-away peak: terms are log-concave in k, so
    # sum outwards from the peak and bound both tails geometrically.
    probe = working_context(20)
    kp = _peak_index(params, float(to_number(probe, z)))
    log_scale = kp * abs(math.log(float(to_number(probe, z)))) + 1.0
    wp = prec.base_digits + int(math.ceil(math.log10(log_scale))) + 3
    if wp > prec.max_working_digits:
        raise PrecisionBudgetError(f"precision budget exhausted: need {wp} digits")
    ctx = working_context(wp)
    alpha, beta, gamma = params.mp(ctx)
    x = to_number(ctx, z)
    lnx = ctx.ln(x)

    def logterm(k: int):
        return k * lnx - gamma * ctx.loggamma(alpha * k + beta)

    k0 = max(0, int(round(kp)))
    l0 = logterm(k0)
    while True:
        up = logterm(k0 + 1)
        if up > l0:
            k0, l0 = k0 + 1, up
            continue
        if k0 > 0:
            down = logterm(k0 - 1)
            if down > l0:
                k0, l0 = k0 - 1, down
                continue
        break

    log_eps = -(prec.target_digits + 2) * ctx.ln(10)
    total = ctx.one
    n = 1
    tails = ctx.zero
    prev = l0
    k = k0 + 1
    while True:
        lk = logterm(k)
        total += ctx.exp(lk - l0)
        n += 1
        step = lk - prev
        prev = lk
        if lk - l0 < log_eps:
            q = ctx.exp(step)
            tails += ctx.exp(lk - l0) * q / (1 - q)
            break
        k += 1
    prev = l0
    k = k0 - 1
    while k >= 0:
        lk = logterm(k)
        total += ctx.exp(lk - l0)
        n += 1
        step = lk - prev
        prev = lk
        if lk - l0 < log_eps:
            q = ctx.exp(step)
            tails += ctx.exp(lk - l0) * q / (1 - q)
            break
        k -= 1
    scale = ctx.exp(l0)
    value = scale * total
    rounding = n * abs(l0) * ctx.mpf(10) ** (1 - wp) * value
    return EvalResult(
        value=value,
        abs_err=scale * tails + rounding,
        terms_used=n,
        working_digits=wp,
        method="series",
        diagnostics={"window": (k, k0), "params": repr(params)},
    )


def eval_extension(
    params: Params,
    z: Any,
    prec: PrecisionConfig | int | None = None,
    *,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalResult:
    """Extension to a negative first parameter, ``-sum_{k>=1} z**(-k) / Gamma(alpha k+beta)**gamma``.

    It equals ``Gamma(beta)**(-gamma) - F(1/z)``.
    """
    prec = as_precision(prec)
    probe = working_context(20)
    zv = to_number(probe, z)
    if zv == 0:
        raise DomainError("extension is undefined at z = 0")
    extra = cancellation_digits(params, 1 / complex(zv))

    def inverse(ctx):
        return 1 / to_number(ctx, z)

    result = sum_power_series(
        LeRoyCoefficients(params), inverse, prec, start=1, extra_digits=extra, max_terms=max_terms
    )
    result.value = -result.value
    result.diagnostics["params"] = repr(params)
    return result


def eval_mittag_leffler(alpha: Any, beta: Any, z: Any, prec: PrecisionConfig | int | None = None) -> EvalResult:
    """Two-parameter Mittag-Leffler function, the ``gamma = 1`` case."""
    return eval_series(Params(alpha, beta, 1), z, prec)


def eval_leroy_classical(rho: Any, z: Any, prec: PrecisionConfig | int | None = None) -> EvalResult:
    """Classical Le Roy function ``sum z**k / ((k+1)!)**rho``, i.e. ``alpha=1, beta=2, gamma=rho``."""
    return eval_series(Params(1, 2, rho), z, prec)
