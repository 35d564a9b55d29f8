"""Loop-contour integral representations, evaluated by Gauss-Legendre panels.

Right loop (opens to +infinity, crosses the real axis at 0 < c < 1)::

    F(z) = 1/(2 pi i) int Gamma(-s) Gamma(1+s) / Gamma(alpha s + beta)**gamma (-z)**s ds + Gamma(beta)**(-gamma)

Left loop (opens to -infinity, crosses at -1 < c < 0)::

    F(z) = 1/(2 pi i) int Gamma(s) Gamma(1-s) / Gamma(beta - alpha s)**gamma (-z)**(-s) ds + Gamma(beta)**(-gamma)

and the extension to a negative first parameter uses the left loop with
``Gamma(-s) Gamma(1+s) (-z)**s / Gamma(beta - alpha s)**gamma``. The constant
``Gamma(beta)**(-gamma)`` comes from the pole at ``s = 0``, which no admissible
loop may enclose, so it is always added outside the integral.

Each loop is three straight pieces: two horizontal arms at heights ``phi1 <
0 < phi2`` running out to ``+-x_max`` and the vertical chord through ``c``.
Powers of gamma use ``exp(gamma * loggamma(w))``, the branch cut along
``w <= 0`` and positive for positive ``w``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Any, Callable

from .errors import DomainError, QuadratureError
from .numerics import PrecisionConfig, as_precision, is_real, to_number, working_context
from .series import EvalResult, Params

RIGHT_LOOP = "right_loop"
LEFT_LOOP = "left_loop"

DEFAULT_TARGET = 16
DEFAULT_NODES = 16
MAX_REFINEMENTS = 6


@dataclass(frozen=True)
class Contour:
    """Geometry and discretisation of one loop.

    ``x_max=None`` chooses the arm length from the integrand decay.
    ``panel_width`` is the coarsest panel width; each refinement halves it.
    """

    orientation: str = RIGHT_LOOP
    c: float | None = None
    phi1: float = -1.0
    phi2: float = 1.0
    x_max: float | None = None
    nodes: int = DEFAULT_NODES
    panel_width: float = 1.0
    max_refinements: int = MAX_REFINEMENTS

    def __post_init__(self) -> None:
        if self.orientation not in (RIGHT_LOOP, LEFT_LOOP):
            raise DomainError(f"unknown orientation {self.orientation!r}")
        if self.c is None:
            object.__setattr__(self, "c", 0.5 if self.orientation == RIGHT_LOOP else -0.5)
        if not self.phi1 < 0 < self.phi2:
            raise DomainError("strip heights must satisfy phi1 < 0 < phi2")
        if self.orientation == RIGHT_LOOP and not 0 < self.c < 1:
            raise DomainError("right loop must cross the real axis at 0 < c < 1")
        if self.orientation == LEFT_LOOP and not -1 < self.c < 0:
            raise DomainError("left loop must cross the real axis at -1 < c < 0")

    @classmethod
    def right(cls, **kw: Any) -> Contour:
        return cls(orientation=RIGHT_LOOP, **kw)

    @classmethod
    def left(cls, **kw: Any) -> Contour:
        return cls(orientation=LEFT_LOOP, **kw)


# ---------------------------------------------------------------------------
# Gauss-Legendre rule


@lru_cache(maxsize=64)
def _gauss_legendre_cached(n: int, dps: int) -> tuple[tuple, tuple]:
    ctx = working_context(dps + 5)
    nodes, weights = [], []
    for i in range(1, (n + 1) // 2 + 1):
        x = ctx.cos(ctx.pi * (i - ctx.mpf(1) / 4) / (n + ctx.mpf(1) / 2))
        for _ in range(100):
            p0, p1 = ctx.one, x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < ctx.mpf(10) ** (-(dps + 3)):
                break
        p0, p1 = ctx.one, x
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = n * (x * p1 - p0) / (x * x - 1)
        w = 2 / ((1 - x * x) * dp * dp)
        nodes.extend([x, -x])
        weights.extend([w, w])
    if n % 2:
        nodes.pop()
        weights.pop()
    return tuple(nodes), tuple(weights)


def gauss_legendre(n: int, ctx) -> tuple[list, list]:
    """Nodes and weights of the ``n``-point rule on ``[-1, 1]`` at ``ctx`` precision."""
    xs, ws = _gauss_legendre_cached(n, ctx.dps)
    return [ctx.mpf(x) for x in xs], [ctx.mpf(w) for w in ws]


def _panel_sum(f: Callable, a, b, panels: int, rule, ctx):
    xs, ws = rule
    h = (b - a) / panels
    total = ctx.zero
    for p in range(panels):
        mid = a + (p + ctx.mpf(1) / 2) * h
        half = h / 2
        for x, w in zip(xs, ws):
            total += w * f(mid + half * x)
    return total * (h / 2)


# ---------------------------------------------------------------------------
# integrands


def _log_neg(ctx, z):
    # principal log(-z); -z on the negative axis takes arg = +pi
    return ctx.log(-z)


def _plus_integrand(params: Params, z, ctx):
    alpha, beta, gamma = params.mp(ctx)
    lz = _log_neg(ctx, z)

    def f(s):
        return -ctx.pi / ctx.sinpi(s) * ctx.exp(s * lz - gamma * ctx.loggamma(alpha * s + beta))

    return f


def _minus_integrand(params: Params, z, ctx):
    alpha, beta, gamma = params.mp(ctx)
    lz = _log_neg(ctx, z)

    def f(s):
        return ctx.pi / ctx.sinpi(s) * ctx.exp(-s * lz - gamma * ctx.loggamma(beta - alpha * s))

    return f


def _extension_integrand(params: Params, z, ctx):
    alpha, beta, gamma = params.mp(ctx)
    lz = _log_neg(ctx, z)

    def f(s):
        return -ctx.pi / ctx.sinpi(s) * ctx.exp(s * lz - gamma * ctx.loggamma(beta - alpha * s))

    return f


# ---------------------------------------------------------------------------
# loop integration


@dataclass
class _LoopPlan:
    x_end: float
    log_peak: float


def _plan_arms(make: Callable, params: Params, z, contour: Contour, target: int, direction: int) -> _LoopPlan:
    # march along both arms in low precision until the integrand is below
    # 10**-(target+5) and decreasing
    ctx = working_context(20)
    f = make(params, to_number(ctx, z), ctx)
    c = contour.c
    limit = math.log(10.0) * -(target + 5)
    peak = -math.inf
    for y in (contour.phi1, 0.0, contour.phi2):
        peak = max(peak, _log_abs(ctx, f(ctx.mpc(c, y))))
    if contour.x_max is not None:
        x_end = c + direction * contour.x_max
        for x in _frange(c, x_end, direction):
            for y in (contour.phi1, contour.phi2):
                peak = max(peak, _log_abs(ctx, f(ctx.mpc(x, y))))
        return _LoopPlan(x_end, peak)
    x = c
    prev = math.inf
    step = 1.0
    while True:
        x += direction * step
        val = max(_log_abs(ctx, f(ctx.mpc(x, y))) for y in (contour.phi1, contour.phi2))
        peak = max(peak, val)
        if val < limit and val < prev:
            return _LoopPlan(x, peak)
        prev = val
        if abs(x - c) > 1e5:
            raise QuadratureError("contour quadrature failed: integrand does not decay along the arms")
        if abs(x - c) > 64:
            step = min(step * 1.25, 64.0)


def _frange(a: float, b: float, direction: int):
    x = a
    while direction * (b - x) > 0:
        x = min(x + 1.0, b) if direction > 0 else max(x - 1.0, b)
        yield x


def _log_abs(ctx, v) -> float:
    a = abs(v)
    if a == 0:
        return -math.inf
    return float(ctx.ln(a))


def _integrate_loop(
    make: Callable,
    params: Params,
    z: Any,
    contour: Contour,
    prec: PrecisionConfig,
    *,
    crossing: float | None = None,
) -> EvalResult:
    """``1/(2 pi i)`` times the loop integral, with the error from panel halving."""
    if crossing is not None:
        contour = _shifted(contour, crossing)
    direction = 1 if contour.orientation == RIGHT_LOOP else -1
    plan = _plan_arms(make, params, z, contour, prec.target_digits, direction)
    extra = max(0, int(math.ceil(plan.log_peak / math.log(10.0))))
    wp = prec.base_digits + extra
    if wp > prec.max_working_digits:
        raise QuadratureError(f"contour quadrature failed: needs {wp} digits")
    ctx = working_context(wp)
    f = make(params, to_number(ctx, z), ctx)
    rule = gauss_legendre(contour.nodes, ctx)
    c = ctx.mpf(contour.c)
    p1, p2 = ctx.mpf(contour.phi1), ctx.mpf(contour.phi2)
    lo, hi = (c, ctx.mpf(plan.x_end)) if direction > 0 else (ctx.mpf(plan.x_end), c)
    arm_panels = max(1, int(math.ceil(float(hi - lo) / contour.panel_width)))
    # the chord passes within min(frac(c), 1 - frac(c)) of a pole of the sine factor
    gap = min(contour.c - math.floor(contour.c), math.ceil(contour.c) - contour.c) or 1.0
    chord_width = min(contour.panel_width, gap)
    chord_panels = max(1, int(math.ceil((contour.phi2 - contour.phi1) / chord_width)))
    tol = ctx.mpf(10) ** (-prec.target_digits)

    def bottom(x):
        return f(ctx.mpc(x, p1))

    def top(x):
        return f(ctx.mpc(x, p2))

    def chord(y):
        return f(ctx.mpc(c, y))

    def total(level: int):
        k = 2**level
        arms = _panel_sum(top, lo, hi, arm_panels * k, rule, ctx) - _panel_sum(bottom, lo, hi, arm_panels * k, rule, ctx)
        if direction < 0:
            arms = -arms
        vertical = ctx.mpc(0, 1) * _panel_sum(chord, p1, p2, chord_panels * k, rule, ctx)
        return (arms + vertical) / (2 * ctx.pi * ctx.mpc(0, 1))

    previous = total(0)
    diff = None
    for level in range(1, contour.max_refinements + 1):
        current = total(level)
        diff = abs(current - previous)
        scale = max(ctx.one, abs(current))
        if diff <= tol * scale:
            break
        previous = current
    else:
        raise QuadratureError(
            f"contour quadrature failed: refinement difference {ctx.nstr(diff, 3)} after {contour.max_refinements} halvings"
        )
    peak = ctx.exp(plan.log_peak)
    length = abs(hi - lo) * 2 + (p2 - p1)
    rounding = peak * length * ctx.mpf(10) ** (2 - wp)
    truncation = ctx.mpf(10) ** (-(prec.target_digits + 5)) * 2
    return EvalResult(
        value=current,
        abs_err=diff + rounding + truncation,
        terms_used=contour.nodes * (2 * arm_panels + chord_panels) * 2**level,
        working_digits=wp,
        method="contour",
        diagnostics={
            "orientation": contour.orientation,
            "c": contour.c,
            "phi": (contour.phi1, contour.phi2),
            "x_end": plan.x_end,
            "refinements": level,
            "branch": "principal arg(-z) in (-pi, pi]",
        },
    )


def _shifted(contour: Contour, crossing: float) -> Contour:
    # crossing points outside the admissible interval are only used by the
    # residue bookkeeping, so bypass the constructor check
    shifted = replace(contour, c=0.5 if contour.orientation == RIGHT_LOOP else -0.5)
    object.__setattr__(shifted, "c", crossing)
    return shifted


def _leading_constant(params: Params, ctx):
    alpha, beta, gamma = params.mp(ctx)
    return ctx.exp(-gamma * ctx.loggamma(beta))


def _finish(result: EvalResult, params: Params, z: Any, *, constant: bool = True) -> EvalResult:
    ctx = working_context(result.working_digits)
    value = ctx.mpc(result.value)
    if constant:
        value += _leading_constant(params, ctx)
    # the function is real on the real axis; the imaginary part is quadrature noise
    if is_real(to_number(ctx, z)):
        value = value.real
    result.value = value
    return result


def _precision(prec) -> PrecisionConfig:
    return as_precision(DEFAULT_TARGET if prec is None else prec)


def eval_contour_plus(
    params: Params,
    z: Any,
    contour: Contour | None = None,
    prec: PrecisionConfig | int | None = None,
) -> EvalResult:
    """``F(z)`` from the right-loop integral; ``z`` must lie off ``(-inf, 0]``."""
    prec = _precision(prec)
    contour = contour or Contour.right()
    if contour.orientation != RIGHT_LOOP:
        raise DomainError("eval_contour_plus needs a right loop")
    probe = to_number(working_context(30), z)
    zc = complex(probe)
    if zc.imag == 0 and zc.real <= 0:
        raise DomainError("z on the cut (-inf, 0] of the right-loop representation")
    result = _integrate_loop(_plus_integrand, params, z, contour, prec)
    return _finish(result, params, z)


def eval_contour_minus(
    params: Params,
    z: Any,
    contour: Contour | None = None,
    prec: PrecisionConfig | int | None = None,
) -> EvalResult:
    """``F(z)`` from the left-loop integral; ``z`` must lie off ``[0, +inf)``."""
    prec = _precision(prec)
    contour = contour or Contour.left()
    if contour.orientation != LEFT_LOOP:
        raise DomainError("eval_contour_minus needs a left loop")
    zc = complex(to_number(working_context(30), z))
    if zc.imag == 0 and zc.real >= 0:
        raise DomainError("z on the cut [0, +inf) of the left-loop representation")
    result = _integrate_loop(_minus_integrand, params, z, contour, prec)
    return _finish(result, params, z)


def eval_extension_contour(
    params: Params,
    z: Any,
    contour: Contour | None = None,
    prec: PrecisionConfig | int | None = None,
) -> EvalResult:
    """Extension to a negative first parameter from the left-loop integral.

    Equals ``-sum_{k>=1} z**(-k) / Gamma(alpha k + beta)**gamma`` for any ``z != 0``.
    """
    prec = _precision(prec)
    contour = contour or Contour.left()
    if contour.orientation != LEFT_LOOP:
        raise DomainError("eval_extension_contour needs a left loop")
    if complex(to_number(working_context(30), z)) == 0:
        raise DomainError("extension is undefined at z = 0")
    return _finish(_integrate_loop(_extension_integrand, params, z, contour, prec), params, z, constant=False)


def pushed_contour_partial_sum(
    params: Params,
    z: Any,
    n: int,
    contour: Contour | None = None,
    prec: PrecisionConfig | int | None = None,
) -> EvalResult:
    """Difference between the right-loop integral and the same loop pushed to ``c = n + 1/2``.

    The two loops enclose exactly the poles ``s = 1..n``, so the difference is
    ``sum_{k=1}^{n} z**k / Gamma(alpha k + beta)**gamma``.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    prec = _precision(prec)
    contour = contour or Contour.right()
    near = _integrate_loop(_plus_integrand, params, z, contour, prec)
    far = _integrate_loop(_plus_integrand, params, z, contour, prec, crossing=n + 0.5)
    wp = max(near.working_digits, far.working_digits)
    ctx = working_context(wp)
    return EvalResult(
        value=ctx.mpc(near.value) - ctx.mpc(far.value),
        abs_err=near.abs_err + far.abs_err,
        terms_used=near.terms_used + far.terms_used,
        working_digits=wp,
        method="contour",
        diagnostics={"near": near.diagnostics, "far": far.diagnostics, "poles": n},
    )


def arm_decay(params: Params, z: Any, contour: Contour | None = None, prec: PrecisionConfig | int | None = None) -> float:
    """``log10`` of the largest integrand modulus at the arm ends chosen for ``z``."""
    prec = _precision(prec)
    contour = contour or Contour.right()
    direction = 1 if contour.orientation == RIGHT_LOOP else -1
    make = _plus_integrand if direction > 0 else _minus_integrand
    plan = _plan_arms(make, params, z, contour, prec.target_digits, direction)
    ctx = working_context(prec.base_digits)
    f = make(params, to_number(ctx, z), ctx)
    return max(_log_abs(ctx, f(ctx.mpc(plan.x_end, y))) for y in (contour.phi1, contour.phi2)) / math.log(10.0)
