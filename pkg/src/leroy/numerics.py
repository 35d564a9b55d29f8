"""Extended-precision kernel: working contexts, exact parameter parsing and gamma functions.

Every operation takes its precision as an argument and builds a private
:class:`mpmath.MPContext`, so nothing here touches the global ``mpmath.mp``
state and all functions are safe to call from several threads at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Any, Union

import mpmath
from mpmath.ctx_mp_python import _mpc, _mpf

from .errors import DomainError, PoleError

Number = Union[int, float, complex, str, Fraction, Decimal, _mpf, _mpc]

DEFAULT_TARGET_DIGITS = 30
DEFAULT_GUARD_DIGITS = 10
DEFAULT_MAX_WORKING_DIGITS = 4000


@dataclass(frozen=True)
class PrecisionConfig:
    """Requested accuracy and the working-precision budget of one evaluation.

    Parameters
    ----------
    target_digits
        Decimal digits of accuracy requested for the output.
    guard_digits
        Extra digits carried on top of ``target_digits`` before any
        cancellation-driven escalation.
    max_working_digits
        Hard cap on the working precision; exceeding it raises
        :class:`~leroy.errors.PrecisionBudgetError`.
    """

    target_digits: int = DEFAULT_TARGET_DIGITS
    guard_digits: int = DEFAULT_GUARD_DIGITS
    max_working_digits: int = DEFAULT_MAX_WORKING_DIGITS

    def __post_init__(self) -> None:
        if int(self.target_digits) < 1:
            raise ValueError("target_digits must be >= 1")
        if int(self.guard_digits) < 0:
            raise ValueError("guard_digits must be >= 0")
        if self.max_working_digits < self.target_digits + self.guard_digits:
            raise ValueError("max_working_digits must be >= target_digits + guard_digits")

    @property
    def base_digits(self) -> int:
        return self.target_digits + self.guard_digits

    def with_target(self, digits: int) -> PrecisionConfig:
        cap = max(self.max_working_digits, digits + self.guard_digits)
        return PrecisionConfig(digits, self.guard_digits, cap)


def as_precision(prec: PrecisionConfig | int | None) -> PrecisionConfig:
    """Accept a config, a bare digit count, or ``None`` for the defaults."""
    if prec is None:
        return PrecisionConfig()
    if isinstance(prec, PrecisionConfig):
        return prec
    digits = int(prec)
    return PrecisionConfig(
        target_digits=digits,
        max_working_digits=max(DEFAULT_MAX_WORKING_DIGITS, digits + DEFAULT_GUARD_DIGITS),
    )


def working_context(digits: int) -> mpmath.MPContext:
    """A fresh mpmath context running at ``digits`` decimal digits."""
    ctx = mpmath.MPContext()
    ctx.dps = int(digits)
    return ctx


# ---------------------------------------------------------------------------
# exact parsing and conversion


def exact_fraction(x: Any) -> tuple[Fraction, bool]:
    """Convert a parameter to an exact rational.

    Returns ``(value, exact)``. Strings, integers, fractions and decimals are
    taken exactly as written. A Python float is read through its shortest
    round-trip representation (``0.6`` means 6/10), which is what a caller
    typing a literal intends. An mpmath number is converted from its binary
    value and flagged ``exact=False``.
    """
    if isinstance(x, bool):
        raise TypeError("boolean is not a valid parameter")
    if isinstance(x, Fraction):
        return x, True
    if isinstance(x, (int, Rational)):
        return Fraction(x), True
    if isinstance(x, Decimal):
        return Fraction(x), True
    if isinstance(x, float):
        if not math.isfinite(x):
            raise DomainError(f"parameter must be finite, got {x!r}")
        return Fraction(repr(x)), True
    if isinstance(x, str):
        try:
            return Fraction(x.strip()), True
        except ValueError:
            return Fraction(Decimal(x.strip())), True
    if isinstance(x, _mpf):
        man, exp = x.man_exp
        if man is None:
            raise DomainError(f"parameter must be finite, got {x!r}")
        return Fraction(int(man)) * Fraction(2) ** int(exp), False
    raise TypeError(f"cannot interpret {type(x).__name__} as a real parameter")


def to_real(ctx: mpmath.MPContext, x: Any) -> _mpf:
    """Convert ``x`` to a real number of ``ctx``; floats go through ``repr``."""
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    if isinstance(x, float):
        return ctx.mpf(repr(x))
    if isinstance(x, (Decimal, str)):
        return ctx.mpf(str(x).strip())
    if isinstance(x, _mpc):
        if x.imag != 0:
            raise DomainError(f"expected a real value, got {x}")
        return ctx.mpf(x.real)
    return ctx.mpf(x)


def to_number(ctx: mpmath.MPContext, z: Any) -> _mpf | _mpc:
    """Convert ``z`` to ``ctx``; real inputs stay real, complex inputs become ``mpc``."""
    if isinstance(z, complex):
        return ctx.mpc(to_real(ctx, z.real), to_real(ctx, z.imag))
    if isinstance(z, _mpc):
        return ctx.mpc(z)
    if isinstance(z, tuple) and len(z) == 2:
        return ctx.mpc(to_real(ctx, z[0]), to_real(ctx, z[1]))
    if isinstance(z, str) and ("j" in z or "i" in z.replace("inf", "")):
        w = complex(z.replace("i", "j").replace(" ", ""))
        return ctx.mpc(w)
    return to_real(ctx, z)


def is_real(z: Any) -> bool:
    return isinstance(z, _mpf)


def digits_of(ctx: mpmath.MPContext, x: Any) -> float:
    """Approximate ``log10 |x|``; ``-inf`` for zero."""
    if x == 0:
        return -math.inf
    return float(ctx.log10(abs(x)))


# ---------------------------------------------------------------------------
# gamma kernel


@dataclass(frozen=True)
class GammaValue:
    """Value of Gamma at a real point, with the pole flag and the reciprocal.

    ``reciprocal`` is exactly zero at a pole because 1/Gamma is entire.
    ``log_abs`` is ``log |Gamma(x)|`` and stays finite wherever ``value`` does.
    """

    value: Any
    is_pole: bool
    reciprocal: Any
    log_abs: Any


def _is_pole(ctx: mpmath.MPContext, w: Any) -> bool:
    if isinstance(w, _mpc):
        if w.imag != 0:
            return False
        w = w.real
    return bool(ctx.isint(w)) and w <= 0


def gamma_real(x: Number, prec: PrecisionConfig | int | None = None) -> GammaValue:
    """Gamma of a real argument at ``prec.target_digits`` relative accuracy."""
    prec = as_precision(prec)
    ctx = working_context(prec.base_digits)
    xv = to_real(ctx, x)
    if not ctx.isfinite(xv):
        raise DomainError("gamma_real needs a finite argument")
    if _is_pole(ctx, xv):
        return GammaValue(value=ctx.inf, is_pole=True, reciprocal=ctx.zero, log_abs=ctx.inf)
    value = ctx.gamma(xv)
    return GammaValue(
        value=value,
        is_pole=False,
        reciprocal=1 / value,
        log_abs=ctx.re(ctx.loggamma(xv)),
    )


def log_gamma_complex(z: Number, prec: PrecisionConfig | int | None = None, *, ctx=None):
    """Branch of log Gamma real on the positive axis, continuous off (-inf, 0].

    Raising ``exp(gamma * log_gamma_complex(w))`` gives the power
    ``[Gamma(w)]**gamma`` that is positive for positive real ``w``.
    """
    if ctx is None:
        ctx = working_context(as_precision(prec).base_digits)
    w = to_number(ctx, z)
    if _is_pole(ctx, w):
        raise PoleError(f"log-gamma pole at {w}")
    return ctx.loggamma(w)


def gamma_power(w: Number, gamma: Number, prec: PrecisionConfig | int | None = None, *, ctx=None):
    """``[Gamma(w)]**gamma`` on the principal branch; raises at poles."""
    if ctx is None:
        ctx = working_context(as_precision(prec).base_digits)
    g = to_real(ctx, gamma)
    wv = to_number(ctx, w)
    if _is_pole(ctx, wv):
        raise PoleError(f"gamma power undefined at pole {wv}")
    if is_real(wv) and wv > 0:
        return ctx.exp(g * ctx.loggamma(wv))
    if is_real(wv) and ctx.isint(g):
        return ctx.gamma(wv) ** int(g)
    return ctx.exp(g * ctx.loggamma(wv))


def recip_gamma_power(w: Number, gamma: Number, prec: PrecisionConfig | int | None = None, *, ctx=None):
    """``[Gamma(w)]**(-gamma)``; exactly zero at the poles of Gamma."""
    if ctx is None:
        ctx = working_context(as_precision(prec).base_digits)
    g = to_real(ctx, gamma)
    wv = to_number(ctx, w)
    if _is_pole(ctx, wv):
        return ctx.zero
    if is_real(wv) and wv > 0:
        return ctx.exp(-g * ctx.loggamma(wv))
    if is_real(wv) and ctx.isint(g):
        return ctx.rgamma(wv) ** int(g)
    return ctx.exp(-g * ctx.loggamma(wv))


def pochhammer(x: Number, j: int, prec: PrecisionConfig | int | None = None):
    """Rising factorial ``x (x+1) ... (x+j-1)``; the empty product is 1."""
    if j < 0:
        raise DomainError("pochhammer index must be non-negative")
    ctx = working_context(as_precision(prec).base_digits)
    xv = to_number(ctx, x)
    out = ctx.one
    for i in range(j):
        out *= xv + i
    return out


def stirling_log_gamma(x: Number, terms: int = 2, prec: PrecisionConfig | int | None = None):
    """Stirling approximation of ``log Gamma(x)``.

    ``terms=1`` is the bare form ``(x - 1/2) log x - x + log(2 pi)/2``;
    each further term adds the next Bernoulli correction
    ``B_{2j} / (2j (2j-1) x^(2j-1))``.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    ctx = working_context(as_precision(prec).base_digits)
    xv = to_number(ctx, x)
    out = (xv - ctx.mpf(1) / 2) * ctx.log(xv) - xv + ctx.log(2 * ctx.pi) / 2
    for j in range(1, terms):
        b = ctx.bernoulli(2 * j)
        out += b / (2 * j * (2 * j - 1) * xv ** (2 * j - 1))
    return out
