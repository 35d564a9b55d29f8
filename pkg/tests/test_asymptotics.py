import math
import warnings
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from leroy.asymptotics import (
    ALGEBRAIC,
    BOUNDARY,
    OSCILLATORY,
    build_expansion,
    classify_regime,
    envelope_slope,
    estimate_order_type,
    eval_E_leading,
    eval_G_r,
    eval_sector_leading,
    eval_H,
    expand_negative_axis,
    in_leading_sector,
    leading_coefficient,
    pair_count,
    pair_count_by_search,
    pair_zeros,
    theta_prime,
)
from leroy.errors import DomainError
from leroy.numerics import working_context
from leroy.series import Params, eval_series

FIG1 = Params("0.6", "0.8", 3)
FIG2 = Params("0.5", "0.75", 4)
FIG3 = Params("0.5", "0.5", 4)
FIG4 = Params("0.7", "1.0", 3)


def test_figure_regimes():
    assert classify_regime(FIG1).label == ALGEBRAIC
    assert classify_regime(FIG2) == classify_regime(FIG2)
    assert classify_regime(FIG2).label == BOUNDARY and classify_regime(FIG2).P == 1
    assert classify_regime(FIG3).label == BOUNDARY
    r = classify_regime(FIG4)
    assert r.label == OSCILLATORY and r.P == 1 and r.alpha_m == Fraction(21, 10)


@pytest.mark.parametrize(
    "am, P",
    [("2.1", 1), ("3", 1), ("5.9", 1), ("6", 2), ("9.9", 2), ("10", 3), ("14", 4)],
)
def test_pair_count_matches_definition(am, P):
    am = Fraction(am)
    assert pair_count(am) == P
    assert pair_count_by_search(am) == P
    # 2P+1 is the smallest odd integer above alpha m / 2
    assert 2 * P + 1 > am / 2 >= 2 * P - 1


def test_non_integer_gamma_rejected():
    with pytest.raises(DomainError, match="non-integer gamma"):
        classify_regime(Params("0.5", 1, "2.5"))
    with pytest.raises(DomainError):
        expand_negative_axis(Params("0.5", 1, "2.5"), 10)


def test_inexact_boundary_uses_tolerance():
    alpha = mpmath.mpf(2) / 3
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        r = classify_regime(Params(alpha, 1, 3))
    assert r.label == BOUNDARY
    assert any("tolerance" in str(w.message) for w in caught)


def test_leading_coefficient_and_shift():
    a0 = leading_coefficient(FIG4)
    assert abs(float(a0) - 1 / (2 * math.pi * 0.7 * math.sqrt(3))) < 1e-15
    assert theta_prime(FIG1) == Fraction(3 * 4, 5) - 1
    exp = build_expansion(FIG1, 4)
    assert len(exp.h_coefficients) == 4 and exp.pair_harmonics == ()


def test_algebraic_series_far_out():
    ctx = working_context(40)
    for t in (2000, 5000):
        f = eval_series(FIG1, -t, 30).value
        h = eval_H(FIG1, t, 10, 30)
        assert abs(h / f - 1) < 1e-6
    # first term alone is -t**-1 / Gamma(beta - alpha)**m
    h1 = eval_H(FIG1, 1000, 1, 30)
    assert abs(h1 - ctx.rgamma(ctx.mpf("0.2")) ** 3 / 1000) < 1e-30


def test_boundary_regime_expansion_tracks_series():
    for t in (100, 400):
        f = eval_series(FIG2, -t, 20).value
        a = expand_negative_axis(FIG2, t, prec=20).value
        assert abs(f - a) < 0.02 * max(abs(f), 0.05)


def test_odd_harmonics_only():
    # alpha m = 6: two pairs, at angles pi/6 and 3 pi/6; an even multiple would be wrong
    p = Params(6, 1, 1)
    r = classify_regime(p)
    assert r.P == 2 and r.harmonics == (1, 3)
    t = 10**6
    f = eval_series(p, -t, 30).value
    total = expand_negative_axis(p, t, prec=30).value
    g3 = eval_G_r(p, t, 2, 30)
    assert abs(f - total) < 1e-3 * abs(g3)
    ctx = working_context(40)
    from leroy.asymptotics import _pair_term

    wrong = eval_G_r(p, t, 1, 30) + _pair_term(p, ctx.mpf(t), 2, ctx)
    assert abs(f - wrong) > 100 * abs(f - total)


def test_G_r_index_range():
    with pytest.raises(DomainError):
        eval_G_r(FIG4, 100, 2)
    assert eval_G_r(FIG1, 100, 1) != 0


def test_pair_zeros_are_zeros():
    zeros = pair_zeros(FIG2, 1000)
    assert len(zeros) > 5
    for t in zeros[:5]:
        g = eval_G_r(FIG2, t, 1, 20)
        scale = abs(eval_G_r(FIG2, t * 1.01, 1, 20)) + abs(eval_G_r(FIG2, t * 0.99, 1, 20))
        assert abs(g) < 1e-8 * scale


def test_envelope_slope_on_synthetic_leading_term():
    ts = np.linspace(1e3, 2e4, 1500)
    values = [eval_G_r(FIG4, float(t), 1, 15) for t in ts]
    slope = envelope_slope(FIG4, ts, values)
    assert abs(slope - 3 * math.cos(math.pi / 2.1)) < 0.01


def test_sector_form_on_positive_axis():
    p = Params("0.5", "1", "2")
    value, inside = eval_sector_leading(p, 2000, 20)
    assert inside
    f = eval_series(p, 2000, 20).value
    assert abs(f / value - 1) < 1e-2
    assert not in_leading_sector(p, -1)
    e = eval_E_leading(p, 2000, 20)
    assert abs(e / value - 1) < 1e-15


def test_order_estimate():
    est = estimate_order_type(Params("0.5", "1", "4"), 2000)
    assert abs(est.rho_est / 0.5 - 1) < 0.05
    assert est.rho_raw > est.rho_est
    assert abs(est.type_est - 4) < 0.1
    e = estimate_order_type(Params(1, 1, 1), 2000)
    assert abs(e.rho_est - 1) < 0.05
    assert len(e.table) >= 5


def test_expand_rejects_nonpositive_t():
    with pytest.raises(DomainError):
        expand_negative_axis(FIG1, 0)
