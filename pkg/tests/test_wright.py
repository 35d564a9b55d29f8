import math
from fractions import Fraction

import pytest

from leroy.errors import DivergentParametersError, DomainError
from leroy.numerics import working_context
from leroy.series import Params, eval_series
from leroy.wright import UndefinedTermError, WrightParams, eval_multi_index_ml, eval_wright

M = working_context(60)


def leroy_as_wright(alpha, beta, m):
    return WrightParams(upper=[(1, 1)], lower=[(alpha, beta)] * m)


def test_kappa_and_radius():
    w = leroy_as_wright("0.6", "0.8", 3)
    assert w.kappa == Fraction(9, 5)
    assert w.radius() == math.inf
    geometric = WrightParams(upper=[(1, 1)], lower=[])
    assert geometric.kappa == 0 and geometric.radius() == pytest.approx(1.0)
    assert WrightParams(upper=[(1, 1), (1, 1)], lower=[]).radius() == 0.0
    with pytest.raises(DomainError):
        WrightParams(upper=[(0, 1)])


def test_exponential_and_geometric():
    e = eval_wright(WrightParams(lower=[]), 1, 30).value
    assert abs(e - M.e) < 1e-29
    # 1Psi_0[(1,1)](z) = sum z^k = 1/(1-z) inside the unit disc
    g = eval_wright(WrightParams(upper=[(1, 1)]), "0.5", 30).value
    assert abs(g - 2) < 1e-28
    with pytest.raises(DivergentParametersError):
        eval_wright(WrightParams(upper=[(1, 1)]), 1)
    with pytest.raises(DivergentParametersError):
        eval_wright(WrightParams(upper=[(1, 1), (1, 1)]), "0.1")


@pytest.mark.parametrize("z", [-20, 2, 3 + 1j, "0.5"])
@pytest.mark.parametrize("abm", [("0.6", "0.8", 3), ("0.5", "0.75", 4), ("1.5", "0.25", 2)])
def test_matches_series(abm, z):
    a, b, m = abm
    s = eval_series(Params(a, b, m), z, 40).value
    w = eval_wright(leroy_as_wright(a, b, m), z, 40).value
    assert abs(s - w) <= 1e-37 * max(1, abs(s))


def test_multi_index_equals_leroy():
    pair = ("0.6", "0.8")
    v = eval_multi_index_ml([pair] * 3, -5, 30).value
    s = eval_series(Params("0.6", "0.8", 3), -5, 30).value
    assert abs(v - s) < 1e-28
    with pytest.raises(DomainError):
        eval_multi_index_ml([], 1)


def test_lower_pole_gives_zero_upper_pole_raises():
    # 1/Gamma(-k) = 0: only the k=0 term survives beyond the pole set
    w = WrightParams(upper=[], lower=[(1, 0)])
    v = eval_wright(w, 1, 20).value
    expected = sum(M.rgamma(k + 1) * M.rgamma(k) for k in range(1, 60))
    assert abs(v - expected) < 1e-18
    with pytest.raises(UndefinedTermError):
        eval_wright(WrightParams(upper=[(1, -2)], lower=[(1, 1)]), 1)
