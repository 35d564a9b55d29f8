import pytest

from leroy.errors import DivergentParametersError, DomainError
from leroy.laplace import (
    SUITE,
    laplace_lhs,
    laplace_rhs,
    laplace_rhs_multi_index,
    laplace_termwise,
    laplace_wright_form,
    laplace_wright_lhs,
    verify_point,
)
from leroy.numerics import working_context
from leroy.series import Params

M = working_context(60)


def test_rhs_trivial_cases():
    # gamma=2, alpha=beta=1: E_{1,1}(-1/s)/s = exp(-1) at s=1
    assert abs(laplace_rhs(Params(1, 1, 2), -1, 1, 20) - M.exp(-1)) < 1e-19
    # lambda = 0 and beta = 1: 1/s
    assert abs(laplace_rhs(Params(1, 1, "1.5"), 0, 3, 20) - M.mpf(1) / 3) < 1e-19


def test_lhs_matches_mittag_leffler_form():
    lhs = laplace_lhs(Params("0.5", 1, 2), -1, 2)
    rhs = laplace_rhs(Params("0.5", 1, 2), -1, 2)
    assert abs(lhs - rhs) < 1e-8


def test_gamma_three_paths_agree():
    p = Params("0.5", "0.75", 3)
    a = laplace_rhs(p, 1, 4, 25)
    b = laplace_rhs_multi_index(p, 1, 4, 25)
    assert abs(a - b) < 1e-23


def test_wright_form_trivial_and_oracle():
    assert abs(laplace_wright_form(Params(1, 1, 1), 2, 20) - 1) < 1e-18
    v = laplace_wright_form(Params("0.6", "0.8", 3), 3, 25)
    assert abs(v - M.mpf("0.4786408179337841026046329510728328229505")) < 1e-20
    assert abs(laplace_termwise(Params("0.6", "0.8", 3), 3, 25) - v) < 1e-20
    w = laplace_wright_form(Params("0.5", "0.5", 4), 10, 25)
    assert abs(w - M.mpf("0.02405938167951216698830370423995986199433")) < 1e-20


def test_domain_checks():
    with pytest.raises(DomainError):
        laplace_lhs(Params(1, 1, 1), 1, 2)
    with pytest.raises(DomainError):
        laplace_rhs(Params(1, 1, 2), 1, -1)
    with pytest.raises(DomainError):
        laplace_lhs(Params(1, 1, 2), 1j, 2)
    with pytest.raises(DomainError):
        laplace_wright_form(Params(1, 1, "2.5"), 2)
    # e^t grows as fast as e^{-st} decays at s = 1
    with pytest.raises(DivergentParametersError):
        laplace_wright_lhs(Params(1, 1, 1), 1)


@pytest.mark.slow
def test_full_suite():
    for alpha, beta, gamma, lam, s, kind in SUITE:
        c = verify_point(Params(alpha, beta, gamma), lam, s, kind=kind)
        assert c.scaled_residual <= 1e-6, (alpha, beta, gamma, lam, s, kind)
