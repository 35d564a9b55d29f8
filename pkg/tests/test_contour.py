import pytest

from leroy.contour import (
    Contour,
    arm_decay,
    eval_contour_minus,
    eval_contour_plus,
    eval_extension_contour,
    gauss_legendre,
    pushed_contour_partial_sum,
)
from leroy.errors import DomainError
from leroy.numerics import working_context
from leroy.series import Params, eval_extension, eval_series

M = working_context(60)

# naive high-precision summation, computed once and frozen
ORACLE = {
    ("plus", "0.6", "0.8", "3", 2 + 1j): M.mpc("6.187782368972256351563005314063902198888", "11.31627212421070644616166011755050047345"),
    ("plus", "0.8", "1", "2.5", 1j): M.mpc("0.5967441635887148616367376752581591168351", "1.129666599690305009330131491380535963019"),
    ("minus", "0.5", "0.75", "4", -10): M.mpf("0.05261087438102659543647996499561981017826"),
    ("minus", "0.6", "0.8", "3", -2 + 2j): M.mpc("-0.06813256207144007579521918104658205647754", "-0.4792384666767818475665514436128495645247"),
}
EXT_ORACLE = M.mpf("-0.6740027400540428057422884707234864163681")

FIG1 = Params("0.6", "0.8", 3)


def test_contour_invariants():
    assert Contour.right().c == 0.5 and Contour.left().c == -0.5
    with pytest.raises(DomainError):
        Contour.right(c=1.2)
    with pytest.raises(DomainError):
        Contour.left(c=0.3)
    with pytest.raises(DomainError):
        Contour.right(phi1=0.5)


def test_gauss_legendre_integrates_polynomials():
    ctx = working_context(40)
    xs, ws = gauss_legendre(8, ctx)
    assert abs(sum(ws) - 2) < 1e-38
    # exact through degree 15
    assert abs(sum(w * x**14 for x, w in zip(xs, ws)) - ctx.mpf(2) / 15) < 1e-37


def test_trivial_exponential():
    e = eval_contour_plus(Params(1, 1, 1), 1, prec=16)
    assert abs(e.value - M.e) < 1e-12
    r = eval_contour_minus(Params(1, 1, 1), -1, prec=16)
    assert abs(r.value - 1 / M.e) < 1e-10
    x = eval_extension_contour(Params(1, 1, 1), 2, prec=16)
    assert abs(x.value + (M.sqrt(M.e) - 1)) < 1e-10


@pytest.mark.parametrize("key", list(ORACLE), ids=[str(k) for k in ORACLE])
def test_against_oracle(key):
    side, a, b, g, z = key
    fn = eval_contour_plus if side == "plus" else eval_contour_minus
    r = fn(Params(a, b, g), z, prec=16)
    assert abs(r.value - ORACLE[key]) < 1e-10
    assert r.abs_err < 1e-10


def test_plus_and_minus_agree_off_axis():
    a = eval_contour_plus(FIG1, -2 + 2j, prec=16)
    b = eval_contour_minus(FIG1, -2 + 2j, prec=16)
    assert abs(a.value - b.value) < 1e-8


def test_extension_contour():
    p = Params("0.5", "0.75", 4)
    r = eval_extension_contour(p, 3, prec=16)
    assert abs(r.value - EXT_ORACLE) < 1e-10
    c0 = M.exp(-4 * M.loggamma(M.mpf("0.75")))
    z = 5
    x = eval_extension_contour(p, z, prec=16).value
    assert abs(x - c0 + eval_series(p, M.mpf(1) / z, 30).value) < 1e-8
    assert abs(x - eval_extension(p, z, 30).value) < 1e-10


def test_domain_errors():
    with pytest.raises(DomainError):
        eval_contour_plus(FIG1, -3)
    with pytest.raises(DomainError):
        eval_contour_minus(FIG1, 3)
    with pytest.raises(DomainError):
        eval_contour_plus(FIG1, 1, Contour.left())
    with pytest.raises(DomainError):
        eval_extension_contour(FIG1, 0)


def test_contour_independence():
    z = 2 + 1j
    base = eval_contour_plus(FIG1, z, prec=16)
    moved = eval_contour_plus(FIG1, z, Contour.right(c=0.3, phi1=-0.8, phi2=1.3), prec=16)
    longer = eval_contour_plus(FIG1, z, Contour.right(x_max=2 * base.diagnostics["x_end"]), prec=16)
    assert abs(base.value - moved.value) < base.abs_err + moved.abs_err
    assert abs(base.value - longer.value) < base.abs_err + longer.abs_err


def test_arm_truncation_below_threshold():
    assert arm_decay(FIG1, 2 + 1j, prec=16) < -21


def test_residue_bookkeeping():
    z = M.mpf("1.5")
    r = pushed_contour_partial_sum(FIG1, z, 3, prec=16)
    expected = sum(z**k * M.exp(-3 * M.loggamma(M.mpf("0.6") * k + M.mpf("0.8"))) for k in range(1, 4))
    assert abs(r.value - expected) < 1e-8


def test_branch_metadata():
    r = eval_contour_plus(FIG1, 1 + 1j, prec=12)
    assert r.method == "contour"
    assert "principal" in r.diagnostics["branch"]
