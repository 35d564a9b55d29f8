"""Le Roy type function F_{alpha,beta}^{(gamma)}(z) = sum_k z**k / Gamma(alpha k + beta)**gamma.

Arbitrary-precision evaluation by power series, Fox-Wright series and
loop-contour quadrature, the negative-axis asymptotic expansion for integer
gamma, the extension to a negative first parameter and numerical checks of
the Laplace-transform identities.
"""

from .asymptotics import (
    AsymptoticExpansion,
    OrderTypeEstimate,
    Regime,
    build_expansion,
    classify_regime,
    estimate_order_type,
    eval_E_leading,
    eval_G_r,
    eval_sector_leading,
    eval_H,
    expand_negative_axis,
    pair_count,
)
from .contour import Contour, eval_contour_minus, eval_contour_plus, eval_extension_contour, pushed_contour_partial_sum
from .errors import (
    DivergentParametersError,
    DomainError,
    LeRoyError,
    PoleError,
    PrecisionBudgetError,
    QuadratureError,
    TermBudgetError,
)
from .laplace import LaplaceCheck, laplace_lhs, laplace_rhs, laplace_termwise, laplace_wright_form, verify_point
from .numerics import PrecisionConfig, gamma_power, gamma_real, log_gamma_complex, recip_gamma_power
from .series import (
    EvalResult,
    LeRoyCoefficients,
    Params,
    eval_extension,
    eval_leroy_classical,
    eval_mittag_leffler,
    eval_series,
    eval_series_many,
)
from .wright import UndefinedTermError, WrightParams, eval_multi_index_ml, eval_wright

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
