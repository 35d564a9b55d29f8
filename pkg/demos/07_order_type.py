"""
Growth: order and type
======================

F is entire of order rho = 1/(alpha gamma) and type sigma = gamma. Both
come from the coefficients c_n = Gamma(alpha n + beta)**(-gamma). The plain
estimate max n log n / log(1/c_n) converges only like 1/log n; differencing
log(1/c_n)/n between N/2 and N removes that bias.
"""

# %%
from leroy import Params, estimate_order_type

for a, b, g in (("0.5", "1", "4"), ("1", "1", "1"), ("0.6", "0.8", "3"), ("2", "0.5", "0.5")):
    est = estimate_order_type(Params(a, b, g), 2000)
    print(
        f"alpha={a:>3} beta={b:>3} gamma={g}: rho={est.rho_target:.4f}  "
        f"differenced {est.rho_est:.4f}  plain {est.rho_raw:.4f}  type {est.type_est:.4f}"
    )
