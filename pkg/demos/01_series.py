"""
Power series evaluation
=======================

F_{alpha,beta}^{(gamma)}(z) = sum_k z**k / Gamma(alpha k + beta)**gamma

The series converges everywhere, but on the negative axis the terms grow
far beyond the final value before they start to shrink. The evaluator
estimates how many digits cancel and raises the working precision to match.
"""

# %%
import mpmath

from leroy import Params, eval_mittag_leffler, eval_series

# gamma = 1 gives Mittag-Leffler, and alpha = beta = 1 the exponential
print(eval_series(Params(1, 1, 1), 1, 30).value)
print(eval_mittag_leffler(2, 1, -4, 30).value, "= cos 2")

# %%
# F(0) is Gamma(beta)**(-gamma); with beta = 1/2 and gamma = 2 that is 1/pi
print(eval_series(Params(1, "0.5", 2), 0, 30).value)

# %%
# Cancellation on the negative axis: watch the working precision climb.
p = Params("0.6", "0.8", 3)
for t in (10, 100, 1000, 10000):
    r = eval_series(p, -t, 20)
    print(f"t={t:>6}  F(-t)={mpmath.nstr(r.value, 20)}  working digits={r.working_digits}  terms={r.terms_used}")

# %%
# Parameters are exact: 0.6 means 3/5, not the nearest binary double.
print(p, p.alpha, p.alpha * 3)

# %%
# Large positive arguments are summed around the peak term only.
big = eval_series(Params("0.3", "1", "2"), 10**4, 15)
print(mpmath.nstr(big.value, 15), "summed over k in", big.diagnostics.get("window"))
