"""
Fox-Wright cross-check
======================

For integer gamma = m the function is a 1Psi_m Fox-Wright function with
upper pair (1, 1) and m copies of the lower pair (alpha, beta). Summing that
series is an independent route to the same number.
"""

# %%
from leroy import Params, WrightParams, eval_multi_index_ml, eval_series, eval_wright

alpha, beta, m = "0.6", "0.8", 3
w = WrightParams(upper=[(1, 1)], lower=[(alpha, beta)] * m)
print("kappa =", w.kappa, " radius =", w.radius())

for z in (-20, 2, 1 + 2j):
    s = eval_series(Params(alpha, beta, m), z, 40).value
    f = eval_wright(w, z, 40).value
    print(z, s, abs(s - f))

# %%
# kappa = 0 gives a finite radius: 1Psi_0[(1,1)] is the geometric series
print(eval_wright(WrightParams(upper=[(1, 1)]), "0.5", 30).value)

# %%
# multi-index Mittag-Leffler with equal pairs is the same function again
print(eval_multi_index_ml([(alpha, beta)] * m, -5, 30).value)
print(eval_series(Params(alpha, beta, m), -5, 30).value)
