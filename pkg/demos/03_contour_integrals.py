"""
Loop-contour integrals
======================

Two integral representations reproduce the series through their residues:
a loop opening to the right, for z off (-inf, 0], and a loop opening to the
left, for z off [0, inf). Both are evaluated with Gauss-Legendre panels and
an error estimate from halving the panels.
"""

# %%
from leroy import Contour, Params, eval_contour_minus, eval_contour_plus, eval_series, pushed_contour_partial_sum

p = Params("0.6", "0.8", 3)
z = 2 + 1j
r = eval_contour_plus(p, z, prec=16)
print(r.value, "est. error", r.abs_err)
print(eval_series(p, z, 30).value)
print(r.diagnostics)

# %%
# the multi-valued power Gamma(alpha s + beta)**2.5 on its principal branch
q = Params("0.8", "1", "2.5")
print(eval_contour_plus(q, 1j, prec=16).value, eval_series(q, 1j, 30).value)

# %%
# both loops agree where their domains overlap
a = eval_contour_plus(p, -2 + 2j, prec=16).value
b = eval_contour_minus(p, -2 + 2j, prec=16).value
print(a, b, abs(a - b))

# %%
# moving the loop does not change the integral (Cauchy)
moved = eval_contour_plus(p, z, Contour.right(c=0.3, phi1=-0.8, phi2=1.3), prec=16)
print(abs(moved.value - r.value), "<", moved.abs_err + r.abs_err)

# %%
# pushing the loop past the poles s = 1..5 picks up exactly those residues
import mpmath

pushed = pushed_contour_partial_sum(p, "1.5", 5, prec=16).value
direct = sum(mpmath.mpf("1.5") ** k * mpmath.rgamma(mpmath.mpf(3) / 5 * k + mpmath.mpf(4) / 5) ** 3 for k in range(1, 6))
print(pushed.real, direct)
