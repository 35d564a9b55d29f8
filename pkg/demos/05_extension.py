"""
Negative first parameter
========================

With alpha replaced by -alpha the series becomes a series in 1/z:

    F_{-alpha}(z) = -sum_{k>=1} z**(-k) / Gamma(alpha k + beta)**gamma
                  = Gamma(beta)**(-gamma) - F_alpha(1/z)

It also has a loop-integral form, whose poles now sit at the negative
integers.
"""

# %%
from fractions import Fraction

from leroy import Params, eval_extension, eval_extension_contour, eval_series

p = Params("0.5", "0.75", 4)
# 1/z is passed exactly where it is real
for z, inv in ((3, Fraction(1, 3)), (-3, Fraction(-1, 3)), (2 + 2j, 0.25 - 0.25j), (100, Fraction(1, 100))):
    ext = eval_extension(p, z, 30).value
    via = eval_series(p, 0, 30).value - eval_series(p, inv, 30).value
    print(z, ext, abs(ext - via))

# %%
r = eval_extension_contour(p, 3, prec=16)
print(r.value, "est. error", r.abs_err)

# %%
# at z = 0 the extension is undefined
try:
    eval_extension(p, 0)
except ValueError as exc:
    print(type(exc).__name__, exc)
