"""
Laplace transforms
==================

Two identities are checked numerically. The left sides are integrals over
(0, inf) done with Gauss-Legendre panels, the right sides closed forms:

    int exp(-s t) t**(beta-1) F^{(gamma)}(lam t**alpha) dt = s**(-beta) F^{(gamma-1)}(lam s**(-alpha))
    int exp(-s t) F^{(m)}(t) dt = s**(-1) 2Psi_m[(1,1),(1,1); (alpha,beta) x m; 1/s]

The whole suite takes about a minute; one point of each kind is enough here.
"""

# %%
from leroy import Params, verify_point

c = verify_point(Params("0.6", "0.8", 3), -2, "1.5", 14)
print("lemma  lhs", c.lhs)
print("       rhs", c.rhs)
print("       residual", c.residual, c.diagnostics)

# %%
w = verify_point(Params(1, 1, 1), 1, 2, 14, kind="wright")
print("wright lhs", w.lhs, "rhs", w.rhs, "residual", w.residual)
# F^{(1)}(t) = e^t, so the transform is 1/(s-1) = 1 at s = 2
