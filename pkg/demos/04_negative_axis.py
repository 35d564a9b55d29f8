"""
Behaviour on the negative real axis
===================================

For integer gamma = m, F(-t) is governed by alpha m:

* below 2 it decays algebraically, like the truncated series H_K(t)
* at 2 a bounded oscillation G_1 rides on top of H_K
* above 2 it oscillates with an exponentially growing envelope

The algebraic series is only an asymptotic statement. Exponentially small
pair terms decay like exp(-c t**(1/(alpha m))), which for alpha m close
to 2 is slow, so H_K needs t in the thousands before it is accurate.
"""

# %%
import math

from leroy import Params, classify_regime, eval_H, eval_series, expand_negative_axis
from leroy.asymptotics import envelope_slope, pair_zeros

for a, b, m in (("0.6", "0.8", 3), ("0.5", "0.75", 4), ("0.7", "1", 3), ("6", "1", 1)):
    r = classify_regime(Params(a, b, m))
    print(f"alpha={a} m={m}: {r.label}, alpha m = {r.alpha_m}, pairs {r.harmonics}")

# %%
# algebraic case: the error of H_10 at increasing t
p = Params("0.6", "0.8", 3)
for t in (50, 160, 640, 1280, 5000):
    ref = eval_series(p, -t, 25).value
    h = eval_H(p, t, 10, 25)
    print(f"t={t:>5}  F={float(ref): .6e}  rel. error of H_10 = {float(abs(h - ref) / abs(ref)):.1e}")

# %%
# boundary case alpha m = 2: G_1 + H_K, with a relative correction of
# order t**(-1/2) in the oscillating part
q = Params("0.5", "0.75", 4)
for t in (100, 400, 1600):
    f = eval_series(q, -t, 20).value
    a = expand_negative_axis(q, t, prec=20)
    print(f"t={t:>5}  F={float(f): .6e}  expansion={float(a.value): .6e}  rel. diff {float(abs(a.value - f) / abs(f)):.1e}")

# %%
# exponential case: F changes sign next to each predicted zero of the
# leading cosine, and log |F| grows like 3 cos(pi / 2.1) t**(1/2.1)
e = Params("0.7", "1", 3)
for z in pair_zeros(e, 2000)[-3:]:
    before = eval_series(e, -(z - 3), 15).value
    after = eval_series(e, -(z + 3), 15).value
    print(f"zero {z:8.2f}: sign {'+' if before > 0 else '-'} -> {'+' if after > 0 else '-'}")
ts = [100 + 19 * k for k in range(100)]
vals = [eval_series(e, -t, 15).value for t in ts]
print("fitted envelope slope:", envelope_slope(e, ts, vals), " expected:", 3 * math.cos(math.pi / 2.1))
