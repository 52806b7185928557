# %% [markdown]
# # Radial solutions on the disk
#
# The channel equation has a solution regular at the vortex, `w1`, and
# solutions `w2+` / `w2-` regular at the rim.  `w1` has two hypergeometric
# representations; the package picks the one with positive terms.

# %%
import numpy as np

from abdisk.radial import (
    PhysicalConfig,
    chi_of,
    radial_green,
    w1,
    w2,
    wronskian_constant,
    wronskian_scaled,
)

cfg = PhysicalConfig(b=0.5, nu=0.0, R=1.0)
k2 = -2.0
print("chi =", chi_of(cfg, k2))

# %% [markdown]
# Both representations of `w1` on a small grid.

# %%
for l in (-1.3, 0.0, 0.8):
    row = [abs(w1(t, l, cfg, k2, rep=1) / w1(t, l, cfg, k2, rep=2) - 1) for t in (0.2, 0.5, 0.8)]
    print(f"l={l:5.2f}", " ".join(f"{e:.1e}" for e in row))

# %% [markdown]
# `t W` is constant and equals `1/C`.

# %%
l = 0.7
vals = np.array([wronskian_scaled(t, l, "+", cfg, k2) for t in np.linspace(0.1, 0.9, 9)])
print("spread", np.ptp(vals.real), " tW * C =", vals[0] * wronskian_constant(l, "+", cfg, k2))

# %%
t, h = 0.5, 1e-6
g = lambda tp: radial_green(t, tp, l, cfg, k2)
jump = (g(t + h) - g(t)) / h - (g(t) - g(t - h)) / h
print("jump", jump, "expected", -1 / (2 * t))

# %%
ts = np.linspace(0.05, 0.95, 7)
print(np.array([[abs(w1(s, l, cfg, k2)), abs(w2(s, l, "+", cfg, k2))] for s in ts]))
