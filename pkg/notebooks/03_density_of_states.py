# %% [markdown]
# # Spectrum and density of states
#
# At `b = 2, nu = -1/2` there are two Landau levels and one vortex level
# below the continuum edge `(1 + 4 b^2) / R^2`.

# %%
import numpy as np

from abdisk.dos import (
    dos_scan,
    flat_limit_reference,
    integrated_delta_closed,
    residue_weight,
    rho_nu_discrete,
)
from abdisk.radial import PhysicalConfig
from abdisk.spectrum import continuum_edge, landau_levels, vortex_levels

cfg = PhysicalConfig(b=2.0, nu=-0.5, R=1.0)
for lv in landau_levels(cfg) + vortex_levels(cfg):
    print(lv.family, lv.n, lv.value)
print("edge", continuum_edge(cfg))

# %% [markdown]
# Weights of the discrete vortex terms, directly and as residues of the
# integrated correction.

# %%
for term in rho_nu_discrete(cfg):
    print(term.energy, term.weight, residue_weight(cfg, term.energy))

# %%
energies = np.linspace(12.0, 40.0, 8)
for s in dos_scan(energies, cfg):
    print(f"{s.E:7.3f}  rho0={s.rho0_c:.6f}  rho_nu={s.rho_nu_c:+.6f}")

# %% [markdown]
# Large disks.  With the curvature gone the integrated correction approaches
# `-nu(nu+1)/(2 k2)`: the ratio to `flat_limit_reference` tends to -1.

# %%
for R in (10.0, 100.0, 1000.0):
    x = integrated_delta_closed(PhysicalConfig(0.0, -0.5, R), -1.0)
    print(R, (x / flat_limit_reference(-1.0, -0.5)).real)
