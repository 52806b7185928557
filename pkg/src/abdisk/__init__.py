"""Charged particle on the Poincare disk with a uniform field and an Aharonov-Bohm vortex.

Spectra, resolvent kernels and densities of states of the regular
self-adjoint extension, with independent numerical oracles for each closed form.
"""

__version__ = "0.1.0"

from .errors import (
    AbdiskError,
    CoincidenceError,
    ConstraintError,
    ConvergenceError,
    DomainError,
    EdgeSingularityError,
    NonFiniteError,
    PoleError,
    QuantumNumberError,
    SeamError,
)
from .geometry import DiskPoint, MobiusElement
from .quadrature import QuadratureSpec
from .radial import PhysicalConfig, SpectralParameter, chi_of, radial_green, w1, w2, wronskian_constant
from .resolvent import (
    GreenDecomposition,
    delta_coincident,
    delta_integral,
    g0_closed,
    green_closed,
    green_mode_sum,
    horocyclic,
    radial_wave_contour_check,
    zeta_fn,
)
from .spectrum import EnergyLevel, continuum_edge, eigenfunction, landau_levels, vortex_levels
from .dos import (
    DiscreteDosTerm,
    DosSample,
    flat_limit_reference,
    integrated_delta_closed,
    integrated_delta_quadrature,
    lambda_param,
    rho0_continuous,
    rho0_discrete,
    rho_nu_continuous,
    rho_nu_discrete,
    rho_nu_total,
)
