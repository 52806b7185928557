"""Discrete spectrum of the regular extension and its eigenfunctions.

Three families of levels exist below the continuum edge ``(1 + 4b^2)/R^2``:

* ``free-Landau``: the Landau levels of the disk, infinitely degenerate;
* ``vortex-plus`` (b > 0) and ``vortex-minus`` (b < 0): levels split off by
  the vortex, with degeneracy ``n + 1``.
"""

from dataclasses import dataclass
import cmath
import math

from .errors import QuantumNumberError
from .geometry import as_complex
from .specfun import jacobi_p

__all__ = [
    "AngularMomenta",
    "EnergyLevel",
    "FAMILIES",
    "continuum_edge",
    "eigenfunction",
    "landau_levels",
    "vortex_levels",
]

FAMILIES = ("free-Landau", "vortex-plus", "vortex-minus")


@dataclass(frozen=True)
class AngularMomenta:
    """Arithmetic progression of integer angular momenta; ``count=None`` means unbounded."""

    start: int
    step: int
    count: int = None

    @property
    def infinite(self):
        return self.count is None

    def __contains__(self, l):
        if l != int(l):
            return False
        k, rem = divmod(int(l) - self.start, self.step)
        return rem == 0 and k >= 0 and (self.count is None or k < self.count)

    def values(self):
        if self.infinite:
            raise ValueError("infinitely many angular momenta")
        return tuple(self.start + self.step * k for k in range(self.count))

    def first(self, k):
        """First ``k`` members, usable also for the unbounded set."""
        k = k if self.infinite else min(k, self.count)
        return tuple(self.start + self.step * j for j in range(k))


@dataclass(frozen=True)
class EnergyLevel:
    """A bound-state energy.

    ``weight`` is the coefficient of this level in the density of states of
    the family: ``(2/pi R^2)(|b| - n - 1/2)`` per unit area for Landau levels,
    ``n + 1`` (the degeneracy) for vortex levels.
    """

    value: float
    n: int
    family: str
    allowed_l: AngularMomenta
    weight: float


def continuum_edge(cfg):
    """Bottom (1 + 4 b^2) / R^2 of the continuous spectrum."""
    return (1.0 + 4.0 * cfg.b * cfg.b) / (cfg.R * cfg.R)


def _energy(cfg, x):
    return (1.0 + 4.0 * cfg.b * cfg.b - 4.0 * x * x) / (cfg.R * cfg.R)


def _count(bound):
    """Number of n = 0, 1, ... with n < bound (strictly)."""
    if bound <= 0.0:
        return 0
    return int(math.ceil(bound))


def _landau_bound(cfg):
    return abs(cfg.b) - 0.5


def _vortex_bound(cfg):
    if cfg.b > 0:
        return cfg.b - (cfg.nu + 1.0) - 0.5
    if cfg.b < 0:
        return -cfg.b + cfg.nu - 0.5
    return -1.0


def landau_levels(cfg):
    """Landau levels E_n = [1 + 4b^2 - 4(|b| - n - 1/2)^2] / R^2 for n < |b| - 1/2."""
    ab = abs(cfg.b)
    allowed = AngularMomenta(0, -1) if cfg.b > 0 else AngularMomenta(1, 1)
    out = []
    for n in range(_count(_landau_bound(cfg))):
        x = ab - n - 0.5
        out.append(EnergyLevel(_energy(cfg, x), n, "free-Landau", allowed,
                               2.0 / (math.pi * cfg.R ** 2) * x))
    return out


def _vortex_x(cfg, n):
    if cfg.b > 0:
        return cfg.b - n - (1.0 + cfg.nu) - 0.5
    return -cfg.b - n + cfg.nu - 0.5


def vortex_levels(cfg):
    """Levels created by the vortex, of the plus family for b > 0 and the minus family for b < 0."""
    out = []
    for n in range(_count(_vortex_bound(cfg))):
        if cfg.b > 0:
            family, allowed = "vortex-plus", AngularMomenta(1, 1, n + 1)
        else:
            family, allowed = "vortex-minus", AngularMomenta(0, -1, n + 1)
        out.append(EnergyLevel(_energy(cfg, _vortex_x(cfg, n)), n, family, allowed, float(n + 1)))
    return out


def _exponents(n, l, family, cfg):
    """(radial power of t, power of 1 - t, Jacobi degree, alpha, beta)."""
    b, nu = cfg.b, cfg.nu
    lam = l + nu
    if family == "free-Landau":
        if n >= _count(_landau_bound(cfg)):
            raise QuantumNumberError(f"no Landau level with n={n} for b={b}")
        if l not in landau_levels(cfg)[0].allowed_l:
            raise QuantumNumberError(f"l={l} not allowed for the Landau family at b={b}")
        ab = abs(b)
        return abs(lam) / 2.0, ab - n, n, 2.0 * ab - 2.0 * n - 1.0, abs(lam)
    if family not in FAMILIES:
        raise QuantumNumberError(f"unknown family {family!r}")
    if (family == "vortex-plus") != (b > 0) or b == 0:
        raise QuantumNumberError(f"family {family} does not exist for b={b}")
    if n >= _count(_vortex_bound(cfg)):
        raise QuantumNumberError(f"no {family} level with n={n}")
    if l not in vortex_levels(cfg)[n].allowed_l:
        raise QuantumNumberError(f"l={l} not allowed for {family} level n={n}")
    if b > 0:
        # the polynomial degree drops as l grows so that the energy stays E_n
        return lam / 2.0, b - n - (nu + 1.0), n + 1 - l, 2.0 * b - 2.0 * n - 2.0 * (nu + 1.0) - 1.0, lam
    return abs(lam) / 2.0, -b - n + nu, n - abs(l), -2.0 * b - 2.0 * n + 2.0 * nu - 1.0, abs(lam)


def eigenfunction(n, l, z, family, cfg):
    """Unnormalized eigenfunction t^p (1-t)^q P_m^{(alpha, beta)}(2t - 1) e^{il phi}.

    For the Landau family ``m = n``.  For the vortex families the polynomial
    degree is ``m = n + 1 - l`` (b > 0) or ``m = n - |l|`` (b < 0), which is
    what makes every allowed ``l`` share the energy of level ``n``.

    Raises
    ------
    QuantumNumberError
        If ``(n, l)`` is not admissible for the family at this configuration.
    """
    p, q, m, alpha, beta = _exponents(n, l, family, cfg)
    z = as_complex(z)
    t = z.real ** 2 + z.imag ** 2
    phi = cmath.phase(z) if z != 0 else 0.0
    radial = (t ** p if p != 0 else 1.0) * (1.0 - t) ** q * jacobi_p(m, alpha, beta, 2.0 * t - 1.0)
    return radial * cmath.exp(1j * l * phi)
