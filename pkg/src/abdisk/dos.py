"""Densities of states: the free continuous part, the vortex-induced integrated
density in closed digamma form, its split into discrete and continuous parts,
and two quadrature routes for the spatial integral of the vortex correction.

Delta distributions are never rendered numerically: discrete contributions are
returned as (energy, weight) pairs.
"""

from dataclasses import dataclass
import cmath
import math

import numpy as np

from .constants import BOUND_STATE_TOL
from .errors import ConvergenceError, DomainError, EdgeSingularityError, PoleError
from .quadrature import DEFAULT_SPEC, real_line_nodes, unit_interval_nodes
from .radial import chi_of
from .resolvent import ZetaKernel
from .specfun import _digamma, _nearest_nonpositive_int
from .spectrum import continuum_edge, landau_levels, vortex_levels

__all__ = [
    "DiscreteDosTerm",
    "DosSample",
    "appendix_b_kernel",
    "boundary_value",
    "dos_scan",
    "flat_limit_reference",
    "integrated_delta_closed",
    "integrated_delta_quadrature",
    "lambda_param",
    "residue_weight",
    "richardson_boundary_value",
    "rho0_continuous",
    "rho0_discrete",
    "rho_nu_continuous",
    "rho_nu_discrete",
    "rho_nu_total",
]


@dataclass(frozen=True)
class DosSample:
    E: float
    rho0_c: float
    rho_nu_c: float
    above_edge: bool


@dataclass(frozen=True)
class DiscreteDosTerm:
    """Coefficient ``weight`` of delta(E - energy)."""

    energy: float
    weight: float
    family: str


def lambda_param(E, cfg):
    """lambda = sqrt(E R^2 - 1 - 4 b^2) / 2, defined on and above the continuum edge."""
    edge = continuum_edge(cfg)
    if E < edge:
        raise DomainError(f"E={E} lies below the continuum edge")
    return 0.5 * math.sqrt((E - edge) * cfg.R ** 2)


def _den(lam, c):
    # cosh(2 pi lam) + cos(2 pi c) without cancellation near the edge
    return 2.0 * math.sinh(math.pi * lam) ** 2 + 2.0 * math.cos(math.pi * c) ** 2


def _half_integer(c):
    return abs(c - math.floor(c) - 0.5) < 1e-12


def rho0_continuous(E, cfg):
    """Continuous free density of states per unit area.

    (1/4pi) sinh(2 pi lam) / (cosh(2 pi lam) + cos(2 pi b)) above the edge, 0 below.

    Raises
    ------
    EdgeSingularityError
        Exactly at the edge for half-integer ``b``, where the density diverges
        like ``1/lam``.
    """
    if E < continuum_edge(cfg):
        return 0.0
    lam = lambda_param(E, cfg)
    if lam == 0.0 and _half_integer(cfg.b):
        raise EdgeSingularityError("free density diverges at the edge for half-integer b")
    return math.sinh(2.0 * math.pi * lam) / (4.0 * math.pi * _den(lam, cfg.b))


def _brace(lam, c, coef):
    den = _den(lam, c)
    return (lam * math.sinh(2.0 * math.pi * lam) + coef * math.sin(2.0 * math.pi * c)) / den


def rho_nu_continuous(E, cfg):
    """Continuous part of the vortex-induced integrated density of states.

    -(R^2 / 8 lam) {A(b - nu) - A(b)} with
    A(c) = [lam sinh 2 pi lam + (1/2 - b + nu) sin 2 pi c] / [cosh 2 pi lam + cos 2 pi c].

    The braces tend to ``(1/2 - b + nu)(tan pi(b - nu) - tan pi b)`` at the
    edge, so the density has a ``1/lam`` edge singularity unless that limit is
    zero.  Exactly at the edge the limit 0 is returned when the braces vanish
    there, and :class:`EdgeSingularityError` is raised otherwise.
    """
    if cfg.nu == 0.0:
        return 0.0
    if E < continuum_edge(cfg):
        return 0.0
    lam = lambda_param(E, cfg)
    b, nu = cfg.b, cfg.nu
    coef = 0.5 - b + nu
    if lam == 0.0:
        if _half_integer(b - nu) or _half_integer(b):
            raise EdgeSingularityError("half-integer denominator at the continuum edge")
        c0 = coef * (math.tan(math.pi * (b - nu)) - math.tan(math.pi * b))
        if c0 == 0.0:
            return 0.0
        raise EdgeSingularityError("vortex density diverges like 1/lambda at the edge")
    a1, a2 = _brace(lam, b - nu, coef), _brace(lam, b, coef)
    return -(cfg.R ** 2) / (8.0 * lam) * (a1 - a2)


def rho0_discrete(cfg):
    """Landau-level terms (2 / pi R^2)(|b| - n - 1/2) delta(E - E_n)."""
    return [DiscreteDosTerm(lv.value, lv.weight, lv.family) for lv in landau_levels(cfg)]


def _rho_nu_discrete_terms(cfg):
    nu = cfg.nu
    out = [DiscreteDosTerm(lv.value, float(lv.n + 1), lv.family) for lv in vortex_levels(cfg)]
    for lv in landau_levels(cfg):
        w = -(lv.n - nu) if cfg.b > 0 else -(lv.n + nu + 1.0)
        out.append(DiscreteDosTerm(lv.value, w, lv.family))
    return out


def rho_nu_discrete(cfg):
    """Discrete part of the vortex-induced density of states.

    b > 0: weight n + 1 at the vortex-plus levels and -(n - nu) at the Landau levels.
    b < 0: weight n + 1 at the vortex-minus levels and -(n + nu + 1) at the Landau levels.

    At ``nu = 0`` the two sums cancel level by level and the list is empty.
    """
    if cfg.nu == 0.0:
        return []
    return _rho_nu_discrete_terms(cfg)


def rho_nu_total(E, cfg):
    """(continuous density at E, list of discrete terms)."""
    return rho_nu_continuous(E, cfg), rho_nu_discrete(cfg)


def dos_scan(energies, cfg):
    """Continuous densities on an energy grid, one :class:`DosSample` per energy."""
    edge = continuum_edge(cfg)
    return [DosSample(float(E), rho0_continuous(E, cfg), rho_nu_continuous(E, cfg), E >= edge)
            for E in energies]


# -- closed form and its checks ----------------------------------------------


def _psi(z):
    if _nearest_nonpositive_int(z, BOUND_STATE_TOL) is not None:
        raise PoleError(f"digamma pole at {z}: bound-state energy", location=z)
    return _digamma(z)


def _closed_from_chi(cfg, chi):
    b, nu = cfg.b, cfg.nu
    brace = ((chi - b + nu) * (_psi(chi - b) - _psi(chi - b + nu + 1.0))
             + (chi + b - nu - 1.0) * (_psi(chi + b) - _psi(chi + b - 1.0 - nu)))
    return -(cfg.R ** 2) / (4.0 * (2.0 * chi - 1.0)) * brace


def integrated_delta_closed(cfg, k2):
    """Spatial integral of Delta_k(t) over the disk in closed form.

    -R^2 / (4 (2chi - 1)) {(chi - b + nu)[psi(chi - b) - psi(chi - b + nu + 1)]
                          + (chi + b - nu - 1)[psi(chi + b) - psi(chi + b - 1 - nu)]}
    """
    chi = chi_of(cfg, k2)
    if cfg.nu == 0.0:
        return 0j
    return _closed_from_chi(cfg, chi)


def boundary_value(E, cfg, delta):
    """(1/pi) Im of the closed form at k2 = E + i delta."""
    return integrated_delta_closed(cfg, complex(E, delta)).imag / math.pi


def richardson_boundary_value(E, cfg, deltas=(1e-2, 1e-3, 1e-4)):
    """Polynomial extrapolation of :func:`boundary_value` to delta = 0."""
    xs = list(deltas)
    ys = [boundary_value(E, cfg, d) for d in xs]
    # Neville's scheme evaluated at 0
    p = list(ys)
    n = len(xs)
    for k in range(1, n):
        for i in range(n - k):
            p[i] = (xs[i + k] * p[i] - xs[i] * p[i + 1]) / (xs[i + k] - xs[i])
    return p[0]


def residue_weight(cfg, energy, radius=None, nodes=64):
    """Delta weight at ``energy`` from a contour integral of the closed form.

    A pole ``X ~ res / (k2 - E_n)`` gives the density ``(1/pi) Im X(E + i0)``
    a term ``-res * delta(E - E_n)``, because ``Im 1/(x + i0) = -pi delta(x)``.
    The residue is taken by the trapezoidal rule on a circle, with nodes
    placed off the real axis.
    """
    if radius is None:
        others = [lv.value for lv in landau_levels(cfg) + vortex_levels(cfg)
                  if abs(lv.value - energy) > 1e-12]
        others.append(continuum_edge(cfg))
        radius = 0.4 * min(abs(e - energy) for e in others)
    acc = 0j
    for j in range(nodes):
        w = cmath.exp(1j * (j + 0.5) * 2.0 * math.pi / nodes)
        acc += integrated_delta_closed(cfg, energy + radius * w) * radius * w
    return -(acc / nodes).real


def flat_limit_reference(k2, nu):
    """nu (nu + 1) / (2 k2), the large-R limit of the integrated vortex correction."""
    k2 = complex(k2)
    if k2 == 0:
        raise DomainError("k2 must be nonzero")
    return nu * (nu + 1.0) / (2.0 * k2)


# -- quadrature routes --------------------------------------------------------


def appendix_b_kernel(theta, thetap, cfg, k2, quad=DEFAULT_SPEC, form="u", level=None):
    """Inner function F(theta, theta') of the double-integral route, for scalar angles.

    ``form="s"`` integrates the original s-form over (0, 1), ``form="u"`` the
    form obtained after the substitution ``u = s / (s + (1 + e^theta)(1 + e^theta')(1 - s))``.
    """
    chi = chi_of(cfg, k2)
    th = np.array([[float(theta)]])
    tp = np.array([[float(thetap)]])
    f = _kernel_u if form == "u" else _kernel_s
    if form not in ("u", "s"):
        raise DomainError(f"unknown form {form!r}")
    prev = None
    for lev in range(quad.min_level, quad.max_level + 1):
        s, sc, w = unit_interval_nodes(lev, quad)
        val = complex(f(th, tp, s, sc, w, cfg.b, chi)[0, 0])
        if prev is not None and abs(val - prev) <= max(quad.abs_tol, quad.rel_tol * abs(val)):
            return val
        prev = val
    raise ConvergenceError("kernel quadrature did not converge", estimate=prev)


def _kernel_u(th, tp, u, uc, w, b, chi):
    # th: (m, 1) or (m, n); tp broadcast; u nodes along a new last axis
    th, tp = th[..., None], tp[..., None]
    # e^{-theta-theta'} + (1 + e^{-theta'}) u, factored as e^{-theta'} (e^{-theta} + u) + u
    base = np.exp(-tp) * (np.exp(-th) + u) + u
    integrand = np.exp((2.0 * chi - 2.0) * np.log(u) - (chi - b) * np.log(base))
    pref = 1.0 / ((1.0 + np.exp(th[..., 0])) * (1.0 + np.exp(tp[..., 0])))
    return pref * np.sum(integrand * w, axis=-1)


def _kernel_s(th, tp, s, sc, w, b, chi):
    th, tp = th[..., None], tp[..., None]
    em, emp = np.exp(-th), np.exp(-tp)
    ep, epp = np.exp(th), np.exp(tp)
    # (1 + e^-th)(1 + e^-tp) - s e^-th = e^-th (1 - s) + 1 + e^-tp + e^{-th-tp}
    b1 = em * sc + 1.0 + emp + em * emp
    # (1 + e^th)(1 + e^tp) - s (e^th + e^tp + e^{th+tp}) = 1 + (1 - s)(e^th + e^tp + e^{th+tp})
    b2 = 1.0 + sc * (ep + epp + ep * epp)
    integrand = np.exp((2.0 * chi - 2.0) * np.log(s) - (chi - b) * np.log(b1) - (chi + b) * np.log(b2))
    return np.sum(integrand * w, axis=-1)


def _radial_route(cfg, chi, level, spec):
    t, tc, wt = unit_interval_nodes(level, spec)
    x, wx = real_line_nodes(level, spec)
    kernel = ZetaKernel(cfg, chi)
    nu, b = cfg.nu, cfg.b
    T, TC, X = t[:, None], tc[:, None], x[None, :]
    ex = np.exp(X)
    frac = np.exp((1.0 + nu) * X) / (1.0 + ex)
    ratio = np.exp(b * (np.log1p(T / ex) - np.log1p(T * ex)))
    ch = 2.0 * T * np.cosh(X)
    den = 1.0 + T * T + ch
    vals = frac * ratio * kernel((2.0 * T + ch) / den, TC * TC / den)
    inner = vals @ wx
    delta_t = math.sin(math.pi * nu) / math.pi * inner
    return math.pi * cfg.R ** 2 * np.sum(delta_t * wt / (tc * tc))


def _double_route(cfg, chi, level, spec):
    x, wx = real_line_nodes(level, spec)
    u, uc, wu = unit_interval_nodes(level, spec)
    b, nu = cfg.b, cfg.nu
    total = 0j
    tp = x[None, :]
    for xi, wi in zip(x, wx):
        F = _kernel_u(np.array([[xi]]), tp, u, uc, wu, b, chi)[0]
        outer = math.exp((1.0 + nu) * xi) / (1.0 + math.exp(xi)) if xi < 700 else 0.0
        total += wi * outer * np.dot(F, wx)
    return cfg.R ** 2 * math.sin(math.pi * nu) / (4.0 * math.pi) * total


def integrated_delta_quadrature(cfg, k2, quad=None, path="radial"):
    """Spatial integral of Delta_k(t) by quadrature, an oracle for the closed form.

    ``path="radial"`` integrates the coincidence-point correction over the disk,
    pi R^2 int_0^1 Delta_k(t) dt / (1 - t)^2, on a tensor grid in (t, theta).
    ``path="double"`` evaluates the double integral over (theta, theta') of
    e^{(1+nu) theta} / (1 + e^theta) F(theta, theta') with its inner u-integral,
    times R^2 sin(pi nu) / 4 pi.  All levels of the nested rules are refined
    together and consecutive levels are compared.
    """
    if not complex(k2).real < 0.0:
        raise DomainError("the quadrature routes need Re k2 < 0")
    chi = chi_of(cfg, k2)
    if cfg.nu == 0.0:
        return 0j
    if quad is None:
        quad = DEFAULT_SPEC.__class__(rel_tol=1e-8, max_level=6)
    route = {"radial": _radial_route, "double": _double_route}.get(path)
    if route is None:
        raise DomainError(f"unknown path {path!r}")
    prev = None
    err = math.inf
    for level in range(quad.min_level, quad.max_level + 1):
        val = complex(route(cfg, chi, level, quad))
        if prev is not None:
            err = abs(val - prev)
            if err <= max(quad.abs_tol, quad.rel_tol * abs(val)):
                return val
        prev = val
    raise ConvergenceError(f"{path} route did not converge", estimate=prev, error=err)
