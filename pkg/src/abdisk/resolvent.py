"""Green function of the regular extension with one vortex at the origin.

Two independent routes are provided:

* :func:`green_mode_sum` sums the radial kernels of all angular-momentum
  channels ``l + nu``;
* :func:`green_closed` assembles the free kernel, multiplied by the phase
  ``exp(-i nu (phi - phi'))`` of the appropriate 2 pi window, and the
  vortex correction ``Delta`` given by a one-dimensional integral.

Angles of points are taken in ``[0, 2 pi)``; the origin has angle 0.
"""

from dataclasses import dataclass
import cmath
import math

import numpy as np

from .constants import MODE_SUM_CAP, MODE_SUM_START, MODE_SUM_TOL, SEAM_TOL, TWO_PI
from .errors import CoincidenceError, ConvergenceError, DomainError, PoleError, SeamError
from .geometry import angle_difference, as_complex, point_invariant, point_invariant_complement
from .quadrature import DEFAULT_SPEC, de_real_line, de_unit_interval
from .radial import _log_wronskian_constant, _radial_green, _resolve_chi, _w1_parts, chi_of, w1
from .specfun import _FixedParameterHyp, _hyp2f1, _lngamma_raw, _nearest_nonpositive_int

__all__ = [
    "GreenDecomposition",
    "ZetaKernel",
    "delta_coincident",
    "delta_integral",
    "g0_closed",
    "green_closed",
    "green_mode_sum",
    "horocyclic",
    "normalized_w1",
    "radial_wave_contour_check",
    "zeta_euler_integral",
    "zeta_fn",
]

BRANCH_CUT_TOL = 1e-10


@dataclass(frozen=True)
class GreenDecomposition:
    """Closed-form Green function split into its free and vortex parts.

    ``total = exp(-i nu (phi - phi' - 2 pi branch)) * g0 + delta``.
    """

    g0: complex
    delta: complex
    branch: int
    phase: complex
    total: complex


def _angle(z):
    return cmath.phase(z) % TWO_PI if z != 0 else 0.0


def _require_left_half(k2):
    if not complex(k2).real < 0.0:
        raise DomainError(f"Re k2 must be negative, got k2={k2}")


# -- horocyclic waves --------------------------------------------------------


def _log_one_plus(w):
    """Principal log(1 + w), refusing arguments within BRANCH_CUT_TOL of the cut."""
    v = 1.0 + w
    dist = abs(v) if v.real > 0 else abs(v.imag)
    if dist < BRANCH_CUT_TOL:
        raise DomainError(f"theta is on (or within {BRANCH_CUT_TOL}) of a branch cut")
    return cmath.log(v)


def horocyclic(z, theta, sign, hat, cfg, k2, chi=None):
    """Horocyclic wave Psi_+- (or its hatted version, b -> -b) at ``z``.

    Psi = (1 - |z|^2)^{chi_s} / ((1 + z e^{-theta})^{chi_s - b} (1 + conj(z) e^{theta})^{chi_s + b})

    with ``chi_s = 1/2 +- (chi - 1/2)``.  Both logarithms are principal,
    which vanishes on the line Im theta = phi and puts the cuts on the
    horizontal half-lines through the branch points, repeated with period
    2 pi i.
    """
    z = as_complex(z)
    theta = complex(theta)
    chi = _resolve_chi(cfg, k2, chi)
    s = 1 if sign in ("+", 1) else -1
    cs = 0.5 + s * (chi - 0.5)
    b = -cfg.b if hat else cfg.b
    l1 = _log_one_plus(z * cmath.exp(-theta))
    l2 = _log_one_plus(z.conjugate() * cmath.exp(theta))
    lr = math.log1p(-(z.real ** 2 + z.imag ** 2))
    return cmath.exp(cs * lr - (cs - b) * l1 - (cs + b) * l2)


# -- the free kernel ---------------------------------------------------------


def _zeta_norm(b, chi):
    for a in (chi + b, chi - b):
        if _nearest_nonpositive_int(a) is not None:
            raise PoleError(f"Gamma({a}) is on a pole", location=a)
    return cmath.exp(_lngamma_raw(chi + b) + _lngamma_raw(chi - b) - _lngamma_raw(2.0 * chi))


def zeta_fn(u, cfg, k2, u_complement=None, chi=None):
    """zeta(u) = Gamma(chi+b) Gamma(chi-b) / (4 pi Gamma(2chi)) (1-u)^chi 2F1(chi+b, chi-b; 2chi; 1-u).

    ``u_complement`` optionally gives ``1 - u`` exactly.  The value diverges
    logarithmically at ``u = 0``.
    """
    chi = _resolve_chi(cfg, k2, chi)
    y = 1.0 - u if u_complement is None else u_complement
    if not (0.0 <= u < 1.0 and y > 0.0):
        raise DomainError(f"u={u} outside [0, 1)")
    if u == 0.0:
        raise CoincidenceError("zeta is logarithmically singular at u = 0")
    b = cfg.b
    f = _hyp2f1(chi + b, chi - b, 2.0 * chi, y, u)[0]
    return _zeta_norm(b, chi) / (4.0 * math.pi) * cmath.exp(chi * math.log(y)) * f


class ZetaKernel:
    """Vectorized zeta for fixed (b, chi), fed with arrays of u and 1 - u."""

    def __init__(self, cfg, chi):
        b = cfg.b
        self.chi = chi
        self.norm = _zeta_norm(b, chi) / (4.0 * math.pi)
        self.hyp = _FixedParameterHyp(chi + b, chi - b, 2.0 * chi)

    def __call__(self, u, uc):
        return self.norm * np.exp(self.chi * np.log(uc)) * self.hyp(uc, u)


def zeta_euler_integral(u, cfg, k2, quad=DEFAULT_SPEC, chi=None):
    """zeta(u) from its Euler integral over (0, 1), an oracle for :func:`zeta_fn`.

    zeta(u) = (1-u)^chi / (4 pi) int_0^1 s^{chi-b-1} (1-s)^{chi+b-1} (1 - (1-u) s)^{-(chi+b)} ds
    """
    chi = _resolve_chi(cfg, k2, chi)
    b = cfg.b
    y = 1.0 - u

    def f(s, sc):
        # 1 - y s = u + y (1 - s) keeps accuracy near s = 1
        return np.exp((chi - b - 1.0) * np.log(s) + (chi + b - 1.0) * np.log(sc)
                      - (chi + b) * np.log(u + y * sc))

    val, _ = de_unit_interval(f, quad)
    return cmath.exp(chi * math.log(y)) * val / (4.0 * math.pi)


def g0_closed(z, zp, cfg, k2, chi=None):
    """Free resolvent kernel ((1 - z conj(z')) / (1 - conj(z) z'))^b zeta(u(z, z'))."""
    z, zp = as_complex(z), as_complex(zp)
    if z == zp:
        raise CoincidenceError("g0_closed is singular at coinciding points")
    chi = _resolve_chi(cfg, k2, chi)
    u = point_invariant(z, zp)
    uc = point_invariant_complement(z, zp)
    phase = cmath.exp(2j * cfg.b * cmath.phase(1.0 - z * zp.conjugate()))
    return phase * zeta_fn(u, cfg, k2, uc, chi=chi)


# -- vortex correction -------------------------------------------------------


def _delta_integrand(r, rp, psi, cfg, kernel):
    e_psi = cmath.exp(1j * psi)
    rr = r * rp
    nu, b = cfg.nu, cfg.b
    one_mr = (1.0 - r * r) * (1.0 - rp * rp)
    ssq = r * r + rp * rp

    def f(x):
        ex = np.exp(x)
        frac = np.exp((1.0 + nu) * x) * e_psi / (1.0 + ex * e_psi)
        ratio = np.exp(b * (np.log1p(rr / ex) - np.log1p(rr * ex)))
        ch = 2.0 * rr * np.cosh(x)
        den = 1.0 + rr * rr + ch
        return frac * ratio * kernel((ssq + ch) / den, one_mr / den)

    return f


def delta_integral(z, zp, cfg, k2, quad=DEFAULT_SPEC, chi=None):
    """Vortex correction Delta(z, z') as an integral over the real theta axis.

    Delta = (sin pi nu / pi) int e^{(1+nu) theta + i psi} / (1 + e^{theta + i psi})
            ((1 + r r' e^{-theta}) / (1 + r r' e^{theta}))^b zeta(v) d theta

    with ``psi = phi - phi'``.  Exactly zero when ``nu = 0``.

    Raises
    ------
    SeamError
        If ``psi`` is within ``SEAM_TOL`` of an odd multiple of pi, where the
        integrand has a pole on the integration line.
    """
    _require_left_half(k2)
    if cfg.nu == 0.0:
        return 0j
    z, zp = as_complex(z), as_complex(zp)
    psi = _angle(z) - _angle(zp)
    if abs(cmath.exp(1j * psi) + 1.0) < SEAM_TOL:
        raise SeamError("phi - phi' = +-pi is excluded")
    r, rp = abs(z), abs(zp)
    if r == 0.0 and rp == 0.0:
        raise CoincidenceError("both points at the vortex")
    chi = _resolve_chi(cfg, k2, chi)
    f = _delta_integrand(r, rp, psi, cfg, ZetaKernel(cfg, chi))
    val, _ = de_real_line(f, quad)
    return math.sin(math.pi * cfg.nu) / math.pi * val


def _window(psi):
    if abs(abs(psi) - math.pi) < SEAM_TOL:
        raise SeamError("phi - phi' = +-pi is excluded")
    if psi > math.pi:
        return 1
    if psi < -math.pi:
        return -1
    return 0


def green_closed(z, zp, cfg, k2, quad=DEFAULT_SPEC):
    """Closed-form Green function, see :class:`GreenDecomposition`.

    For ``nu = 0`` the vortex part is exactly zero and any admissible ``k2`` is
    accepted; otherwise ``Re k2 < 0`` is required by the Delta integral.
    """
    z, zp = as_complex(z), as_complex(zp)
    chi = chi_of(cfg, k2)
    psi = angle_difference(z, zp)
    branch = _window(psi)
    phase = cmath.exp(-1j * cfg.nu * (psi - TWO_PI * branch))
    delta = delta_integral(z, zp, cfg, k2, quad, chi=chi) if cfg.nu != 0.0 else 0j
    g0 = g0_closed(z, zp, cfg, k2, chi=chi)
    return GreenDecomposition(g0, delta, branch, phase, phase * g0 + delta)


# -- mode sum ----------------------------------------------------------------


@dataclass(frozen=True)
class ModeSumResult:
    value: complex
    channels: int
    tail_bound: float


def _channel(lo, hi, l, cfg, chi, psi):
    lam = l + cfg.nu
    if lo == 0.0:
        # at the vortex only the channel with l + nu = 0 survives, where w2(0) = 1
        if lam != 0.0:
            return 0j
        lc = _log_wronskian_constant(0.0, 1, cfg.b, chi)
        lp1, f1, _ = _w1_parts(hi, 0.0, cfg.b, chi, 2)
        return 0.5 * cmath.exp(lc + lp1) * f1 / (2.0 * math.pi)
    return _radial_green(lo, hi, lam, cfg.b, chi) * cmath.exp(1j * l * psi) / (2.0 * math.pi)


def green_mode_sum(z, zp, cfg, k2, tol=MODE_SUM_TOL, full_output=False):
    """Green function as the channel sum (1/2pi) sum_l G_{l+nu}(t, t') e^{il(phi-phi')}.

    Channels ``|l| <= L`` are summed with ``L`` doubling from
    ``MODE_SUM_START`` until the geometric tail bound, based on the ratio
    ``min(r, r') / max(r, r')``, drops below ``tol * max(1, |G|)``.

    Raises
    ------
    ConvergenceError
        If ``r = r'`` (no geometric decay) or the cap ``MODE_SUM_CAP`` is hit;
        the exception carries the partial sum and the tail bound.
    """
    _require_left_half(k2)
    z, zp = as_complex(z), as_complex(zp)
    if z == zp:
        raise CoincidenceError("the mode sum diverges at coinciding points")
    chi = chi_of(cfg, k2)
    t, tp = abs(z) ** 2, abs(zp) ** 2
    lo, hi = min(t, tp), max(t, tp)
    if hi >= 1.0:
        raise DomainError("points must lie inside the disk")
    psi = _angle(z) - _angle(zp)
    q = math.sqrt(lo / hi)
    if q == 0.0:
        total = _channel(0.0, hi, 0, cfg, chi, psi)
        res = ModeSumResult(total, 1, 0.0)
        return res if full_output else res.value

    total = _channel(lo, hi, 0, cfg, chi, psi)
    done = 0
    L = MODE_SUM_START
    tail = math.inf
    while True:
        last = 0.0
        for l in range(done + 1, L + 1):
            tp_, tm_ = _channel(lo, hi, l, cfg, chi, psi), _channel(lo, hi, -l, cfg, chi, psi)
            total += tp_ + tm_
            last = abs(tp_) + abs(tm_)
        done = L
        tail = last * q / (1.0 - q) if q < 1.0 else math.inf
        if tail <= tol * max(1.0, abs(total)):
            res = ModeSumResult(total, 2 * L + 1, tail)
            return res if full_output else res.value
        if q >= 1.0 or 2 * L > MODE_SUM_CAP:
            raise ConvergenceError(
                f"mode sum not converged with |l| <= {L}", estimate=total, error=tail)
        L *= 2


# -- coincidence limit and the C0 contour -------------------------------------


def delta_coincident(t, cfg, k2, quad=DEFAULT_SPEC, chi=None):
    """Delta_k(t): the vortex correction at coinciding points with r^2 = t."""
    if not 0.0 < t < 1.0:
        raise DomainError(f"t={t} must lie in (0, 1)")
    _require_left_half(k2)
    if cfg.nu == 0.0:
        return 0j
    chi = _resolve_chi(cfg, k2, chi)
    r = math.sqrt(t)
    f = _delta_integrand(r, r, 0.0, cfg, ZetaKernel(cfg, chi))
    val, _ = de_real_line(f, quad)
    return math.sin(math.pi * cfg.nu) / math.pi * val


def normalized_w1(z, l, cfg, k2):
    """Gamma(chi+b) Gamma(chi-b) / Gamma(2chi) e^{il(phi+pi)} w1(t), the C0-contour target."""
    z = as_complex(z)
    chi = chi_of(cfg, k2)
    phi = _angle(z)
    return _zeta_norm(cfg.b, chi) * cmath.exp(1j * l * (phi + math.pi)) * w1(abs(z) ** 2, l, cfg, k2)


def radial_wave_contour_check(z, l, cfg, k2, quad=DEFAULT_SPEC, method="segment"):
    """Integral of Psi_-(z, theta) e^{l theta} along the segment C0 joining the branch points.

    The segment is ``theta = x + i(phi + pi)`` with ``x`` from ``ln r`` to
    ``-ln r``.  With ``method="segment"`` it is integrated directly by a
    tanh-sinh rule whose endpoint factors are evaluated from the exact node
    complements; ``method="euler"`` first applies the substitution that turns
    it into an Euler-type integral over (0, 1).
    """
    _require_left_half(k2)
    z = as_complex(z)
    r = abs(z)
    if not 0.0 < r < 1.0:
        raise DomainError("the C0 segment needs 0 < |z| < 1")
    chi = chi_of(cfg, k2)
    b = cfg.b
    phi = _angle(z)
    t = r * r
    lr = math.log(r)
    cm = 1.0 - chi
    if method == "segment":
        # on the segment: 1 + z e^{-theta} = 1 - r e^{-x}, 1 + conj(z) e^{theta} = 1 - r e^{x}
        width = -2.0 * lr

        def f(s, sc):
            x = lr + width * s
            a1 = -np.expm1(2.0 * lr * s)
            a2 = -np.expm1(2.0 * lr * sc)
            return np.exp(-(cm - b) * np.log(a1) - (cm + b) * np.log(a2) + l * x)

        val, _ = de_unit_interval(f, quad)
        val *= width * cmath.exp(cm * math.log1p(-t))
    elif method == "euler":
        y = 1.0 - t

        def f(s, sc):
            return np.exp((chi - b - 1.0) * np.log(s) + (chi + b - 1.0) * np.log(sc)
                          + (l - chi - b) * np.log(t + y * sc))

        val, _ = de_unit_interval(f, quad)
        val *= cmath.exp(-l / 2.0 * math.log(t) + chi * math.log(y))
    else:
        raise DomainError(f"unknown method {method!r}")
    return cmath.exp(1j * l * (phi + math.pi)) * val
