"""Radial Schrodinger problem at fixed (possibly fractional) angular momentum.

In the variable ``t = r^2`` the radial Hamiltonian reads

    H_l = -(1-t)^2/R^2 [4t d^2/dt^2 + 4 d/dt - l^2/t - 4bl/(1-t) - 4b^2 t/(1-t)^2]

and the spectral parameter ``k2`` enters through
``chi = (1 + sqrt(1 + 4b^2 - k2 R^2)) / 2`` (principal square root).

Solutions are returned as complex numbers.  Internally every solution is kept
as ``exp(log_prefactor) * F`` with ``F`` a hypergeometric factor, so that high
angular momenta do not overflow when ``t`` is small.
"""

from dataclasses import dataclass
import cmath
import math

from .constants import BOUND_STATE_TOL
from .errors import DomainError, PoleError
from .specfun import _hyp2f1, _lngamma_raw, _nearest_nonpositive_int

__all__ = [
    "PhysicalConfig",
    "SpectralParameter",
    "chi_of",
    "radial_green",
    "radial_operator",
    "w1",
    "w1_and_derivative",
    "w2",
    "w2_and_derivative",
    "wronskian_constant",
    "wronskian_scaled",
]


@dataclass(frozen=True)
class PhysicalConfig:
    """Field strength ``b = B R^2 / 4``, vortex flux ``nu`` in (-1, 0], radius ``R``."""

    b: float = 0.0
    nu: float = 0.0
    R: float = 1.0

    def __post_init__(self):
        if not -1.0 < self.nu <= 0.0:
            raise DomainError(f"nu={self.nu} must lie in (-1, 0]")
        if not self.R > 0.0:
            raise DomainError(f"R={self.R} must be positive")
        for name in ("b", "nu", "R"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")


@dataclass(frozen=True)
class SpectralParameter:
    """Complex energy ``k2`` with the derived branch value ``chi``."""

    k2: complex
    chi: complex

    @classmethod
    def make(cls, cfg, k2):
        return cls(complex(k2), chi_of(cfg, k2))


def _check_k2(k2):
    k2 = complex(k2)
    if not cmath.isfinite(k2):
        raise DomainError("k2 must be finite")
    if k2.imag == 0.0 and k2.real >= 0.0:
        raise DomainError(f"k2={k2} lies on [0, inf), outside the resolvent set")
    return k2


def chi_of(cfg, k2):
    """chi = (1 + sqrt(1 + 4 b^2 - k2 R^2)) / 2 with the principal square root.

    For ``k2`` off ``[0, inf)`` the radicand is off the closed negative axis,
    so ``Re chi > 1/2``.
    """
    k2 = _check_k2(k2)
    return _chi(cfg, k2)


def _chi(cfg, k2):
    return 0.5 * (1.0 + cmath.sqrt(1.0 + 4.0 * cfg.b * cfg.b - k2 * cfg.R * cfg.R))


def _resolve_chi(cfg, k2, chi):
    if chi is not None:
        return complex(chi)
    return chi_of(cfg, k2)


def _sign(sign):
    if sign in ("+", 1, +1.0):
        return 1
    if sign in ("-", -1, -1.0):
        return -1
    raise DomainError(f"sign must be '+' or '-', got {sign!r}")


def _check_t(t):
    if not 0.0 < t < 1.0:
        raise DomainError(f"t={t} must lie in (0, 1)")


# -- w^(I): square integrable at t = 1 ---------------------------------------


def _w1_parts(t, l, b, chi, rep, deriv=False):
    """(log prefactor, F, dF/dt) with w1 = exp(log prefactor) * F."""
    if rep == 1:
        p, a1, a2 = -l / 2.0, chi - b, chi + b - l
    else:
        p, a1, a2 = l / 2.0, chi + b, chi - b + l
    logpref = p * math.log(t) + chi * math.log1p(-t)
    f = _hyp2f1(a1, a2, 2.0 * chi, 1.0 - t, t)[0]
    df = 0j
    if deriv:
        # d/dt F(a, b; c; 1 - t) = -(ab/c) F(a+1, b+1; c+1; 1 - t)
        df = -(a1 * a2 / (2.0 * chi)) * _hyp2f1(a1 + 1.0, a2 + 1.0, 2.0 * chi + 1.0, 1.0 - t, t)[0]
        df = df + f * (p / t - chi / (1.0 - t))
    return logpref, f, df


def _auto_rep(l):
    return 2 if l >= 0 else 1


def w1(t, l, cfg, k2, rep=None, chi=None):
    """Solution t^{-l/2} (1-t)^chi 2F1(chi-b, chi+b-l; 2chi; 1-t), regular at t = 1.

    ``rep`` selects the first (1) or second (2) of the two equivalent
    hypergeometric representations; by default the one whose series has no
    large negative parameter is used.
    """
    _check_t(t)
    chi = _resolve_chi(cfg, k2, chi)
    rep = _auto_rep(l) if rep is None else rep
    if rep not in (1, 2):
        raise DomainError("rep must be 1 or 2")
    if _nearest_nonpositive_int(2.0 * chi) is not None:
        raise PoleError("2 chi is a nonpositive integer", location=2.0 * chi)
    logpref, f, _ = _w1_parts(t, l, cfg.b, chi, rep)
    return cmath.exp(logpref) * f


def w1_and_derivative(t, l, cfg, k2, rep=None, chi=None):
    """Value and analytic t-derivative of :func:`w1`."""
    _check_t(t)
    chi = _resolve_chi(cfg, k2, chi)
    rep = _auto_rep(l) if rep is None else rep
    logpref, f, df = _w1_parts(t, l, cfg.b, chi, rep, deriv=True)
    scale = cmath.exp(logpref)
    return scale * f, scale * df


# -- w^(II, +-): square integrable at t = 0 -----------------------------------


def _check_w2(l, s):
    if s > 0 and not l > -1.0:
        raise DomainError("w2 with sign '+' needs l > -1")
    if s < 0 and not l < 1.0:
        raise DomainError("w2 with sign '-' needs l < 1")
    if _nearest_nonpositive_int(1.0 + s * l) is not None:
        raise PoleError(f"1 {'+' if s > 0 else '-'} l is a nonpositive integer")


def _w2_parts(t, l, s, b, chi, deriv=False):
    p = s * l / 2.0
    a1, a2, c = chi + s * b, chi - s * b + s * l, 1.0 + s * l
    logpref = p * math.log(t) + chi * math.log1p(-t)
    f = _hyp2f1(a1, a2, c, t)[0]
    df = 0j
    if deriv:
        df = (a1 * a2 / c) * _hyp2f1(a1 + 1.0, a2 + 1.0, c + 1.0, t)[0]
        df = df + f * (p / t - chi / (1.0 - t))
    return logpref, f, df


def w2(t, l, sign, cfg, k2, chi=None):
    """Solution t^{+-l/2} (1-t)^chi 2F1(chi+-b, chi-+b+-l; 1+-l; t), regular at t = 0."""
    _check_t(t)
    s = _sign(sign)
    _check_w2(l, s)
    chi = _resolve_chi(cfg, k2, chi)
    logpref, f, _ = _w2_parts(t, l, s, cfg.b, chi)
    return cmath.exp(logpref) * f


def w2_and_derivative(t, l, sign, cfg, k2, chi=None):
    """Value and analytic t-derivative of :func:`w2`."""
    _check_t(t)
    s = _sign(sign)
    _check_w2(l, s)
    chi = _resolve_chi(cfg, k2, chi)
    logpref, f, df = _w2_parts(t, l, s, cfg.b, chi, deriv=True)
    scale = cmath.exp(logpref)
    return scale * f, scale * df


# -- Wronskian and Green function --------------------------------------------


def _log_wronskian_constant(l, s, b, chi):
    num = (chi + s * b, chi - s * b + s * l)
    for z in num:
        if _nearest_nonpositive_int(z, BOUND_STATE_TOL) is not None:
            raise PoleError(
                f"Gamma({z}) is on a pole: k2 is a bound-state energy of this channel",
                location=z,
            )
    den = (2.0 * chi, 1.0 + s * l)
    for z in den:
        if _nearest_nonpositive_int(z) is not None:
            return None
    return (_lngamma_raw(num[0]) + _lngamma_raw(num[1])
            - _lngamma_raw(den[0]) - _lngamma_raw(den[1]))


def wronskian_constant(l, sign, cfg, k2, chi=None):
    """C = Gamma(chi+-b) Gamma(chi-+b+-l) / (Gamma(2chi) Gamma(1+-l)).

    It satisfies ``t * W(w1, w2) = 1 / C`` with ``W = f1 f2' - f1' f2``.

    Raises
    ------
    PoleError
        When a numerator gamma argument is within ``BOUND_STATE_TOL`` of a
        nonpositive integer, i.e. at a bound state of the channel.
    """
    s = _sign(sign)
    _check_w2(l, s)
    chi = _resolve_chi(cfg, k2, chi)
    lc = _log_wronskian_constant(l, s, cfg.b, chi)
    return 0j if lc is None else cmath.exp(lc)


def wronskian_scaled(t, l, sign, cfg, k2, chi=None):
    """t * W(w1, w2^{+-})(t) from analytic derivatives."""
    f1, d1 = w1_and_derivative(t, l, cfg, k2, chi=chi)
    f2, d2 = w2_and_derivative(t, l, sign, cfg, k2, chi=chi)
    return t * (f1 * d2 - d1 * f2)


def green_sign(l):
    """Branch of w2 used by the regular extension: '+' for l >= 0, '-' otherwise."""
    return 1 if l >= 0 else -1


def radial_green(t, tp, l, cfg, k2, chi=None):
    """Radial resolvent kernel of the regular extension.

    G(t, t') = (C/2) w2(min(t, t')) w1(max(t, t')), symmetric in its
    arguments, with ``w2`` taken with sign '+' for ``l >= 0`` and '-' for
    ``l < 0`` so that it vanishes like ``t^{|l|/2}`` at the origin.
    """
    _check_t(t)
    _check_t(tp)
    chi = _resolve_chi(cfg, k2, chi)
    return _radial_green(min(t, tp), max(t, tp), l, cfg.b, chi)


def _radial_green(lo, hi, l, b, chi):
    s = green_sign(l)
    _check_w2(l, s)
    lc = _log_wronskian_constant(l, s, b, chi)
    if lc is None:
        return 0j
    lp2, f2, _ = _w2_parts(lo, l, s, b, chi)
    lp1, f1, _ = _w1_parts(hi, l, b, chi, _auto_rep(l))
    return 0.5 * cmath.exp(lc + lp2 + lp1) * f2 * f1


def radial_operator(f, t, l, cfg, h):
    """Apply H_l to a callable ``f`` at ``t`` with central differences of step ``h``."""
    b, R = cfg.b, cfg.R
    fm, f0, fp = f(t - h), f(t), f(t + h)
    d1 = (fp - fm) / (2.0 * h)
    d2 = (fp - 2.0 * f0 + fm) / (h * h)
    pot = l * l / t + 4.0 * b * l / (1.0 - t) + 4.0 * b * b * t / (1.0 - t) ** 2
    return -((1.0 - t) ** 2) / (R * R) * (4.0 * t * d2 + 4.0 * d1 - pot * f0)
