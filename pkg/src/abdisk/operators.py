"""Finite-difference application of the disk Hamiltonians, used as oracles."""

import cmath


def vortex_hamiltonian(f, r, phi, cfg, h):
    """Apply H_v to ``f(r, phi)`` at a point by second-order central differences.

    H_v = -(1-r^2)^2/R^2 [d_rr + d_r/r + (d_phi + i nu)^2/r^2
          + 4ib/(1-r^2) (d_phi + i nu) - 4 b^2 r^2/(1-r^2)^2]

    With ``nu = 0`` this is the uniform-field Hamiltonian.
    """
    b, nu, R = cfg.b, cfg.nu, cfg.R
    f0 = f(r, phi)
    frp, frm = f(r + h, phi), f(r - h, phi)
    fpp, fpm = f(r, phi + h), f(r, phi - h)
    d_r = (frp - frm) / (2.0 * h)
    d_rr = (frp - 2.0 * f0 + frm) / (h * h)
    d_p = (fpp - fpm) / (2.0 * h)
    d_pp = (fpp - 2.0 * f0 + fpm) / (h * h)
    # (d_phi + i nu)^2 = d_pp + 2 i nu d_p - nu^2
    cov2 = d_pp + 2j * nu * d_p - nu * nu * f0
    cov1 = d_p + 1j * nu * f0
    w = 1.0 - r * r
    inner = d_rr + d_r / r + cov2 / (r * r) + 4j * b / w * cov1 - 4.0 * b * b * r * r / (w * w) * f0
    return -(w * w) / (R * R) * inner


def polar(f):
    """Turn a function of a complex disk point into a function of (r, phi)."""
    return lambda r, phi: f(r * cmath.exp(1j * phi))
