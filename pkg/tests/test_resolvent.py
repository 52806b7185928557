import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abdisk.errors import CoincidenceError, ConvergenceError, DomainError, SeamError
from abdisk.geometry import MobiusElement, mobius_apply
from abdisk.operators import polar, vortex_hamiltonian
from abdisk.radial import PhysicalConfig, chi_of, radial_green
from abdisk.resolvent import (
    delta_coincident,
    delta_integral,
    g0_closed,
    green_closed,
    green_mode_sum,
    horocyclic,
    normalized_w1,
    radial_wave_contour_check,
    zeta_euler_integral,
    zeta_fn,
)


def rel(a, b):
    return abs(a - b) / abs(b)


def pt(r, phi):
    return r * cmath.exp(1j * phi)


CFG = PhysicalConfig(0.5, 0.0, 1.0)


# -- horocyclic waves ---------------------------------------------------------


@pytest.mark.parametrize("sign", ["+", "-"])
@pytest.mark.parametrize("hat", [False, True])
def test_horocyclic_at_origin(sign, hat):
    for theta in (0.3, -1.2 + 2j, 4j):
        assert horocyclic(0, theta, sign, hat, CFG, -2) == pytest.approx(1.0)


@pytest.mark.parametrize("sign", ["+", "-"])
@pytest.mark.parametrize("hat", [False, True])
@pytest.mark.parametrize("theta", [0.4 + 0.3j, -0.7 + 2.0j, 1.1 - 0.5j])
def test_horocyclic_solves_field_equation(sign, hat, theta):
    b = -0.7 if hat else 0.7
    cfg = PhysicalConfig(0.7)
    k2 = -1.3 + 0.4j
    # the hatted wave solves the equation with b -> -b
    eq_cfg = PhysicalConfig(b)
    f = polar(lambda z: horocyclic(z, theta, sign, hat, cfg, k2))
    for r, phi in [(0.3, 0.5), (0.6, 2.0)]:
        res = vortex_hamiltonian(f, r, phi, eq_cfg, 1e-4) - k2 * f(r, phi)
        assert abs(res) / abs(k2 * f(r, phi)) < 1e-5


def test_horocyclic_angular_relation():
    h = 1e-5
    z0 = pt(0.4, 1.0)
    theta = 0.2 + 0.9j
    f = lambda z, th: horocyclic(z, th, "-", False, CFG, -2)
    d_phi = (f(z0 * cmath.exp(1j * h), theta) - f(z0 * cmath.exp(-1j * h), theta)) / (2 * h)
    d_theta = (f(z0, theta + h) - f(z0, theta - h)) / (2 * h)
    assert abs(-1j * d_phi + d_theta) / abs(d_theta) < 1e-6


def test_horocyclic_branch_cut_refused():
    z = pt(0.5, 0.3)
    # branch point of 1 + z e^{-theta} at theta = ln r + i(phi + pi)
    with pytest.raises(DomainError):
        horocyclic(z, math.log(0.5) + 1j * (0.3 + math.pi), "+", False, CFG, -2)
    # on the cut to the left of it
    with pytest.raises(DomainError):
        horocyclic(z, math.log(0.5) - 1.0 + 1j * (0.3 + math.pi), "+", False, CFG, -2)


def test_horocyclic_periodic_in_imaginary_theta():
    z = pt(0.5, 0.3)
    a = horocyclic(z, -2.0 + 0.5j, "+", False, CFG, -2)
    b = horocyclic(z, -2.0 + 0.5j + 2j * math.pi, "+", False, CFG, -2)
    assert a == pytest.approx(b)


# -- zeta and the free kernel -------------------------------------------------


def test_zeta_near_one():
    chi = chi_of(CFG, -2)
    eps = 1e-9
    norm = math.gamma((chi + 0.5).real) * math.gamma((chi - 0.5).real) / math.gamma((2 * chi).real)
    assert zeta_fn(1 - eps, CFG, -2) / eps ** chi == pytest.approx(norm / (4 * math.pi), rel=1e-7)


def test_zeta_logarithm_at_chi_one():
    cfg = PhysicalConfig(0.0)
    for u in (0.01, 0.3, 0.9):
        assert zeta_fn(u, cfg, None, chi=1.0) == pytest.approx(-math.log(u) / (4 * math.pi), rel=1e-13)


def test_zeta_euler_integral_example():
    assert rel(zeta_fn(0.5, CFG, -2), zeta_euler_integral(0.5, CFG, -2)) < 1e-8


@given(st.floats(0.001, 0.999), st.floats(-1.5, 1.5), st.builds(complex, st.floats(-6, -0.2), st.floats(-2, 2)))
@settings(max_examples=25)
def test_zeta_euler_integral_property(u, b, k2):
    cfg = PhysicalConfig(b)
    assert rel(zeta_fn(u, cfg, k2), zeta_euler_integral(u, cfg, k2)) < 1e-8


def test_zeta_coincidence():
    with pytest.raises(CoincidenceError):
        zeta_fn(0.0, CFG, -2)
    with pytest.raises(CoincidenceError):
        g0_closed(0.3, 0.3, CFG, -2)


def test_g0_depends_on_u_only_at_b0():
    cfg = PhysicalConfig(0.0)
    g = MobiusElement.from_angle_and_point(0.7, 0.4 - 0.2j)
    z, zp = pt(0.3, 0.2), pt(0.5, 2.0)
    assert g0_closed(mobius_apply(g, z), mobius_apply(g, zp), cfg, -1) == pytest.approx(g0_closed(z, zp, cfg, -1), rel=1e-10)


@given(st.floats(0.0, 0.9), st.floats(0, 6.28), st.floats(0.0, 0.9), st.floats(0, 6.28))
def test_g0_hermitian_for_real_k2(r, p, rp, pp):
    z, zp = pt(r, p), pt(rp, pp)
    if abs(z - zp) < 1e-6:
        return
    assert g0_closed(z, zp, CFG, -1.7) == pytest.approx(g0_closed(zp, z, CFG, -1.7).conjugate(), rel=1e-10)


@given(st.floats(-3, 3), st.floats(0.0, 0.8), st.floats(0, 6.28))
def test_g0_modulus_mobius_invariant(a, wr, wp):
    g = MobiusElement.from_angle_and_point(a, pt(wr, wp))
    z, zp = pt(0.3, 0.2), pt(0.5, 2.0)
    lhs = abs(g0_closed(mobius_apply(g, z), mobius_apply(g, zp), CFG, -1 + 0.5j))
    assert lhs == pytest.approx(abs(g0_closed(z, zp, CFG, -1 + 0.5j)), rel=1e-9)


# -- vortex correction and the closed form -----------------------------------


def test_delta_vanishes_without_vortex():
    assert delta_integral(0.3, pt(0.4, 0.5), CFG, -1) == 0j
    assert delta_coincident(0.4, CFG, -1) == 0j


def test_delta_matches_mode_sum_example():
    cfg = PhysicalConfig(0.0, -0.5, 1.0)
    z, zp = 0.3, pt(0.4, 0.5)
    m = green_mode_sum(z, zp, cfg, -1)
    phase = cmath.exp(-1j * cfg.nu * (0.0 - 0.5))
    diff = m - phase * g0_closed(z, zp, cfg, -1)
    assert abs(delta_integral(z, zp, cfg, -1) - diff) < 1e-6


def test_delta_requires_left_half_plane():
    with pytest.raises(DomainError):
        delta_integral(0.3, 0.4j, PhysicalConfig(0.0, -0.5), 0.5 + 1j)


@pytest.mark.parametrize("psi", [math.pi, -math.pi, math.pi + 1e-9])
def test_seam_rejected(psi):
    cfg = PhysicalConfig(0.0, -0.5)
    z = pt(0.3, 0.2 + psi) if psi > 0 else pt(0.3, 4.0)
    zp = pt(0.4, 0.2) if psi > 0 else pt(0.4, 4.0 - psi)
    with pytest.raises(SeamError):
        green_closed(z, zp, cfg, -1)


def test_delta_finite_at_coincidence():
    cfg = PhysicalConfig(0.3, -0.4)
    z = pt(0.5, 1.0)
    target = delta_coincident(0.25, cfg, -1.5)
    vals = [delta_integral(z, z * (1 + eps), cfg, -1.5) for eps in (1e-2, 1e-3, 1e-4)]
    errs = [abs(v - target) for v in vals]
    # the approach is linear in the separation
    assert errs[0] / errs[1] == pytest.approx(10, rel=0.05)
    assert errs[1] / errs[2] == pytest.approx(10, rel=0.05)


def test_closed_form_without_vortex_is_free_kernel():
    g = green_closed(0.3, pt(0.4, 0.5), CFG, -1)
    assert g.delta == 0j and g.total == g.g0 and g.branch == 0


@pytest.mark.parametrize("phi,branch", [(0.5, 0), (4.0, 1), (-4.0 % (2 * math.pi), 0)])
def test_branch_windows(phi, branch):
    g = green_closed(pt(0.4, phi), pt(0.3, 0.2), PhysicalConfig(0.0, -0.3), -1)
    assert g.branch == branch
    assert green_closed(pt(0.3, 0.2), pt(0.4, 4.0), PhysicalConfig(0.0, -0.3), -1).branch == -1


def test_window_continuity_across_seam():
    cfg = PhysicalConfig(0.5, -0.3)
    zp = pt(0.4, 1.0)
    gaps = []
    for off in (0.05, 0.01, 0.002):
        lo = green_closed(pt(0.3, 1.0 + math.pi - off), zp, cfg, -1).total
        hi = green_closed(pt(0.3, 1.0 + math.pi + off), zp, cfg, -1).total
        gaps.append(abs(hi - lo) / abs(lo))
    assert gaps[0] < 0.1
    assert gaps[0] > gaps[1] > gaps[2]


@pytest.mark.parametrize("k2", [-1.0 + 0.3j, -2.5 - 1j])
def test_closed_form_hermiticity(k2):
    cfg = PhysicalConfig(0.5, -0.3)
    z, zp = pt(0.3, 0.7), pt(0.6, 2.2)
    a = green_closed(z, zp, cfg, k2).total
    b = green_closed(zp, z, cfg, complex(k2).conjugate()).total
    assert abs(a - b.conjugate()) < 1e-8 * abs(a)


@pytest.mark.parametrize("alpha", [0.3, 1.9, -2.4])
def test_rotation_invariance_of_modulus(alpha):
    cfg = PhysicalConfig(0.5, -0.3)
    z, zp = pt(0.3, 0.7), pt(0.6, 2.2)
    a = abs(green_closed(z, zp, cfg, -1).total)
    b = abs(green_closed(z * cmath.exp(1j * alpha), zp * cmath.exp(1j * alpha), cfg, -1).total)
    assert abs(a - b) < 1e-10 * a


def test_small_vortex_limit():
    cfg = PhysicalConfig(0.5, -1e-3)
    g = green_closed(pt(0.3, 0.7), pt(0.6, 2.2), cfg, -1)
    assert abs(g.delta) < 1e-2 * abs(g.g0)


# -- mode sum -----------------------------------------------------------------


def test_mode_sum_free_kernel():
    z, zp = pt(0.3, 0.7), pt(0.6, 2.2)
    assert rel(green_mode_sum(z, zp, CFG, -1), g0_closed(z, zp, CFG, -1)) < 1e-6


def test_mode_sum_cauchy_criterion():
    cfg = PhysicalConfig(0.5, -0.3)
    z, zp = pt(0.5, 0.7), pt(0.7, 2.2)
    res = green_mode_sum(z, zp, cfg, -1, tol=1e-12, full_output=True)
    coarse = green_mode_sum(z, zp, cfg, -1, tol=1e-6, full_output=True)
    assert res.channels >= coarse.channels
    assert abs(res.value - coarse.value) < 1e-6 * max(1.0, abs(res.value))


def test_mode_sum_fourier_coefficient():
    cfg = PhysicalConfig(0.5, -0.3)
    r, rp, n = 0.3, 0.8, 32
    phis = 2 * math.pi * np.arange(n) / n
    vals = np.array([green_mode_sum(pt(r, 0.0), pt(rp, p), cfg, -1, tol=1e-13) for p in phis])
    # psi = phi - phi' = -p, so the coefficient of e^{il psi} is the mean of vals * e^{il p}
    for l in (-2, 0, 3):
        coef = np.mean(vals * np.exp(1j * l * phis))
        assert abs(coef - radial_green(r * r, rp * rp, l + cfg.nu, cfg, -1) / (2 * math.pi)) < 1e-10


def test_mode_sum_refuses_equal_radii():
    with pytest.raises(ConvergenceError) as info:
        green_mode_sum(pt(0.5, 0.0), pt(0.5, 1.0), PhysicalConfig(0.0, -0.5), -1)
    assert info.value.estimate is not None


def test_mode_sum_at_vortex():
    cfg = PhysicalConfig(0.5, -0.4)
    assert green_mode_sum(0, 0.4j, cfg, -1) == 0j
    assert abs(green_closed(0, 0.4j, cfg, -1).total) < 1e-12


# -- coincidence limit and the C0 contour -------------------------------------


def test_delta_coincident_decay_near_boundary():
    cfg = PhysicalConfig(0.2, -0.5)
    k2 = -1.0
    chi = chi_of(cfg, k2).real
    e1, e2 = 1e-3, 1e-4
    slope = math.log(abs(delta_coincident(1 - e1, cfg, k2) / delta_coincident(1 - e2, cfg, k2))) / math.log(e1 / e2)
    assert slope == pytest.approx(2 * chi, abs=1e-2)


def test_delta_coincident_logarithm_near_vortex():
    cfg = PhysicalConfig(0.2, -0.5)
    d1, d2 = delta_coincident(1e-10, cfg, -1), delta_coincident(1e-12, cfg, -1)
    slope = (d1 - d2).real / math.log(1e2)
    assert slope == pytest.approx(1 / (4 * math.pi), rel=1e-2)


@pytest.mark.parametrize("method", ["segment", "euler"])
def test_contour_example(method):
    cfg = PhysicalConfig(0.5)
    z = pt(math.sqrt(0.4), 1.3)
    assert rel(radial_wave_contour_check(z, 0.7, cfg, -2, method=method), normalized_w1(z, 0.7, cfg, -2)) < 1e-6


def test_contour_real_for_symmetric_integrand():
    cfg = PhysicalConfig(0.0)
    val = radial_wave_contour_check(0.5, 0.0, cfg, -1.0)
    assert abs(val.imag) < 1e-14 * abs(val)


def test_contour_angular_momentum():
    cfg = PhysicalConfig(0.5)
    l, alpha = 0.7, 0.8
    z = pt(0.6, 1.0)
    a = radial_wave_contour_check(z, l, cfg, -2)
    b = radial_wave_contour_check(z * cmath.exp(1j * alpha), l, cfg, -2)
    assert b == pytest.approx(a * cmath.exp(1j * l * alpha), rel=1e-10)


def test_segment_integrand_is_the_horocyclic_wave():
    # the closed-form segment integrand equals Psi_- e^{l theta} at interior points
    cfg = PhysicalConfig(0.5)
    z = pt(0.6, 1.0)
    r, phi, l = 0.6, 1.0, 0.7
    chi = chi_of(cfg, -2)
    for x in (-0.3, 0.1, 0.4):
        theta = x + 1j * (phi + math.pi)
        direct = horocyclic(z, theta, "-", False, cfg, -2) * cmath.exp(l * theta)
        cm = 1 - chi
        formula = ((1 - r * r) ** cm / ((1 - r * math.exp(-x)) ** (cm - 0.5) * (1 - r * math.exp(x)) ** (cm + 0.5))
                   * math.exp(l * x) * cmath.exp(1j * l * (phi + math.pi)))
        assert direct == pytest.approx(formula, rel=1e-12)
