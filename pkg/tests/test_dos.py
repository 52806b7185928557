import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from abdisk.dos import (
    _rho_nu_discrete_terms,
    appendix_b_kernel,
    boundary_value,
    dos_scan,
    flat_limit_reference,
    integrated_delta_closed,
    integrated_delta_quadrature,
    lambda_param,
    residue_weight,
    richardson_boundary_value,
    rho0_continuous,
    rho0_discrete,
    rho_nu_continuous,
    rho_nu_discrete,
    rho_nu_total,
)
from abdisk.errors import DomainError, EdgeSingularityError, PoleError
from abdisk.radial import PhysicalConfig
from abdisk.spectrum import continuum_edge, landau_levels, vortex_levels


def test_lambda():
    assert lambda_param(1.0, PhysicalConfig(0.0)) == 0
    assert lambda_param(5.0, PhysicalConfig(0.0)) == 1
    assert lambda_param(9.0, PhysicalConfig(1.0)) == 1
    with pytest.raises(DomainError):
        lambda_param(0.5, PhysicalConfig(0.0))


def test_rho0_continuous():
    cfg = PhysicalConfig(0.0)
    assert rho0_continuous(0.5, cfg) == 0
    assert rho0_continuous(5.0, cfg) == pytest.approx(math.tanh(math.pi) / (4 * math.pi), rel=1e-14)
    assert rho0_continuous(1 + 4 * 30 ** 2, cfg) == pytest.approx(1 / (4 * math.pi), rel=1e-14)


@given(st.floats(-3, 3))
def test_rho0_continuous_at_edge(b):
    assume(abs(math.cos(2 * math.pi * b) + 1) > 1e-2)
    cfg = PhysicalConfig(b)
    edge = continuum_edge(cfg)
    assert rho0_continuous(edge, cfg) == 0
    assert abs(rho0_continuous(edge * (1 + 1e-10), cfg)) < 1e-3


def test_rho0_half_integer_edge():
    cfg = PhysicalConfig(0.5)
    with pytest.raises(EdgeSingularityError):
        rho0_continuous(continuum_edge(cfg), cfg)
    assert math.isfinite(rho0_continuous(continuum_edge(cfg) + 1e-6, cfg))


def test_rho0_discrete():
    assert rho0_discrete(PhysicalConfig(0.3)) == []
    (term,) = rho0_discrete(PhysicalConfig(1.0))
    assert (term.energy, term.weight) == (4.0, pytest.approx(1 / math.pi))
    assert all(t.weight > 0 for t in rho0_discrete(PhysicalConfig(-5.2, 0, 1.7)))


def test_rho_nu_discrete_example():
    terms = {(t.energy, t.weight) for t in rho_nu_discrete(PhysicalConfig(2.0, -0.5))}
    assert terms == {(13.0, 1.0), (8.0, -0.5), (16.0, -1.5)}


@pytest.mark.parametrize("b,nu", [(3.3, -0.2), (-3.3, -0.2), (2.0, -0.5), (-4.7, -0.9)])
def test_rho_nu_discrete_energies_in_spectrum(b, nu):
    cfg = PhysicalConfig(b, nu)
    energies = {lv.value for lv in landau_levels(cfg) + vortex_levels(cfg)}
    assert {t.energy for t in rho_nu_discrete(cfg)} <= energies


@pytest.mark.parametrize("b", [2.0, 3.7, -2.0, -3.7])
def test_rho_nu_discrete_cancels_at_integer_flux(b):
    cfg = PhysicalConfig(b, 0.0)
    net = {}
    for t in _rho_nu_discrete_terms(cfg):
        key = round(t.energy, 9)
        net[key] = net.get(key, 0.0) + t.weight
    assert all(abs(w) < 1e-12 for w in net.values())
    assert rho_nu_discrete(cfg) == []


def test_rho_nu_continuous_basic():
    assert rho_nu_continuous(7.0, PhysicalConfig(0.3, 0.0)) == 0.0
    assert rho_nu_continuous(0.5, PhysicalConfig(0.3, -0.5)) == 0.0
    cfg = PhysicalConfig(0.0, -0.5)
    assert abs(rho_nu_continuous(5.0, cfg) - boundary_value(5.0, cfg, 1e-6)) < 1e-4
    lam5 = 1 + 4 * 25
    for b, nu, R in [(0.0, -0.5, 1.0), (0.7, -0.3, 2.0)]:
        cfg = PhysicalConfig(b, nu, R)
        assert abs(rho_nu_continuous((lam5 + 4 * b * b) / R ** 2, cfg)) < 1e-3 * R ** 2


def test_rho_nu_continuous_edge():
    cfg = PhysicalConfig(0.3, -0.5)
    with pytest.raises(EdgeSingularityError):
        rho_nu_continuous(continuum_edge(cfg), cfg)
    # b = 0, nu = -1/2: tan(pi/2) makes a half-integer denominator
    cfg = PhysicalConfig(0.0, -0.5)
    with pytest.raises(EdgeSingularityError):
        rho_nu_continuous(continuum_edge(cfg), cfg)
    # b - nu = 1 and b = 0 -> braces vanish at the edge: limit 0
    cfg = PhysicalConfig(0.0, -0.999999999999)
    assert math.isfinite(rho_nu_continuous(continuum_edge(cfg) + 1e-3, cfg))


@given(st.floats(-2.5, 2.5), st.floats(-0.95, -0.05), st.floats(0.5, 150.0))
@settings(max_examples=40)
def test_boundary_values_match_continuous_part(b, nu, gap):
    # at least 0.5 above the edge, hence 0.5 away from every discrete energy
    cfg = PhysicalConfig(b, nu)
    E = continuum_edge(cfg) + gap
    assert abs(richardson_boundary_value(E, cfg) - rho_nu_continuous(E, cfg)) < 1e-4


def test_closed_form_vanishes_without_vortex():
    assert integrated_delta_closed(PhysicalConfig(0.7, 0.0), -1.0) == 0j
    assert integrated_delta_quadrature(PhysicalConfig(0.7, 0.0), -1.0) == 0j


def test_closed_form_pole_and_domain():
    with pytest.raises(PoleError):
        integrated_delta_closed(PhysicalConfig(2.0, -0.5), 13.0 + 1e-13j)
    with pytest.raises(DomainError):
        integrated_delta_closed(PhysicalConfig(2.0, -0.5), 20.0)


@given(st.floats(-2, 2), st.floats(-0.95, -0.05), st.builds(complex, st.floats(-5, 30), st.floats(0.01, 5)))
def test_closed_form_reflection(b, nu, k2):
    cfg = PhysicalConfig(b, nu)
    assert integrated_delta_closed(cfg, k2.conjugate()) == pytest.approx(integrated_delta_closed(cfg, k2).conjugate())


@pytest.mark.parametrize("b,nu,k2", [(0.0, -0.5, -1.0), (0.5, -0.3, -2.0), (-0.7, -0.9, -0.5), (1.3, -0.6, -0.4 + 0.8j)])
@pytest.mark.parametrize("path", ["radial", "double"])
def test_quadrature_routes(b, nu, k2, path):
    cfg = PhysicalConfig(b, nu)
    closed = integrated_delta_closed(cfg, k2)
    assert abs(integrated_delta_quadrature(cfg, k2, path=path) - closed) < 1e-5 * abs(closed)


@pytest.mark.parametrize("theta,thetap", [(0.3, -0.8), (-2.0, 1.5), (3.0, 3.0)])
def test_appendix_kernel_forms_agree(theta, thetap):
    cfg = PhysicalConfig(0.5, -0.3)
    u = appendix_b_kernel(theta, thetap, cfg, -2.0, form="u")
    s = appendix_b_kernel(theta, thetap, cfg, -2.0, form="s")
    assert abs(u - s) < 1e-9 * abs(s)


@pytest.mark.parametrize("b,nu", [(2.0, -0.5), (3.3, -0.2), (-3.3, -0.2), (-2.6, -0.7)])
def test_residues_reproduce_weights(b, nu):
    cfg = PhysicalConfig(b, nu)
    for term in rho_nu_discrete(cfg):
        assert residue_weight(cfg, term.energy) == pytest.approx(term.weight, rel=1e-6)


def test_flat_limit_reference():
    assert flat_limit_reference(-1, 0.0) == 0
    assert flat_limit_reference(-1, -1.0) == 0
    assert flat_limit_reference(-1, -0.5) == pytest.approx(0.125)
    with pytest.raises(DomainError):
        flat_limit_reference(0, -0.5)


def test_large_radius_limit_of_closed_form():
    # the closed form approaches -nu(nu + 1)/(2 k2), the opposite sign of the reference
    ratios = [integrated_delta_closed(PhysicalConfig(0.0, -0.5, R), -1.0) / flat_limit_reference(-1.0, -0.5)
              for R in (10.0, 100.0, 1000.0)]
    devs = [abs(r + 1) for r in ratios]
    assert devs[0] > devs[1] > devs[2]
    assert devs[2] < 0.02


def test_total():
    assert rho_nu_total(7.0, PhysicalConfig(0.4, 0.0)) == (0.0, [])
    cont, disc = rho_nu_total(7.0, PhysicalConfig(0.3, -0.5))
    assert cont != 0 and disc == []
    cont, disc = rho_nu_total(20.0, PhysicalConfig(2.0, -0.5))
    assert len(disc) == 3


def test_scan():
    cfg = PhysicalConfig(0.0, -0.5)
    samples = dos_scan([0.0, 0.5, 2.0, 5.0], cfg)
    assert [s.above_edge for s in samples] == [False, False, True, True]
    assert samples[0].rho0_c == samples[0].rho_nu_c == 0
