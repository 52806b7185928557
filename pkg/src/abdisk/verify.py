"""Self-check suites run by ``abdisk verify``.

Each suite returns a list of :class:`Check` records comparing a quantity with
an independent oracle (series vs connection formulas, finite differences, mode
sums, quadrature, residues).
"""

from dataclasses import dataclass
import cmath
import math

from .constants import FD_STEP
from .dos import (
    flat_limit_reference,
    integrated_delta_closed,
    integrated_delta_quadrature,
    residue_weight,
    rho_nu_discrete,
)
from .radial import (
    PhysicalConfig,
    radial_green,
    w1,
    w1_and_derivative,
    w2_and_derivative,
    wronskian_constant,
    wronskian_scaled,
)
from .resolvent import (
    green_closed,
    green_mode_sum,
    normalized_w1,
    radial_wave_contour_check,
    zeta_euler_integral,
    zeta_fn,
)
from .specfun import digamma, hyp2f1, hyp2f1_connection, hyp2f1_series, ln_gamma
from .spectrum import landau_levels, vortex_levels

__all__ = ["Check", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Check:
    name: str
    error: float
    tol: float

    @property
    def passed(self):
        return self.error < self.tol

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} error={self.error:.3e} tol={self.tol:.1e}"


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def suite_specfun():
    out = [
        Check("lnGamma(1/2) = ln sqrt(pi)", abs(ln_gamma(0.5) - 0.5 * math.log(math.pi)), 1e-14),
        Check("psi(1) = -gamma", abs(digamma(1.0) + 0.5772156649015329), 1e-14),
        Check("2F1(1,1;2;1/2) = 2 ln 2", _rel(hyp2f1(1, 1, 2, 0.5), 2 * math.log(2)), 1e-14),
        Check("2F1(1/2,1/2;2;1) = 4/pi", _rel(hyp2f1(0.5, 0.5, 2, 1.0), 4 / math.pi), 1e-14),
    ]
    for a, b, c, x in [(0.3 + 0.2j, 1.1, 2.5 - 0.4j, 0.45), (1.5, -0.7 + 1j, 3.2, 0.55)]:
        out.append(Check(f"series vs connection 2F1({a},{b};{c};{x})",
                         _rel(hyp2f1_series(a, b, c, x), hyp2f1_connection(a, b, c, x)), 1e-11))
    return out


def suite_wronskian():
    out = []
    cfg = PhysicalConfig(0.5, 0.0, 1.0)
    k2 = -2.0
    for l, s in [(0.7, "+"), (0.7, "-"), (-0.3, "+"), (-1.6, "-"), (2.2, "+"), (0.0, "+")]:
        c = wronskian_constant(l, s, cfg, k2)
        vals = [wronskian_scaled(t, l, s, cfg, k2) for t in (0.1, 0.3, 0.5, 0.7, 0.9)]
        spread = max(abs(v - vals[0]) for v in vals) / abs(vals[0])
        out.append(Check(f"t W constant l={l} sign={s}", spread, 1e-9))
        h = 1e-5

        def fd_tw(t):
            f1 = w1_and_derivative(t, l, cfg, k2)[0]
            f2 = w2_and_derivative(t, l, s, cfg, k2)[0]
            d1 = (w1_and_derivative(t + h, l, cfg, k2)[0] - w1_and_derivative(t - h, l, cfg, k2)[0]) / (2 * h)
            d2 = (w2_and_derivative(t + h, l, s, cfg, k2)[0] - w2_and_derivative(t - h, l, s, cfg, k2)[0]) / (2 * h)
            return t * (f1 * d2 - d1 * f2)

        out.append(Check(f"FD t W vs 1/C l={l} sign={s}", _rel(1.0 / fd_tw(0.5), c), 1e-8))
    for t in (0.25, 0.5, 0.75):
        h = 1e-6
        g = lambda tp: radial_green(t, tp, 0.7, cfg, k2)
        jump = (g(t + h) - g(t)) / h - (g(t) - g(t - h)) / h
        out.append(Check(f"radial Green jump at t={t}", _rel(jump, -1.0 / (2.0 * t)), 1e-5))
    return out


_PAIRS = [
    (0.3, 0.4 * cmath.exp(0.5j)),
    (0.5 * cmath.exp(2.0j), 0.2 * cmath.exp(5.0j)),
    (0.6 * cmath.exp(4.0j), 0.3 * cmath.exp(0.5j)),
]


def suite_modesum():
    out = []
    for b, nu, k2 in [(0.5, -0.3, -1.0), (0.0, -0.7, -2.0), (0.5, 0.0, -1.5)]:
        cfg = PhysicalConfig(b, nu, 1.0)
        for i, (z, zp) in enumerate(_PAIRS):
            g = green_closed(z, zp, cfg, k2).total
            m = green_mode_sum(z, zp, cfg, k2)
            out.append(Check(f"closed vs mode sum b={b} nu={nu} pair {i}",
                             abs(g - m) / max(1.0, abs(m)), 1e-6))
    return out


def suite_contour():
    out = []
    cfg = PhysicalConfig(0.5, 0.0, 1.0)
    out.append(Check("zeta(0.5) vs Euler integral",
                     _rel(zeta_fn(0.5, cfg, -2.0), zeta_euler_integral(0.5, cfg, -2.0)), 1e-8))
    for b, l, k2, z in [(0.5, 0.7, -2.0, 0.4 ** 0.5 * cmath.exp(0.9j)), (0.0, 0.0, -1.0, 0.5),
                        (-0.8, -1.3, -0.5, 0.7 * cmath.exp(2.5j)), (1.2, 2.4, -3.0, 0.3 * cmath.exp(5.0j))]:
        cfg = PhysicalConfig(b, 0.0, 1.0)
        out.append(Check(f"C0 contour vs w1 b={b} l={l}",
                         _rel(radial_wave_contour_check(z, l, cfg, k2), normalized_w1(z, l, cfg, k2)), 1e-6))
    return out


def suite_appendixb():
    out = []
    for b, nu, k2 in [(0.0, -0.5, -1.0), (0.5, -0.3, -2.0), (-0.7, -0.9, -0.5)]:
        cfg = PhysicalConfig(b, nu, 1.0)
        closed = integrated_delta_closed(cfg, k2)
        for path in ("radial", "double"):
            q = integrated_delta_quadrature(cfg, k2, path=path)
            out.append(Check(f"integrated Delta {path} route b={b} nu={nu}", _rel(q, closed), 1e-5))
    cfg = PhysicalConfig(2.0, -0.5, 1.0)
    for term in rho_nu_discrete(cfg):
        out.append(Check(f"residue weight at E={term.energy:g}",
                         _rel(residue_weight(cfg, term.energy), term.weight), 1e-6))
    return out


def suite_flatlimit():
    # The closed form tends to -nu(nu+1)/(2k2); see the README on the sign.
    devs = []
    for R in (10.0, 100.0, 1000.0):
        x = integrated_delta_closed(PhysicalConfig(0.0, -0.5, R), -1.0)
        devs.append(abs(x / -flat_limit_reference(-1.0, -0.5) - 1.0))
    out = [Check("large-R limit of the closed form at R=1000", devs[-1], 0.02)]
    out.append(Check("deviation decreasing in R", 0.0 if devs[0] > devs[1] > devs[2] else 1.0, 0.5))
    return out


def suite_spectrum():
    cfg = PhysicalConfig(2.0, -0.5, 1.0)
    out = [
        Check("Landau levels b=2", sum(abs(a - b) for a, b in
                                         zip([lv.value for lv in landau_levels(cfg)], [8.0, 16.0])), 1e-12),
        Check("vortex level b=2 nu=-1/2", abs(vortex_levels(cfg)[0].value - 13.0), 1e-12),
        Check("no levels for |b| < 1/2", float(len(landau_levels(PhysicalConfig(0.4, -0.5)))
                                                + len(vortex_levels(PhysicalConfig(0.4, -0.5)))), 0.5),
    ]
    from .operators import polar, vortex_hamiltonian
    from .spectrum import eigenfunction
    for b, nu in [(2.0, -0.5), (-3.3, -0.2)]:
        cfg = PhysicalConfig(b, nu, 1.0)
        for lv in landau_levels(cfg) + vortex_levels(cfg):
            l = lv.allowed_l.first(1)[0]
            f = polar(lambda z, lv=lv, l=l: eigenfunction(lv.n, l, z, lv.family, cfg))
            r, phi = 0.55, 0.7
            res = vortex_hamiltonian(f, r, phi, cfg, FD_STEP) - lv.value * f(r, phi)
            out.append(Check(f"eigen-equation {lv.family} n={lv.n} l={l} b={b}",
                             abs(res) / abs(lv.value * f(r, phi)), 1e-5))
    return out


SUITES = {
    "specfun": suite_specfun,
    "wronskian": suite_wronskian,
    "modesum": suite_modesum,
    "contour": suite_contour,
    "appendixB": suite_appendixb,
    "flatlimit": suite_flatlimit,
    "spectrum": suite_spectrum,
}


def run_suite(name):
    """Checks of one suite, or of all suites for ``name="all"``."""
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[name]()
