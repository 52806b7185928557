"""Double-exponential quadrature on the real line and on the unit interval.

Integrands are vectorized: they receive numpy arrays of nodes and return arrays
of (complex) values.  Each level halves the step of the trapezoidal rule in the
transformed variable; the difference between consecutive levels is the error
estimate.
"""

from dataclasses import dataclass
import math

import numpy as np

from .constants import QUAD_ABS_TOL, QUAD_MAX_LEVEL, QUAD_REL_TOL
from .errors import ConvergenceError

__all__ = [
    "QuadratureSpec",
    "de_real_line",
    "de_unit_interval",
    "real_line_nodes",
    "unit_interval_nodes",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budget for the double-exponential rules."""

    rel_tol: float = QUAD_REL_TOL
    abs_tol: float = QUAD_ABS_TOL
    max_level: int = QUAD_MAX_LEVEL
    min_level: int = 2
    h0: float = 0.5
    tau_max_line: float = 6.5
    tau_max_unit: float = 4.5


DEFAULT_SPEC = QuadratureSpec()


def real_line_nodes(level, spec=DEFAULT_SPEC):
    """Nodes and weights of the sinh rule for an integral over (-inf, inf)."""
    h = spec.h0 / 2 ** level
    n = int(math.ceil(spec.tau_max_line / h))
    tau = h * np.arange(-n, n + 1)
    return np.sinh(tau), h * np.cosh(tau)


def unit_interval_nodes(level, spec=DEFAULT_SPEC):
    """Tanh-sinh nodes ``s``, complements ``1 - s`` and weights on (0, 1)."""
    h = spec.h0 / 2 ** level
    n = int(math.ceil(spec.tau_max_unit / h))
    tau = h * np.arange(-n, n + 1)
    arg = math.pi * np.sinh(tau)
    with np.errstate(over="ignore"):
        s = 1.0 / (1.0 + np.exp(-arg))
        sc = 1.0 / (1.0 + np.exp(arg))
    w = h * math.pi * np.cosh(tau) * s * sc
    keep = (s > 0) & (sc > 0) & (w > 0)
    return s[keep], sc[keep], w[keep]


def _refine(evaluate, spec, what):
    prev = None
    err = math.inf
    for level in range(spec.max_level + 1):
        val = evaluate(level)
        if not np.isfinite(val):
            raise ConvergenceError(f"{what}: non-finite value at level {level}")
        if prev is not None:
            err = abs(val - prev)
            if level >= spec.min_level and err <= max(spec.abs_tol, spec.rel_tol * abs(val)):
                return val, err
        prev = val
    raise ConvergenceError(
        f"{what}: no convergence after {spec.max_level} levels", estimate=prev, error=err
    )


def de_real_line(f, spec=DEFAULT_SPEC):
    """Integrate a vectorized ``f`` over the whole real line.

    Suited to integrands decaying at least exponentially.  Returns
    ``(value, error_estimate)``.
    """

    def evaluate(level):
        x, w = real_line_nodes(level, spec)
        with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
            vals = np.asarray(f(x)) * w
        vals = np.where(w == 0, 0, vals)
        return complex(np.sum(vals))

    return _refine(evaluate, spec, "real-line quadrature")


def de_unit_interval(f, spec=DEFAULT_SPEC):
    """Integrate ``f(s, 1 - s)`` over (0, 1), tolerating endpoint singularities.

    ``f`` receives the node array and its exact complement so that factors
    like ``(1 - s)**p`` keep relative accuracy near ``s = 1``.
    """

    def evaluate(level):
        s, sc, w = unit_interval_nodes(level, spec)
        with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
            vals = np.asarray(f(s, sc)) * w
        return complex(np.sum(vals))

    return _refine(evaluate, spec, "unit-interval quadrature")
