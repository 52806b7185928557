import math

import numpy as np
import pytest

from abdisk.errors import ConvergenceError
from abdisk.quadrature import QuadratureSpec, de_real_line, de_unit_interval


def test_gaussian():
    val, err = de_real_line(lambda x: np.exp(-x * x))
    assert val == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert err < 1e-8


def test_slow_exponential_tails():
    # 1 / cosh(0.1 x) decays slowly but the sinh map copes
    val, _ = de_real_line(lambda x: 1.0 / np.cosh(0.1 * x))
    assert val == pytest.approx(10 * math.pi, rel=1e-10)


@pytest.mark.parametrize("p,q", [(0.5, 0.5), (0.1, 2.0), (-0.4, 0.3)])
def test_beta_integrals_with_endpoint_singularities(p, q):
    val, _ = de_unit_interval(lambda s, sc: s ** (p - 1 + 1) * sc ** (q - 1))
    ref = math.gamma(p + 1) * math.gamma(q) / math.gamma(p + 1 + q)
    assert val == pytest.approx(ref, rel=1e-9)


def test_complex_integrand():
    val, _ = de_unit_interval(lambda s, sc: np.exp(1j * math.pi * s))
    assert val == pytest.approx(2j / math.pi, abs=1e-13)


def test_nonconvergence_reported():
    spec = QuadratureSpec(rel_tol=1e-14, max_level=2)
    with pytest.raises(ConvergenceError) as info:
        de_real_line(lambda x: np.cos(40 * x) / (1 + x * x), spec)
    assert info.value.estimate is not None
