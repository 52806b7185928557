"""Complex special functions: log-gamma, digamma, Gauss 2F1, Jacobi, Pochhammer.

The hypergeometric function is evaluated for complex parameters and a real
argument in ``[0, 1]``.  Two routes are available: the Gauss power series in
``x`` and the linear connection formula that expands around ``x = 1``
(including the logarithmic forms used when ``c - a - b`` is an integer).  The
public :func:`hyp2f1` picks a route by argument and falls back to the other one
when the first is badly conditioned.

Functions that take an argument close to 1 also accept its complement
``y = 1 - x`` so that logarithms of ``y`` keep full relative accuracy.
"""

import cmath
import math

import numpy as np

from .constants import (
    DEGENERATE_TOL,
    EULER_GAMMA,
    HYP_COND_SWITCH,
    HYP_MAX_TERMS,
    HYP_SERIES_EPS,
    POLE_TOL,
)
from .errors import ConvergenceError, DomainError, NonFiniteError, PoleError

__all__ = [
    "EULER_GAMMA",
    "digamma",
    "hyp2f1",
    "hyp2f1_array",
    "hyp2f1_connection",
    "hyp2f1_series",
    "jacobi_p",
    "ln_gamma",
    "pochhammer",
    "rgamma",
]

# B_{2k} / (2k (2k-1))
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
)
# B_{2k} / (2k)
_DIGAMMA_ASY = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_SHIFT = 10.0


def _finite(value, what):
    if not cmath.isfinite(value):
        raise NonFiniteError(f"{what} is not finite: {value!r}")
    return value


def _nearest_nonpositive_int(z, tol=POLE_TOL):
    """Return the nonpositive integer within ``tol`` of ``z``, else None."""
    z = complex(z)
    if abs(z.imag) > tol or z.real > tol:
        return None
    n = round(z.real)
    if abs(z.real - n) <= tol:
        return int(n)
    return None


def _lngamma_raw(z):
    """log Gamma on some branch; only ``exp`` of the result is meaningful."""
    if z.real < -30.0:
        # reflection keeps the recurrence short for very negative arguments
        s = cmath.sin(math.pi * z)
        return complex(math.log(math.pi)) - cmath.log(s) - _lngamma_raw(1.0 - z)
    shift = 0j
    if z.real < _SHIFT:
        prod = 1.0 + 0j
        while z.real < _SHIFT:
            prod *= z
            z += 1.0
            if abs(prod) > 1e250:
                shift += cmath.log(prod)
                prod = 1.0 + 0j
        shift += cmath.log(prod)
    inv = 1.0 / z
    inv2 = inv * inv
    acc = 0j
    power = inv
    for c in _STIRLING:
        acc += c * power
        power *= inv2
    return (z - 0.5) * cmath.log(z) - z + _HALF_LOG_2PI + acc - shift


def _wrap_phase(w):
    im = math.remainder(w.imag, 2.0 * math.pi)
    if im == -math.pi:
        im = math.pi
    return complex(w.real, im)


def ln_gamma(z):
    """Principal logarithm of the gamma function.

    The imaginary part is reduced to ``(-pi, pi]`` so that ``exp`` of the
    result is ``Gamma(z)``.

    Raises
    ------
    PoleError
        If ``z`` is within ``POLE_TOL`` of a nonpositive integer.
    """
    z = complex(z)
    if _nearest_nonpositive_int(z) is not None:
        raise PoleError(f"Gamma has a pole at {z}", location=z)
    return _finite(_wrap_phase(_lngamma_raw(z)), "ln_gamma")


def rgamma(z):
    """Reciprocal gamma function, equal to zero at the poles of Gamma."""
    z = complex(z)
    if _nearest_nonpositive_int(z) is not None:
        return 0j
    return cmath.exp(-_lngamma_raw(z))


def _gamma_ratio(num, den):
    """prod Gamma(num) / prod Gamma(den); zero if a denominator is a pole."""
    acc = 0j
    for z in den:
        z = complex(z)
        if _nearest_nonpositive_int(z) is not None:
            return 0j
        acc -= _lngamma_raw(z)
    for z in num:
        z = complex(z)
        if _nearest_nonpositive_int(z) is not None:
            raise PoleError(f"Gamma has a pole at {z}", location=z)
        acc += _lngamma_raw(z)
    return _exp(acc)


def _exp(w):
    try:
        return cmath.exp(w)
    except OverflowError as exc:
        raise NonFiniteError(f"exp overflow for exponent {w}") from exc


def digamma(z):
    """Digamma function psi(z) = Gamma'(z) / Gamma(z) for complex ``z``."""
    z = complex(z)
    if _nearest_nonpositive_int(z) is not None:
        raise PoleError(f"digamma has a pole at {z}", location=z)
    return _finite(_digamma(z), "digamma")


def _digamma(z):
    if z.real < 0.5:
        return _digamma(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    acc = 0j
    while z.real < _SHIFT:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    power = inv2
    tail = 0j
    for c in _DIGAMMA_ASY:
        tail += c * power
        power *= inv2
    return acc + cmath.log(z) - 0.5 / z - tail


def pochhammer(a, n):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0 or int(n) != n:
        raise DomainError("pochhammer needs a nonnegative integer n")
    a = complex(a)
    out = 1.0 + 0j
    for j in range(int(n)):
        out *= a + j
    return out


def jacobi_p(n, alpha, beta, x):
    """Jacobi polynomial P_n^(alpha, beta)(x) by the three-term recurrence."""
    if n < 0 or int(n) != n:
        raise DomainError("jacobi_p needs a nonnegative integer degree")
    n = int(n)
    p_prev = 1.0
    if n == 0:
        return p_prev
    ab = alpha + beta
    p = (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        c = 2 * k + ab
        a1 = 2.0 * k * (k + ab) * (c - 2.0)
        if a1 == 0.0:
            return _jacobi_explicit(n, alpha, beta, x)
        a2 = (c - 1.0) * (c * (c - 2.0) * x + alpha * alpha - beta * beta)
        a3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c
        p_prev, p = p, (a2 * p - a3 * p_prev) / a1
    return p


def _jacobi_explicit(n, alpha, beta, x):
    # sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)
    total = 0.0
    for s in range(n + 1):
        c1 = _binom(n + alpha, n - s)
        c2 = _binom(n + beta, s)
        total += c1 * c2 * ((x - 1.0) / 2.0) ** s * ((x + 1.0) / 2.0) ** (n - s)
    return total


def _binom(top, k):
    out = 1.0
    for j in range(k):
        out *= (top - j) / (j + 1)
    return out


# ---------------------------------------------------------------------------
# Gauss hypergeometric function


def _series(a, b, c, x, max_terms=HYP_MAX_TERMS):
    """Gauss series with a condition estimate max|term| / |sum|."""
    total = 1.0 + 0j
    if x == 0.0:
        return total, 1.0
    term = 1.0 + 0j
    big = 1.0
    warm = max(abs(a), abs(b), abs(c))
    for n in range(max_terms):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        term *= ratio
        total += term
        size = abs(term)
        if size > big:
            big = size
        if term == 0:
            break
        if n + 1 > warm:
            rho = max(abs(ratio), x)
            if rho < 1.0 and size * rho / (1.0 - rho) <= HYP_SERIES_EPS * abs(total):
                break
    else:
        raise ConvergenceError(
            f"2F1 series did not converge in {max_terms} terms at x={x}",
            estimate=total,
        )
    mag = abs(total)
    return total, (big / mag if mag > 0 else math.inf)


def _terminating(a, b, c, x):
    """Finite sum when a or b is a nonpositive integer."""
    degs = [-k for k in (_nearest_nonpositive_int(a), _nearest_nonpositive_int(b)) if k is not None]
    deg = min(degs)
    total = 1.0 + 0j
    term = 1.0 + 0j
    big = 1.0
    for n in range(deg):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        total += term
        big = max(big, abs(term))
    mag = abs(total)
    return total, (big / mag if mag > 0 else math.inf)


def _connection(a, b, c, x, y):
    """Expansion around x = 1 in powers of y = 1 - x, with a condition estimate."""
    s = c - a - b
    m = round(s.real)
    if abs(s - m) < DEGENERATE_TOL:
        if m < 0:
            # Euler transformation flips the sign of c - a - b
            val, cond = _log_connection(c - a, c - b, -m, y)
            return _exp(s * math.log(y)) * val, cond
        return _log_connection(a, b, m, y)
    g1 = _gamma_ratio([c, s], [c - a, c - b])
    g2 = _gamma_ratio([c, -s], [a, b])
    t1 = t2 = 0j
    c1 = c2 = 1.0
    if g1 != 0:
        f1, c1 = _series(a, b, 1.0 - s, y)
        t1 = g1 * f1
    if g2 != 0 and y > 0.0:
        f2, c2 = _series(c - a, c - b, 1.0 + s, y)
        t2 = _exp(s * math.log(y)) * g2 * f2
    total = t1 + t2
    mag = abs(total)
    cond = (abs(t1) * c1 + abs(t2) * c2) / mag if mag > 0 else math.inf
    return total, cond


def _log_connection(a, b, m, y, max_terms=HYP_MAX_TERMS):
    """2F1(a, b; a+b+m; 1-y) for integer m >= 0 (logarithmic case)."""
    if y == 0.0:
        if m == 0:
            raise DomainError("2F1 diverges at x = 1 when c - a - b = 0")
        return _gamma_ratio([m, a + b + m], [a + m, b + m]), 1.0
    log_y = math.log(y)
    finite = 0j
    fin_big = 0.0
    if m > 0:
        pref1 = _gamma_ratio([m, a + b + m], [a + m, b + m])
        term = 1.0 + 0j
        finite = term
        fin_big = 1.0
        for n in range(m - 1):
            term *= (a + n) * (b + n) / ((n + 1) * (1 - m + n)) * y
            finite += term
            fin_big = max(fin_big, abs(term))
        finite *= pref1
        fin_big *= abs(pref1)
    # second part: -(-1)^m y^m Gamma(a+b+m) / (Gamma(a) Gamma(b) m!) * sum
    if _nearest_nonpositive_int(a) is not None or _nearest_nonpositive_int(b) is not None:
        inf_part = 0j
        inf_big = 0.0
    else:
        lead = _lngamma_raw(a + b + m) - _lngamma_raw(a) - _lngamma_raw(b)
        lead -= math.lgamma(m + 1) - m * log_y
        pref2 = -((-1) ** m) * _exp(lead)
        psi_a = _digamma(a + m)
        psi_b = _digamma(b + m)
        psi_1 = -EULER_GAMMA
        psi_m = -EULER_GAMMA + sum(1.0 / j for j in range(1, m + 1))
        coef = 1.0 + 0j
        total = coef * (log_y - psi_1 - psi_m + psi_a + psi_b)
        big = abs(total)
        warm = max(abs(a + m), abs(b + m))
        for n in range(max_terms):
            ratio = (a + m + n) * (b + m + n) / ((n + 1) * (n + m + 1)) * y
            psi_a += 1.0 / (a + m + n)
            psi_b += 1.0 / (b + m + n)
            psi_1 += 1.0 / (n + 1)
            psi_m += 1.0 / (n + m + 1)
            coef *= ratio
            term = coef * (log_y - psi_1 - psi_m + psi_a + psi_b)
            total += term
            size = abs(term)
            big = max(big, size)
            if coef == 0:
                break
            if n + 1 > warm:
                rho = max(abs(ratio), y)
                if rho < 1.0 and size * rho / (1.0 - rho) <= HYP_SERIES_EPS * abs(total):
                    break
        else:
            raise ConvergenceError("logarithmic 2F1 series did not converge", estimate=total)
        inf_part = pref2 * total
        inf_big = abs(pref2) * big
    value = finite + inf_part
    mag = abs(value)
    cond = (fin_big + inf_big) / mag if mag > 0 else math.inf
    return value, cond


def _check_params(c):
    if _nearest_nonpositive_int(c) is not None:
        raise PoleError(f"2F1 parameter c={c} is a nonpositive integer", location=c)


def _hyp2f1(a, b, c, x, y=None):
    """Value and condition estimate; ``y`` is the exact complement 1 - x."""
    a, b, c = complex(a), complex(b), complex(c)
    x = float(x)
    y = 1.0 - x if y is None else float(y)
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"2F1 argument must lie in [0, 1], got {x}")
    _check_params(c)
    if x == 0.0:
        return 1.0 + 0j, 1.0
    if _nearest_nonpositive_int(a) is not None or _nearest_nonpositive_int(b) is not None:
        val, cond = _terminating(a, b, c, x)
        if cond <= HYP_COND_SWITCH or x <= 0.5:
            return val, cond
        try:
            alt = _connection(a, b, c, x, y)
        except (PoleError, ConvergenceError, NonFiniteError):
            return val, cond
        return alt if alt[1] < cond else (val, cond)
    if y == 0.0:
        s = c - a - b
        if s.real <= 0.0:
            raise DomainError("2F1 at x = 1 requires Re(c - a - b) > 0")
        return _gamma_ratio([c, s], [c - a, c - b]), 1.0
    routes = (_series, _connection) if x <= 0.5 else (_connection, _series)
    best = None
    failure = None
    for route in routes:
        try:
            if route is _series:
                cand = _series(a, b, c, x)
            else:
                cand = _connection(a, b, c, x, y)
        except (ConvergenceError, NonFiniteError, PoleError) as exc:
            failure = exc
            continue
        if best is None or cand[1] < best[1]:
            best = cand
        if best[1] <= HYP_COND_SWITCH:
            break
    if best is None:
        raise failure
    return best


def hyp2f1(a, b, c, x):
    """Gauss hypergeometric function 2F1(a, b; c; x) for real x in [0, 1].

    Parameters
    ----------
    a, b, c : complex
        Parameters; ``c`` must not be a nonpositive integer.
    x : float
        Argument in ``[0, 1]``.  At ``x = 1`` the Gauss summation theorem is
        used and ``Re(c - a - b) > 0`` is required.

    Returns
    -------
    complex

    Raises
    ------
    PoleError, DomainError, ConvergenceError
    """
    return _finite(_hyp2f1(a, b, c, x)[0], "hyp2f1")


def hyp2f1_series(a, b, c, x):
    """2F1 from the Gauss power series only (no route selection)."""
    a, b, c = complex(a), complex(b), complex(c)
    _check_params(c)
    if not (0.0 <= x < 1.0):
        raise DomainError("series route needs 0 <= x < 1")
    return _series(a, b, c, float(x))[0]


def hyp2f1_connection(a, b, c, x):
    """2F1 from the x -> 1 - x connection formulas only."""
    a, b, c = complex(a), complex(b), complex(c)
    _check_params(c)
    if not (0.0 < x <= 1.0):
        raise DomainError("connection route needs 0 < x <= 1")
    if x == 1.0:
        return _hyp2f1(a, b, c, 1.0)[0]
    return _connection(a, b, c, float(x), 1.0 - float(x))[0]


# ---------------------------------------------------------------------------
# vectorized evaluation for fixed parameters


def _coefficients(ratio, limit, eps=1e-18, max_terms=HYP_MAX_TERMS):
    """Power-series coefficients c_n with c_0 = 1 until |c_n| limit^n is negligible."""
    coefs = [1.0 + 0j]
    c = 1.0 + 0j
    big = 1.0
    scale = 1.0
    for n in range(max_terms):
        c = c * ratio(n)
        scale *= limit
        coefs.append(c)
        size = abs(c) * scale
        big = max(big, size)
        if n > 8 and size < eps * big and abs(coefs[-2]) * scale / limit < eps * big:
            return np.array(coefs)
    raise ConvergenceError("coefficient table did not converge")


def _horner(coefs, z):
    out = np.zeros_like(z, dtype=complex) + coefs[-1]
    for c in coefs[-2::-1]:
        out = out * z + c
    return out


class _FixedParameterHyp:
    """2F1(a, b; c; .) tabulated as power series around 0 and around 1."""

    def __init__(self, a, b, c, split=0.5):
        a, b, c = complex(a), complex(b), complex(c)
        _check_params(c)
        self.a, self.b, self.c, self.split = a, b, c, split
        self.low = _coefficients(lambda n: (a + n) * (b + n) / ((c + n) * (n + 1)), split)
        hi = 1.0 - split
        s = c - a - b
        m = round(s.real)
        self.degenerate = abs(s - m) < DEGENERATE_TOL
        self.s = s
        if self.degenerate:
            if m < 0:
                self._euler = True
                a, b, m = c - a, c - b, -m
            else:
                self._euler = False
            self.m = m
            self.fin = np.array([1.0 + 0j])
            self.pref1 = 0j
            if m > 0:
                coefs = [1.0 + 0j]
                t = 1.0 + 0j
                for n in range(m - 1):
                    t *= (a + n) * (b + n) / ((n + 1) * (1 - m + n))
                    coefs.append(t)
                self.fin = np.array(coefs)
                self.pref1 = _gamma_ratio([m, a + b + m], [a + m, b + m])
            self.has_log = (_nearest_nonpositive_int(a) is None and _nearest_nonpositive_int(b) is None)
            if self.has_log:
                self.lead = (_lngamma_raw(a + b + m) - _lngamma_raw(a) - _lngamma_raw(b)
                             - math.lgamma(m + 1))
                self.sign = -((-1) ** m)
                base = _coefficients(
                    lambda n: (a + m + n) * (b + m + n) / ((n + 1) * (n + m + 1)), hi)
                nterm = len(base)
                psi = np.empty(nterm, dtype=complex)
                pa, pb = _digamma(a + m), _digamma(b + m)
                p1 = -EULER_GAMMA
                pm = -EULER_GAMMA + sum(1.0 / j for j in range(1, m + 1))
                for n in range(nterm):
                    psi[n] = -p1 - pm + pa + pb
                    pa += 1.0 / (a + m + n)
                    pb += 1.0 / (b + m + n)
                    p1 += 1.0 / (n + 1)
                    pm += 1.0 / (n + m + 1)
                self.log_coef = base
                self.psi_coef = base * psi
        else:
            self.g1 = _gamma_ratio([c, s], [c - a, c - b])
            self.g2 = _gamma_ratio([c, -s], [a, b])
            self.hi1 = _coefficients(lambda n: (a + n) * (b + n) / ((1.0 - s + n) * (n + 1)), hi)
            self.hi2 = _coefficients(
                lambda n: (c - a + n) * (c - b + n) / ((1.0 + s + n) * (n + 1)), hi)

    def __call__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        out = np.empty(np.broadcast(x, y).shape, dtype=complex)
        x, y = np.broadcast_arrays(x, y)
        lo = x <= self.split
        if np.any(lo):
            out[lo] = _horner(self.low, x[lo].astype(complex))
        hi = ~lo
        if np.any(hi):
            out[hi] = self._near_one(y[hi])
        return out

    def _near_one(self, y):
        yc = y.astype(complex)
        if self.degenerate:
            m = self.m
            val = self.pref1 * _horner(self.fin, yc) if m > 0 else np.zeros_like(yc)
            if self.has_log:
                with np.errstate(divide="ignore"):
                    log_y = np.log(y)
                pref2 = self.sign * np.exp(self.lead + m * log_y)
                val = val + pref2 * (log_y * _horner(self.log_coef, yc) + _horner(self.psi_coef, yc))
            if self._euler:
                val = val * np.exp(self.s * np.log(y))
            return val
        with np.errstate(divide="ignore"):
            ys = np.exp(self.s * np.log(y))
        return self.g1 * _horner(self.hi1, yc) + self.g2 * ys * _horner(self.hi2, yc)


def hyp2f1_array(a, b, c, x, y=None):
    """Vectorized 2F1(a, b; c; x) for fixed parameters over an array of x in [0, 1).

    Coefficient tables are built once per call, so this is intended for many
    arguments at moderate parameter size.  ``y`` optionally supplies ``1 - x``
    exactly.
    """
    x = np.asarray(x, dtype=float)
    y = 1.0 - x if y is None else np.asarray(y, dtype=float)
    if np.any(x < 0) or np.any(y <= 0):
        raise DomainError("hyp2f1_array needs 0 <= x < 1")
    out = _FixedParameterHyp(a, b, c)(x, y)
    if not np.all(np.isfinite(out)):
        raise NonFiniteError("hyp2f1_array produced non-finite values")
    return out
