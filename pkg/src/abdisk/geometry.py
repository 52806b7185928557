"""Poincare disk: points, invariant measure, SU(1,1) action, point-pair invariant."""

from dataclasses import dataclass
import cmath
import math

from .constants import MOBIUS_TOL
from .errors import ConstraintError, DomainError

__all__ = [
    "DiskPoint",
    "MobiusElement",
    "angle_difference",
    "as_complex",
    "geodesic_distance",
    "measure_weight",
    "mobius_apply",
    "point_invariant",
    "unitary_mobius_apply",
]


@dataclass(frozen=True)
class DiskPoint:
    """A point of the open unit disk stored as a complex number.

    ``phi`` is taken in ``[0, 2*pi)``.
    """

    z: complex

    def __post_init__(self):
        z = complex(self.z)
        if not abs(z) < 1.0:
            raise DomainError(f"point {z} is not inside the unit disk")
        object.__setattr__(self, "z", z)

    @classmethod
    def polar(cls, r, phi):
        if not 0.0 <= r < 1.0:
            raise DomainError(f"radius {r} outside [0, 1)")
        return cls(r * cmath.exp(1j * phi))

    @property
    def r(self):
        return abs(self.z)

    @property
    def t(self):
        """Squared radius, the natural radial variable."""
        return self.z.real ** 2 + self.z.imag ** 2

    @property
    def phi(self):
        return cmath.phase(self.z) % (2.0 * math.pi)


def as_complex(p):
    """Accept a DiskPoint or a plain number and return the complex coordinate."""
    if isinstance(p, DiskPoint):
        return p.z
    z = complex(p)
    if not abs(z) < 1.0:
        raise DomainError(f"point {z} is not inside the unit disk")
    return z


@dataclass(frozen=True)
class MobiusElement:
    """Element ((alpha, beta), (conj beta, conj alpha)) of SU(1,1).

    The constraint ``|alpha|^2 - |beta|^2 = 1`` is checked on construction.
    """

    alpha: complex
    beta: complex

    def __post_init__(self):
        a, b = complex(self.alpha), complex(self.beta)
        det = abs(a) ** 2 - abs(b) ** 2
        if abs(det - 1.0) >= MOBIUS_TOL * max(1.0, abs(a) ** 2):
            raise ConstraintError(f"|alpha|^2 - |beta|^2 = {det}, expected 1")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @classmethod
    def from_angle_and_point(cls, angle, w):
        """z -> (e^{i angle} z + w) / (conj(w) e^{i angle} z + 1)."""
        w = as_complex(w)
        n = 1.0 / math.sqrt(1.0 - abs(w) ** 2)
        rot = cmath.exp(0.5j * angle)
        return cls(rot * n, w * n * rot.conjugate())

    def __matmul__(self, other):
        a1, b1 = self.alpha, self.beta
        a2, b2 = other.alpha, other.beta
        return MobiusElement(a1 * a2 + b1 * b2.conjugate(), a1 * b2 + b1 * a2.conjugate())

    def inverse(self):
        return MobiusElement(self.alpha.conjugate(), -self.beta)


def mobius_apply(g, z):
    """Image ``(alpha z + beta) / (conj(beta) z + conj(alpha))`` of a disk point."""
    if not isinstance(g, MobiusElement):
        raise ConstraintError("mobius_apply expects a MobiusElement")
    z = as_complex(z)
    w = (g.alpha * z + g.beta) / (g.beta.conjugate() * z + g.alpha.conjugate())
    if abs(w) >= 1.0:
        # rounding can push images of points near the boundary onto it
        w = w / abs(w) * math.nextafter(1.0, 0.0)
    return w


def unitary_mobius_apply(alpha, beta, z):
    """Map ``s = (conj(alpha) z - beta) / (-conj(beta) z + alpha)``.

    This is the auxiliary substitution with ``|alpha|^2 + |beta|^2 = 1`` used to
    move a second point to the origin when reducing horocyclic integrals.  It
    is not an element of the SU(1,1) action and is kept separate from
    :func:`mobius_apply`.
    """
    alpha, beta = complex(alpha), complex(beta)
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) >= MOBIUS_TOL:
        raise ConstraintError("expected |alpha|^2 + |beta|^2 = 1")
    z = complex(z)
    return (alpha.conjugate() * z - beta) / (-beta.conjugate() * z + alpha)


def point_invariant(z, zp):
    """u(z, z') = |(z' - z) / (1 - conj(z) z')|^2, in [0, 1)."""
    z, zp = as_complex(z), as_complex(zp)
    num = abs(zp - z) ** 2
    den = abs(1.0 - z.conjugate() * zp) ** 2
    return min(num / den, math.nextafter(1.0, 0.0))


def point_invariant_complement(z, zp):
    """1 - u(z, z') computed without cancellation."""
    z, zp = as_complex(z), as_complex(zp)
    den = abs(1.0 - z.conjugate() * zp) ** 2
    return (1.0 - abs(z) ** 2) * (1.0 - abs(zp) ** 2) / den


def geodesic_distance(z, zp, R=1.0):
    """Geodesic distance R * artanh(sqrt(u)) for the metric R^2 |dz|^2 / (1 - |z|^2)^2."""
    if R <= 0:
        raise DomainError("R must be positive")
    return R * math.atanh(math.sqrt(point_invariant(z, zp)))


def measure_weight(t, R=1.0):
    """Density R^2 / (2 (1 - t)^2) of the invariant measure in the variable t = r^2."""
    if not 0.0 <= t < 1.0:
        raise DomainError(f"t={t} outside [0, 1)")
    return R * R / (2.0 * (1.0 - t) ** 2)


def angle_difference(z, zp):
    """phi - phi' with both angles in [0, 2 pi); the result lies in (-2 pi, 2 pi)."""
    def phase(w):
        return cmath.phase(w) % (2.0 * math.pi) if w != 0 else 0.0

    return phase(as_complex(z)) - phase(as_complex(zp))
