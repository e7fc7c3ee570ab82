"""Primitives of the Poincare disk model.

Points are Euclidean coordinates strictly inside the unit disk, geodesics are
diameters or circles orthogonal to the unit circle, and orientation-preserving
isometries are Mobius maps z -> e^{i phi} (z - a) / (1 - conj(a) z).
Curvature is fixed at -1. All values are immutable and all operations pure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateInputError, DomainError

# Beyond this hyperbolic length tanh(d/2) is indistinguishable from 1 in
# doubles and points collapse onto the boundary circle.
D_MAX = 20.0

_COLLINEAR_TOL = 1e-12
_COINCIDENT_TOL = 1e-12


@dataclass(frozen=True)
class DiskPoint:
    """A point of the hyperbolic plane in disk coordinates, |p| < 1."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError("disk point coordinates must be finite")
        if self.x * self.x + self.y * self.y >= 1.0:
            raise DomainError(
                f"point ({self.x}, {self.y}) is not strictly inside the unit disk"
            )

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @classmethod
    def from_complex(cls, z: complex) -> "DiskPoint":
        return cls(z.real, z.imag)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


ORIGIN = DiskPoint(0.0, 0.0)


@dataclass(frozen=True)
class EuclideanCircle:
    """A circle in the Euclidean plane of the model (center may leave the disk)."""

    cx: float
    cy: float
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise DomainError("circle radius must be positive and finite")
        if not (math.isfinite(self.cx) and math.isfinite(self.cy)):
            raise DomainError("circle center must be finite")

    @property
    def center(self) -> complex:
        return complex(self.cx, self.cy)

    def orthogonality_residual(self) -> float:
        """|center|^2 - 1 - radius^2; zero iff orthogonal to the unit circle."""
        return self.cx * self.cx + self.cy * self.cy - 1.0 - self.radius * self.radius


@dataclass(frozen=True)
class Geodesic:
    """A hyperbolic line: a diameter, or an arc of a circle orthogonal to the boundary."""

    direction: complex | None
    circle: EuclideanCircle | None

    @classmethod
    def diameter(cls, direction: complex) -> "Geodesic":
        mod = abs(direction)
        if not math.isfinite(mod) or mod < _COINCIDENT_TOL:
            raise DegenerateInputError("diameter direction must be a nonzero vector")
        return cls(direction / mod, None)

    @classmethod
    def arc(cls, circle: EuclideanCircle) -> "Geodesic":
        return cls(None, circle)

    @property
    def is_diameter(self) -> bool:
        return self.circle is None


@dataclass(frozen=True)
class DiskIsometry:
    """Orientation-preserving disk automorphism: z -> e^{i phi} (z - a)/(1 - conj(a) z).

    ``target`` is the point a carried to the origin; ``phi`` is the rotation
    applied afterwards.
    """

    target: DiskPoint
    phi: float = 0.0

    @classmethod
    def identity(cls) -> "DiskIsometry":
        return cls(ORIGIN, 0.0)

    def __call__(self, p: DiskPoint) -> DiskPoint:
        a = self.target.z
        w = (p.z - a) / (1.0 - a.conjugate() * p.z)
        if self.phi != 0.0:
            w *= cmath.exp(1j * self.phi)
        return DiskPoint(w.real, w.imag)

    def inverse(self) -> "DiskIsometry":
        a = self.target.z
        b = -a * cmath.exp(1j * self.phi)
        return DiskIsometry(DiskPoint(b.real, b.imag), -self.phi)


def point_from_polar(d: float, theta: float) -> DiskPoint:
    """Point at hyperbolic distance d from the origin in direction theta."""
    if not (0.0 <= d <= D_MAX):
        raise DomainError(f"hyperbolic distance {d} outside [0, {D_MAX}]")
    r = math.tanh(0.5 * d)
    return DiskPoint(r * math.cos(theta), r * math.sin(theta))


def hyp_distance(p: DiskPoint, q: DiskPoint) -> float:
    """Hyperbolic distance 2 artanh(|p - q| / |1 - conj(p) q|).

    Evaluated as log1p(2t/(1-t)) to stay accurate for t near 1.
    """
    t = abs(p.z - q.z) / abs(1.0 - p.z.conjugate() * q.z)
    if t >= 1.0:
        raise DomainError("distance overflow: points too close to the boundary")
    return math.log1p(2.0 * t / (1.0 - t))


def geodesic_through(p: DiskPoint, q: DiskPoint) -> Geodesic:
    """The hyperbolic line through two distinct points.

    Returns the diameter when p, q, origin are collinear, otherwise the unique
    Euclidean circle through p and q orthogonal to the unit circle.
    """
    chord = q.z - p.z
    if abs(chord) <= _COINCIDENT_TOL:
        raise DegenerateInputError("cannot build a geodesic through coincident points")
    cross = p.x * q.y - p.y * q.x
    if abs(cross) <= _COLLINEAR_TOL * max(p.norm(), q.norm()):
        return Geodesic.diameter(chord)
    # Orthogonality to the unit circle means the power of the origin is 1,
    # which linearizes to 2 c.p = 1 + |p|^2 and likewise for q.
    rp = 0.5 * (1.0 + p.x * p.x + p.y * p.y)
    rq = 0.5 * (1.0 + q.x * q.x + q.y * q.y)
    cx = (rp * q.y - rq * p.y) / cross
    cy = (p.x * rq - q.x * rp) / cross
    r2 = cx * cx + cy * cy - 1.0
    if r2 <= 0.0:
        raise DegenerateInputError("orthogonal-circle construction collapsed")
    return Geodesic.arc(EuclideanCircle(cx, cy, math.sqrt(r2)))


def isometry_to_origin(p: DiskPoint) -> DiskIsometry:
    """The pure translation carrying p to the center of the model."""
    return DiskIsometry(p, 0.0)


def apply_isometry(m: DiskIsometry, p: DiskPoint) -> DiskPoint:
    return m(p)


def angle_at_vertex(v: DiskPoint, p: DiskPoint, q: DiskPoint) -> float:
    """Unsigned hyperbolic angle at v between the geodesics vp and vq, in [0, pi].

    The model is conformal, so after translating v to the center both
    geodesics become straight rays and the angle is read off directly.
    """
    m = isometry_to_origin(v)
    u = m(p).z
    w = m(q).z
    if abs(u) <= _COINCIDENT_TOL or abs(w) <= _COINCIDENT_TOL:
        raise DegenerateInputError("angle undefined: vertex coincides with an endpoint")
    return abs(cmath.phase(u * w.conjugate()))


def direction_toward(p: DiskPoint, q: DiskPoint) -> float:
    """Initial direction (radians) of the geodesic from p to q.

    Directions at p are measured in the chart that translates p to the origin;
    ``step_from`` uses the same chart, so the two compose consistently.
    """
    w = isometry_to_origin(p)(q).z
    if abs(w) <= _COINCIDENT_TOL:
        raise DegenerateInputError("direction undefined for coincident points")
    return cmath.phase(w)


def step_from(p: DiskPoint, theta: float, d: float) -> DiskPoint:
    """Walk hyperbolic distance d from p in direction theta (chart of p)."""
    return isometry_to_origin(p).inverse()(point_from_polar(d, theta))
