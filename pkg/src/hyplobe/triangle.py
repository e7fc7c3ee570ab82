"""Hyperbolic triangle trigonometry and the maximal-area construction.

Implements the SAS solver, the angle-defect area, the omega-circle / B'
figure in the disk (with A at the center), the tau angle whose double equals
the triangle area, and the solver for the maximal-area apex angle
characterized by alpha = beta + gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .disk import (
    D_MAX,
    ORIGIN,
    DiskPoint,
    EuclideanCircle,
    geodesic_through,
    point_from_polar,
)
from .errors import DegenerateInputError, DomainError, SolverError

# Apex angles are kept this far away from 0 and pi; closer in, the triangle
# is numerically degenerate.
ALPHA_EPS = 1e-6

_SCAN_POINTS = 256
_BISECT_HALF_WIDTH = 1e-14
_BISECT_MAX_ITER = 200


@dataclass(frozen=True)
class TriangleSolution:
    """Sides and angles of a hyperbolic triangle; side a is opposite alpha."""

    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float
    area: float

    def __post_init__(self) -> None:
        # b and c are domain-limited by the solver; the derived side a may
        # legitimately exceed D_MAX (up to about 2 * D_MAX).
        for s in (self.a, self.b, self.c):
            if not (0.0 < s and math.isfinite(s)):
                raise DomainError(f"triangle side {s} must be positive and finite")
        angle_sum = self.alpha + self.beta + self.gamma
        for ang in (self.alpha, self.beta, self.gamma):
            if not (0.0 < ang < math.pi):
                raise DomainError(f"triangle angle {ang} outside (0, pi)")
        if angle_sum >= math.pi:
            raise DomainError("angle sum must be below pi in the hyperbolic plane")
        if abs(self.area - (math.pi - angle_sum)) > 1e-14:
            raise DomainError("stored area disagrees with the angle defect")


@dataclass(frozen=True)
class Figure1:
    """The full disk construction for a triangle with apex A at the center.

    ``omega`` is the Euclidean circle containing geodesic BC, ``psi`` the
    Euclidean circle traced by C as the apex angle varies (center the origin,
    radius tanh(b/2)), ``b_prime`` the second intersection of line AB with
    omega, and ``tau`` the Euclidean angle at b_prime in triangle A-b_prime-C.
    """

    A: DiskPoint
    B: DiskPoint
    C: DiskPoint
    omega: EuclideanCircle
    psi: EuclideanCircle
    b_prime: tuple[float, float]
    tau: float

    @property
    def alpha(self) -> float:
        """Apex angle at A; B sits on the positive x-axis by construction."""
        return abs(math.atan2(self.C.y, self.C.x))


@dataclass(frozen=True)
class OptimalTriangle:
    alpha_star: float
    solution: TriangleSolution


@dataclass(frozen=True)
class OptimalityCertificate:
    """Three equivalent witnesses that the apex angle is the maximizer."""

    acb_angle: float
    tangency_gap: float
    residual: float


def _check_sas_domain(b: float, c: float, alpha: float) -> None:
    if not (0.0 < b <= D_MAX and 0.0 < c <= D_MAX):
        raise DomainError(f"sides must lie in (0, {D_MAX}]")
    if not (ALPHA_EPS < alpha < math.pi - ALPHA_EPS):
        raise DomainError(
            f"apex angle {alpha} outside ({ALPHA_EPS}, pi - {ALPHA_EPS})"
        )


def _clamped_acos(x: float) -> float:
    return math.acos(min(1.0, max(-1.0, x)))


def _coshm1(x: float) -> float:
    """cosh(x) - 1 without cancellation: 2 sinh^2(x/2)."""
    s = math.sinh(0.5 * x)
    return 2.0 * s * s


def _acosh1p(m: float) -> float:
    """acosh(1 + m) for m >= 0, accurate near zero."""
    return math.log1p(m + math.sqrt(m * (m + 2.0)))


def angle_from_sides(opposite: float, s1: float, s2: float) -> float:
    """Angle opposite the first side, by the hyperbolic law of cosines.

    The numerator cosh(s1) cosh(s2) - cosh(opposite) is expanded in
    cosh - 1 terms so tiny triangles keep relative accuracy.
    """
    m0 = _coshm1(opposite)
    m1 = _coshm1(s1)
    m2 = _coshm1(s2)
    num = m1 + m2 - m0 + m1 * m2
    den = math.sinh(s1) * math.sinh(s2)
    return _clamped_acos(num / den)


def _sas_raw(b: float, c: float, alpha: float) -> tuple[float, float, float]:
    """Third side and base angles of the SAS triangle, without validation."""
    half_sin = math.sin(0.5 * alpha)
    cosh_a_m1 = _coshm1(b - c) + 2.0 * math.sinh(b) * math.sinh(c) * half_sin * half_sin
    a = _acosh1p(cosh_a_m1)
    beta = angle_from_sides(b, c, a)
    gamma = angle_from_sides(c, b, a)
    return a, beta, gamma


def solve_sas(b: float, c: float, alpha: float) -> TriangleSolution:
    """Solve the triangle with sides b = |AC|, c = |AB| and included angle alpha.

    cosh a = cosh b cosh c - sinh b sinh c cos(alpha), evaluated through the
    equivalent cancellation-free form
    cosh a - 1 = (cosh(b - c) - 1) + sinh b sinh c (1 - cos(alpha)); the
    remaining angles follow from the law of cosines, the area from the defect.
    """
    _check_sas_domain(b, c, alpha)
    a, beta, gamma = _sas_raw(b, c, alpha)
    if alpha + beta + gamma >= math.pi:
        raise DomainError(
            "triangle is numerically degenerate: angle defect below roundoff"
        )
    return TriangleSolution(
        a=a, b=b, c=c, alpha=alpha, beta=beta, gamma=gamma,
        area=math.pi - (alpha + beta + gamma),
    )


def area_defect(alpha: float, beta: float, gamma: float) -> float:
    """Area of a hyperbolic triangle: pi minus the angle sum."""
    for ang in (alpha, beta, gamma):
        if not (0.0 < ang < math.pi):
            raise DomainError(f"angle {ang} outside (0, pi)")
    s = alpha + beta + gamma
    if s >= math.pi:
        raise DomainError("angle sum >= pi: not a hyperbolic triangle")
    return math.pi - s


def embed_triangle(b: float, c: float, alpha: float) -> tuple[DiskPoint, DiskPoint, DiskPoint]:
    """Place the triangle with A at the center, B on the positive x-axis."""
    _check_sas_domain(b, c, alpha)
    return ORIGIN, point_from_polar(c, 0.0), point_from_polar(b, alpha)


def omega_circle(B: DiskPoint, C: DiskPoint) -> EuclideanCircle:
    """The Euclidean circle containing the geodesic BC (A at the center)."""
    g = geodesic_through(B, C)
    if g.is_diameter:
        raise DegenerateInputError(
            "B, C and the center are collinear: the triangle is degenerate"
        )
    assert g.circle is not None
    return g.circle


def b_prime_point(B: DiskPoint, omega: EuclideanCircle) -> tuple[float, float]:
    """Second intersection of the Euclidean line through the center and B with omega.

    Found from the line-circle quadratic; since omega is orthogonal to the
    unit circle the two intersection parameters multiply to 1, so the result
    coincides with the inversion of B in the unit circle (checked by tests,
    not used here).
    """
    nb = B.norm()
    if nb <= 1e-12:
        raise DegenerateInputError("B at the center: the line AB is undefined")
    if abs(abs(B.z - omega.center) - omega.radius) > 1e-9:
        raise DomainError("B does not lie on the given circle")
    u = B.z / nb
    m = (u.conjugate() * omega.center).real
    power = (math.hypot(omega.cx, omega.cy) - omega.radius) * (
        math.hypot(omega.cx, omega.cy) + omega.radius
    )
    disc = m * m - power
    if disc <= 0.0:
        raise DegenerateInputError("line AB does not meet the circle twice")
    t = m + math.sqrt(disc)  # the root beyond the unit circle
    w = t * u
    return (w.real, w.imag)


def _euclidean_angle(vertex: complex, p: complex, q: complex) -> float:
    v1 = p - vertex
    v2 = q - vertex
    cross = v1.real * v2.imag - v1.imag * v2.real
    dot = v1.real * v2.real + v1.imag * v2.imag
    return abs(math.atan2(cross, dot))


def tau_angle(fig: Figure1) -> float:
    """Euclidean angle at B' in the Euclidean triangle A-B'-C."""
    bp = complex(*fig.b_prime)
    return _euclidean_angle(bp, fig.A.z, fig.C.z)


def build_figure1(b: float, c: float, alpha: float) -> Figure1:
    """Assemble the whole construction for the triangle (b, c, alpha)."""
    A, B, C = embed_triangle(b, c, alpha)
    omega = omega_circle(B, C)
    psi = EuclideanCircle(0.0, 0.0, math.tanh(0.5 * b))
    bp = b_prime_point(B, omega)
    tau = _euclidean_angle(complex(*bp), A.z, C.z)
    return Figure1(A=A, B=B, C=C, omega=omega, psi=psi, b_prime=bp, tau=tau)


def optimal_alpha(b: float, c: float) -> OptimalTriangle:
    """Apex angle maximizing the area for fixed sides b and c.

    The maximizer is the root of g(alpha) = alpha - beta - gamma, located by a
    coarse scan for a sign change followed by bisection. Uniqueness is not
    proved analytically; the grid-search oracle cross-validates it.
    """
    if not (0.0 < b <= D_MAX and 0.0 < c <= D_MAX):
        raise DomainError(f"sides must lie in (0, {D_MAX}]")

    def g(alpha: float) -> float:
        _, beta, gamma = _sas_raw(b, c, alpha)
        return alpha - beta - gamma

    lo = ALPHA_EPS * (1.0 + 1e-9)
    hi = math.pi - ALPHA_EPS * (1.0 + 1e-9)
    xs = [lo + (hi - lo) * k / (_SCAN_POINTS - 1) for k in range(_SCAN_POINTS)]
    gs = [g(x) for x in xs]
    bracket = None
    for k in range(_SCAN_POINTS - 1):
        if gs[k] == 0.0:
            bracket = (xs[k], xs[k])
            break
        if gs[k] < 0.0 < gs[k + 1]:
            bracket = (xs[k], xs[k + 1])
            break
    if bracket is None:
        raise SolverError("no sign change of alpha - beta - gamma found")
    a_lo, a_hi = bracket
    for _ in range(_BISECT_MAX_ITER):
        if a_hi - a_lo <= 2.0 * _BISECT_HALF_WIDTH:
            break
        mid = 0.5 * (a_lo + a_hi)
        if g(mid) < 0.0:
            a_lo = mid
        else:
            a_hi = mid
    alpha_star = 0.5 * (a_lo + a_hi)
    if abs(g(alpha_star)) >= 1e-12:
        raise SolverError("bisection failed to drive alpha - beta - gamma to zero")
    return OptimalTriangle(alpha_star=alpha_star, solution=solve_sas(b, c, alpha_star))


def optimality_certificate(fig: Figure1) -> OptimalityCertificate:
    """Numerical witnesses of maximality for the configured apex angle.

    At the maximizer the Euclidean angle at C in A-C-B' is right, the line
    B'C is tangent to psi, and alpha + tau = pi/2; all three residuals
    vanish together.
    """
    bp = complex(*fig.b_prime)
    acb = _euclidean_angle(fig.C.z, fig.A.z, bp)
    chord = fig.C.z - bp
    # distance from the origin to the line through b_prime and C
    dist = abs(bp.real * chord.imag - bp.imag * chord.real) / abs(chord)
    return OptimalityCertificate(
        acb_angle=acb,
        tangency_gap=abs(dist - fig.psi.radius),
        residual=abs(fig.alpha + fig.tau - 0.5 * math.pi),
    )
