"""Convex hyperbolic polygons and perimeter-preserving area improvement.

The improver realizes the Steiner program for polygons: local moves that keep
the perimeter fixed and never decrease the area. Two moves are used in
round-robin sweeps:

* a hinge move that redistributes the two side lengths meeting at a vertex
  (the vertex slides on the locus p + q = const) to maximize the hinge
  triangle's area, and
* a diagonal move that repositions an edge, keeping all side lengths fixed,
  to maximize the area of the quadrilateral spanned by four consecutive
  vertices.

Fixed points of the first move are equilateral polygons, fixed points of the
second are cyclic ones; together the sweeps drive any convex polygon toward
the regular polygon of the same perimeter, which witnesses the isoperimetric
inequality numerically. The per-vertex maximal-area residual
|alpha - (beta + gamma)| of the hinge triangles is recorded in the trace as a
diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .disk import (
    D_MAX,
    DiskPoint,
    angle_at_vertex,
    direction_toward,
    geodesic_through,
    hyp_distance,
    point_from_polar,
    step_from,
)
from .errors import DomainError, NonConvexError, SolverError
from .triangle import TriangleSolution, angle_from_sides

# Minimum area gain for a move to be accepted; below this the improvement is
# indistinguishable from angle-measurement noise.
ACCEPT_TOL = 1e-14

# Best concyclicity certifiable by the coordinate ascent in doubles: vertex
# error scales like the square root of the residual area gap (~1e-14).
SPREAD_FLOOR = 1e-6

_SIDE_MARGIN = 1e-9


@dataclass(frozen=True)
class HyperbolicPolygon:
    """Strictly convex polygon, vertices in counterclockwise order."""

    vertices: tuple[DiskPoint, ...]
    side_lengths: tuple[float, ...]
    interior_angles: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @classmethod
    def from_vertices(cls, vertices) -> "HyperbolicPolygon":
        vs = tuple(vertices)
        n = len(vs)
        if n < 3:
            raise DomainError("a polygon needs at least three vertices")
        shoelace = sum(
            vs[i].x * vs[(i + 1) % n].y - vs[(i + 1) % n].x * vs[i].y
            for i in range(n)
        )
        if shoelace <= 0.0:
            raise NonConvexError("vertices must be in counterclockwise order")
        _check_convex(vs)
        sides = tuple(hyp_distance(vs[i], vs[(i + 1) % n]) for i in range(n))
        angles = tuple(
            angle_at_vertex(vs[i], vs[i - 1], vs[(i + 1) % n]) for i in range(n)
        )
        if sum(angles) >= (n - 2) * math.pi:
            raise NonConvexError("angle sum too large for a hyperbolic polygon")
        return cls(vs, sides, angles)


def _check_convex(vs: tuple[DiskPoint, ...]) -> None:
    """Every vertex must lie strictly on the inner side of every edge geodesic."""
    n = len(vs)
    for i in range(n):
        g = geodesic_through(vs[i], vs[(i + 1) % n])
        signs = []
        for j in range(n):
            if j == i or j == (i + 1) % n:
                continue
            p = vs[j]
            if g.is_diameter:
                d = g.direction
                s = d.real * p.y - d.imag * p.x
            else:
                c = g.circle
                s = (p.x - c.cx) ** 2 + (p.y - c.cy) ** 2 - c.radius**2
            if s == 0.0:
                raise NonConvexError("vertex lies on the geodesic of another edge")
            signs.append(s > 0.0)
        if len(set(signs)) > 1:
            raise NonConvexError("polygon is not convex")


def polygon_perimeter(poly: HyperbolicPolygon) -> float:
    return sum(poly.side_lengths)


def polygon_area(poly: HyperbolicPolygon) -> float:
    """Angle-defect area: (n - 2) pi minus the sum of interior angles."""
    return (poly.n - 2) * math.pi - sum(poly.interior_angles)


def local_triangle(poly: HyperbolicPolygon, i: int) -> TriangleSolution:
    """The hinge triangle V_{i-1} V_i V_{i+1}, measured with disk primitives."""
    n = poly.n
    prev, v, nxt = poly.vertices[i - 1], poly.vertices[i], poly.vertices[(i + 1) % n]
    chord = hyp_distance(prev, nxt)
    alpha = poly.interior_angles[i]
    beta = angle_at_vertex(prev, v, nxt)
    gamma = angle_at_vertex(nxt, v, prev)
    return TriangleSolution(
        a=chord,
        b=poly.side_lengths[i],
        c=poly.side_lengths[i - 1],
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        area=math.pi - (alpha + beta + gamma),
    )


def max_optimality_residual(poly: HyperbolicPolygon) -> float:
    """max_i |alpha_i - (beta_i + gamma_i)| over the hinge triangles."""
    worst = 0.0
    for i in range(poly.n):
        t = local_triangle(poly, i)
        worst = max(worst, abs(t.alpha - (t.beta + t.gamma)))
    return worst


def _defect_from_sides(a: float, b: float, c: float) -> float:
    """Area of the triangle with the three given sides."""
    return math.pi - (
        angle_from_sides(a, b, c)
        + angle_from_sides(b, c, a)
        + angle_from_sides(c, a, b)
    )


def _side_sign(base: DiskPoint, ref: DiskPoint, probe: DiskPoint) -> float:
    """+1 if probe is counterclockwise of the direction base->ref, else -1."""
    delta = math.remainder(
        direction_toward(base, probe) - direction_toward(base, ref), math.tau
    )
    return 1.0 if delta >= 0.0 else -1.0


@dataclass(frozen=True)
class MoveResult:
    polygon: HyperbolicPolygon
    delta_area: float
    accepted: bool


def _replace_vertices(
    poly: HyperbolicPolygon, updates: dict[int, DiskPoint]
) -> HyperbolicPolygon | None:
    vs = list(poly.vertices)
    for k, p in updates.items():
        vs[k] = p
    try:
        return HyperbolicPolygon.from_vertices(vs)
    except DomainError:
        return None


def _hinge_move(poly: HyperbolicPolygon, i: int) -> MoveResult:
    """Slide V_i along the locus p + q = const to maximize the hinge area."""
    n = poly.n
    f1, v, f2 = poly.vertices[i - 1], poly.vertices[i], poly.vertices[(i + 1) % n]
    p = poly.side_lengths[i - 1]
    q = poly.side_lengths[i]
    s = p + q
    chord = hyp_distance(f1, f2)
    lo = 0.5 * (s - chord)
    hi = 0.5 * (s + chord)
    margin = _SIDE_MARGIN * (hi - lo)
    old = _defect_from_sides(p, q, chord)
    res = optimize.minimize_scalar(
        lambda t: -_defect_from_sides(t, s - t, chord),
        bounds=(lo + margin, hi - margin),
        method="bounded",
        options={"xatol": 1e-13},
    )
    p_new = float(res.x)
    gain = -float(res.fun) - old
    if gain <= ACCEPT_TOL:
        return MoveResult(poly, 0.0, False)
    theta1 = angle_from_sides(s - p_new, p_new, chord)
    side = _side_sign(f1, f2, v)
    v_new = step_from(f1, direction_toward(f1, f2) + side * theta1, p_new)
    updated = _replace_vertices(poly, {i: v_new})
    if updated is None:
        return MoveResult(poly, 0.0, False)
    return MoveResult(updated, gain, True)


def _diagonal_move(poly: HyperbolicPolygon, i: int) -> MoveResult:
    """Reposition edge V_i V_{i+1} with all side lengths fixed.

    One degree of freedom remains: the angle phi between the diagonal
    V_{i-1} V_{i+2} and the side V_{i-1} V_i. The quadrilateral area is
    maximized over phi; at the maximum the four vertices are concyclic.
    """
    n = poly.n
    if n < 4:
        return MoveResult(poly, 0.0, False)
    ia, ib, ic, id_ = i - 1, i, (i + 1) % n, (i + 2) % n
    a, b_, c_, d = (poly.vertices[k] for k in (ia, ib, ic, id_))
    s1 = poly.side_lengths[ia]
    s2 = poly.side_lengths[ib]
    s3 = poly.side_lengths[ic]
    diag = hyp_distance(a, d)

    def quad_area(bd: float) -> float:
        return _defect_from_sides(s1, diag, bd) + _defect_from_sides(s2, s3, bd)

    def bd_of_phi(phi: float) -> float:
        x = math.cosh(s1) * math.cosh(diag) - math.sinh(s1) * math.sinh(diag) * math.cos(phi)
        return math.acosh(max(1.0, x))

    # Feasible range of the cross diagonal |BD|: both triangles must exist.
    bd_lo = max(abs(s2 - s3), abs(diag - s1))
    bd_hi = min(s2 + s3, diag + s1)
    if bd_hi - bd_lo <= 4.0 * _SIDE_MARGIN:
        return MoveResult(poly, 0.0, False)
    margin = _SIDE_MARGIN * (bd_hi - bd_lo)

    def phi_of_bd(bd: float) -> float:
        num = math.cosh(s1) * math.cosh(diag) - math.cosh(bd)
        den = math.sinh(s1) * math.sinh(diag)
        return math.acos(min(1.0, max(-1.0, num / den)))

    phi_lo = phi_of_bd(bd_lo + margin)
    phi_hi = phi_of_bd(bd_hi - margin)
    if phi_hi - phi_lo <= 1e-12:
        return MoveResult(poly, 0.0, False)
    old = quad_area(hyp_distance(b_, d))
    res = optimize.minimize_scalar(
        lambda phi: -quad_area(bd_of_phi(phi)),
        bounds=(phi_lo, phi_hi),
        method="bounded",
        options={"xatol": 1e-13},
    )
    gain = -float(res.fun) - old
    if gain <= ACCEPT_TOL:
        return MoveResult(poly, 0.0, False)
    phi_star = float(res.x)
    side_b = _side_sign(a, d, b_)
    b_new = step_from(a, direction_toward(a, d) + side_b * phi_star, s1)
    bd_new = bd_of_phi(phi_star)
    theta_b = angle_from_sides(s3, s2, bd_new)
    side_c = _side_sign(b_, d, c_)
    c_new = step_from(b_new, direction_toward(b_new, d) + side_c * theta_b, s2)
    updated = _replace_vertices(poly, {ib: b_new, ic: c_new})
    if updated is None:
        return MoveResult(poly, 0.0, False)
    return MoveResult(updated, gain, True)


def steiner_move(poly: HyperbolicPolygon, i: int) -> MoveResult:
    """Best perimeter-preserving local improvement at vertex i.

    Tries the hinge move at V_i and the diagonal move on edge V_i V_{i+1} and
    applies whichever gains more area; returns the polygon unchanged (with
    delta_area 0) when neither improves it.
    """
    hinge = _hinge_move(poly, i)
    diag = _diagonal_move(poly, i)
    return hinge if hinge.delta_area >= diag.delta_area else diag


@dataclass(frozen=True)
class TraceStep:
    iteration: int
    vertex: int
    area_before: float
    area_after: float
    residual: float
    perimeter: float


@dataclass(frozen=True)
class SteinerResult:
    polygon: HyperbolicPolygon
    trace: tuple[TraceStep, ...]
    converged: bool
    sweeps: int
    spread: float


def steiner_optimize(
    poly: HyperbolicPolygon, tol: float = 1e-8, max_sweeps: int = 500
) -> SteinerResult:
    """Round-robin sweeps of steiner_move until no move improves the area.

    The iteration stops once a full sweep accepts no move; ``converged``
    additionally requires the final vertices to be concyclic, with
    circumradius spread below max(10 * tol, SPREAD_FLOOR). Along the trace
    the perimeter is conserved and the area never decreases.
    """
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    trace: list[TraceStep] = []
    iteration = 0
    stagnated = False
    sweeps = 0
    for sweep in range(max_sweeps):
        sweeps = sweep + 1
        accepted = 0
        for i in range(poly.n):
            before = polygon_area(poly)
            result = steiner_move(poly, i)
            if result.accepted:
                poly = result.polygon
                accepted += 1
                trace.append(
                    TraceStep(
                        iteration=iteration,
                        vertex=i,
                        area_before=before,
                        area_after=polygon_area(poly),
                        residual=max_optimality_residual(poly),
                        perimeter=polygon_perimeter(poly),
                    )
                )
            iteration += 1
        if accepted == 0:
            stagnated = True
            break
    fit = circumcircle_fit(poly)
    return SteinerResult(
        polygon=poly,
        trace=tuple(trace),
        converged=stagnated and fit.spread < max(10.0 * tol, SPREAD_FLOOR),
        sweeps=sweeps,
        spread=fit.spread,
    )


@dataclass(frozen=True)
class CircumcircleFit:
    center: DiskPoint
    radius: float
    spread: float


def circumcircle_fit(poly: HyperbolicPolygon) -> CircumcircleFit:
    """Best-fit hyperbolic circumcircle, minimizing the vertex-radius spread.

    Coarse grid around the Euclidean vertex centroid, then Nelder-Mead.
    """

    def spread_at(x: float, y: float) -> float:
        if x * x + y * y >= 1.0:
            return math.inf
        c = DiskPoint(x, y)
        radii = [hyp_distance(c, v) for v in poly.vertices]
        return max(radii) - min(radii)

    cx = sum(v.x for v in poly.vertices) / poly.n
    cy = sum(v.y for v in poly.vertices) / poly.n
    best = (cx, cy)
    best_val = spread_at(cx, cy)
    half = 0.2 * (1.0 - math.hypot(cx, cy))
    for gx in np.linspace(cx - half, cx + half, 9):
        for gy in np.linspace(cy - half, cy + half, 9):
            val = spread_at(gx, gy)
            if val < best_val:
                best, best_val = (gx, gy), val
    res = optimize.minimize(
        lambda u: spread_at(u[0], u[1]),
        x0=np.array(best),
        method="Nelder-Mead",
        options={"xatol": 1e-14, "fatol": 1e-15, "maxiter": 20000, "maxfev": 20000},
    )
    center = DiskPoint(float(res.x[0]), float(res.x[1]))
    radii = [hyp_distance(center, v) for v in poly.vertices]
    return CircumcircleFit(
        center=center,
        radius=0.5 * (max(radii) + min(radii)),
        spread=max(radii) - min(radii),
    )


@dataclass(frozen=True)
class RegularPolygonSpec:
    n: int
    circumradius: float

    def __post_init__(self) -> None:
        if self.n < 3:
            raise DomainError("a regular polygon needs n >= 3")
        if not (0.0 < self.circumradius <= D_MAX / 2):
            raise DomainError(f"circumradius outside (0, {D_MAX / 2}]")


@dataclass(frozen=True)
class RegularPolygonStats:
    side: float
    interior_angle: float
    perimeter: float
    area: float


def regular_polygon(spec: RegularPolygonSpec) -> RegularPolygonStats:
    """Side, interior angle, perimeter and area of the regular n-gon.

    All derived from the central isoceles triangle with legs R and apex angle
    2 pi / n; the polygon area is n times that triangle's defect.
    """
    n, R = spec.n, spec.circumradius
    apex = 2.0 * math.pi / n
    cosh_side = math.cosh(R) ** 2 - math.sinh(R) ** 2 * math.cos(apex)
    side = math.acosh(cosh_side)
    base_angle = angle_from_sides(R, R, side)
    interior = 2.0 * base_angle
    return RegularPolygonStats(
        side=side,
        interior_angle=interior,
        perimeter=n * side,
        area=n * (math.pi - apex - interior),
    )


def regular_polygon_vertices(spec: RegularPolygonSpec) -> HyperbolicPolygon:
    """Explicit embedding of the regular polygon, centered at the origin."""
    pts = [
        point_from_polar(spec.circumradius, 2.0 * math.pi * k / spec.n)
        for k in range(spec.n)
    ]
    return HyperbolicPolygon.from_vertices(pts)


def regular_polygon_for_perimeter(n: int, perimeter: float) -> RegularPolygonSpec:
    """Circumradius of the regular n-gon with the given perimeter (root find)."""
    if perimeter <= 0.0:
        raise DomainError("perimeter must be positive")
    target = perimeter / n

    def f(R: float) -> float:
        apex = 2.0 * math.pi / n
        return math.acosh(
            math.cosh(R) ** 2 - math.sinh(R) ** 2 * math.cos(apex)
        ) - target

    lo, hi = 1e-12, 1.0
    while f(hi) < 0.0:
        hi *= 2.0
        if hi > D_MAX / 2:
            raise DomainError("perimeter outside the representable range")
    R = optimize.brentq(f, lo, hi, xtol=1e-15, rtol=8.9e-16)
    return RegularPolygonSpec(n=n, circumradius=float(R))


def circle_geometry(r: float) -> tuple[float, float]:
    """(circumference, area) of the hyperbolic circle of radius r."""
    if not (0.0 < r <= D_MAX / 2):
        raise DomainError(f"radius outside (0, {D_MAX / 2}]")
    return 2.0 * math.pi * math.sinh(r), 2.0 * math.pi * (math.cosh(r) - 1.0)


def circle_radius_for_circumference(L: float) -> float:
    if L <= 0.0:
        raise DomainError("circumference must be positive")
    return math.asinh(L / (2.0 * math.pi))


def isoperimetric_deficit(L: float, A: float) -> float:
    """L^2 - 4 pi A - A^2; nonnegative for admissible figures, zero for circles."""
    if L <= 0.0 or A <= 0.0:
        raise DomainError("perimeter and area must be positive")
    return L * L - 4.0 * math.pi * A - A * A


def random_convex_polygon(n: int, seed: int, max_attempts: int = 1000) -> HyperbolicPolygon:
    """Seeded random convex polygon: jittered vertices near a hyperbolic circle.

    Randomness comes from numpy's default PCG64 generator initialized with the
    given 64-bit seed, so results are reproducible across platforms.
    """
    if n < 3:
        raise DomainError("need n >= 3")
    rng = np.random.default_rng(seed)
    for _ in range(max_attempts):
        radius = rng.uniform(0.5, 1.5)
        thetas = np.sort(rng.uniform(0.0, 2.0 * math.pi, n))
        gaps = np.diff(np.concatenate([thetas, [thetas[0] + 2.0 * math.pi]]))
        if gaps.min() < 0.5 * math.pi / n:
            continue
        radii = radius * (1.0 + rng.uniform(-0.15, 0.15, n))
        try:
            return HyperbolicPolygon.from_vertices(
                [point_from_polar(float(r), float(t)) for r, t in zip(radii, thetas)]
            )
        except DomainError:
            continue
    raise SolverError(f"no convex polygon found after {max_attempts} attempts")
