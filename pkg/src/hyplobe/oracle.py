"""Independent brute-force references used by tests and the verify command.

Nothing here is called from production code paths: these routines re-derive
quantities by grid search, polyline integration, or Euclidean small-scale
limits so that the primary implementations can be judged against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .disk import DiskPoint, geodesic_through, hyp_distance
from .errors import DomainError
from .triangle import ALPHA_EPS


@dataclass(frozen=True)
class GridSearchResult:
    alpha_hat: float
    area_hat: float
    grid_step: float
    samples: int


def _area_grid(b: float, c: float, alphas: np.ndarray) -> np.ndarray:
    """Vectorized defect area of the SAS triangle over a grid of apex angles.

    Written directly against the law of cosines, independent of the scalar
    solver under test.
    """
    # cosh a - 1 in the cancellation-free form, then cosh a cosh x - cosh y
    # expanded in (cosh - 1) terms; keeps tiny triangles accurate.
    mb = 2.0 * math.sinh(0.5 * b) ** 2
    mc = 2.0 * math.sinh(0.5 * c) ** 2
    ma = (
        2.0 * math.sinh(0.5 * (b - c)) ** 2
        + 2.0 * math.sinh(b) * math.sinh(c) * np.sin(0.5 * alphas) ** 2
    )
    a = np.log1p(ma + np.sqrt(ma * (ma + 2.0)))
    sinh_a = np.sinh(a)
    cos_beta = (ma + mc - mb + ma * mc) / (sinh_a * math.sinh(c))
    cos_gamma = (ma + mb - mc + ma * mb) / (sinh_a * math.sinh(b))
    beta = np.arccos(np.clip(cos_beta, -1.0, 1.0))
    gamma = np.arccos(np.clip(cos_gamma, -1.0, 1.0))
    return math.pi - (alphas + beta + gamma)


def grid_search_max_area(b: float, c: float, samples: int) -> GridSearchResult:
    """Argmax of the triangle area over an even apex-angle grid."""
    if samples < 1000:
        raise DomainError("grid search needs at least 1000 samples")
    lo = ALPHA_EPS * (1.0 + 1e-9)
    hi = math.pi - ALPHA_EPS * (1.0 + 1e-9)
    alphas = np.linspace(lo, hi, samples)
    areas = _area_grid(b, c, alphas)
    k = int(np.argmax(areas))  # ties resolve to the smaller alpha
    return GridSearchResult(
        alpha_hat=float(alphas[k]),
        area_hat=float(areas[k]),
        grid_step=(hi - lo) / samples,
        samples=samples,
    )


def count_local_maxima(b: float, c: float, samples: int) -> int:
    """Strict local maxima of the area on the grid (unimodality witness)."""
    lo = ALPHA_EPS * (1.0 + 1e-9)
    hi = math.pi - ALPHA_EPS * (1.0 + 1e-9)
    areas = _area_grid(b, c, np.linspace(lo, hi, samples))
    interior = areas[1:-1]
    return int(np.sum((interior > areas[:-2]) & (interior > areas[2:])))


def geodesic_length_by_sampling(p: DiskPoint, q: DiskPoint, segments: int) -> float:
    """Length of the geodesic arc p-q as a sum of short chordal distances.

    Subdivides the arc (or diameter segment) into ``segments`` pieces and sums
    hyp_distance over consecutive samples; converges to the distance from
    below.
    """
    if segments < 10_000:
        raise DomainError("use at least 10^4 segments")
    if abs(p.z - q.z) < 1e-15:
        return 0.0
    g = geodesic_through(p, q)
    if g.is_diameter:
        pts = [
            DiskPoint(
                p.x + (q.x - p.x) * k / segments,
                p.y + (q.y - p.y) * k / segments,
            )
            for k in range(segments + 1)
        ]
    else:
        c = g.circle
        a0 = math.atan2(p.y - c.cy, p.x - c.cx)
        a1 = math.atan2(q.y - c.cy, q.x - c.cx)
        sweep = math.remainder(a1 - a0, math.tau)  # the short way around
        pts = [
            DiskPoint(
                c.cx + c.radius * math.cos(a0 + sweep * k / segments),
                c.cy + c.radius * math.sin(a0 + sweep * k / segments),
            )
            for k in range(segments + 1)
        ]
    return sum(hyp_distance(pts[k], pts[k + 1]) for k in range(segments))


@dataclass(frozen=True)
class EuclideanTriangle:
    a: float
    beta: float
    gamma: float
    area: float


def euclidean_limit_triangle(b: float, c: float, alpha: float) -> EuclideanTriangle:
    """Flat-plane SAS solution for comparison at small scales."""
    if b > 0.01 or c > 0.01:
        raise DomainError("Euclidean-limit reference is only valid for sides <= 0.01")
    a = math.sqrt(b * b + c * c - 2.0 * b * c * math.cos(alpha))
    beta = math.acos(min(1.0, max(-1.0, (a * a + c * c - b * b) / (2.0 * a * c))))
    gamma = math.pi - alpha - beta
    return EuclideanTriangle(a=a, beta=beta, gamma=gamma, area=0.5 * b * c * math.sin(alpha))
