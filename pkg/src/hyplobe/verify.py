"""Self-check suite: every library property re-verified against the oracles.

Each check draws its own inputs from a seeded generator, compares the primary
implementation against an independent reference, and reports pass/fail with a
measured worst case. The `fault` argument deliberately corrupts one quantity
so the harness itself can be shown to catch regressions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import disk, oracle, polygon, triangle

FAULT_TAU_SIGN = "tau-sign"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_sides_angles(rng: np.random.Generator, count: int):
    bs = rng.uniform(0.1, 3.0, count)
    cs = rng.uniform(0.1, 3.0, count)
    alphas = rng.uniform(0.05, math.pi - 0.05, count)
    return bs, cs, alphas


def check_area_equivalence(rng, samples: int, fault: str | None = None) -> CheckResult:
    """Defect area equals twice the Euclidean tau angle of the construction."""
    worst = 0.0
    for b, c, alpha in zip(*_random_sides_angles(rng, samples)):
        sol = triangle.solve_sas(b, c, alpha)
        fig = triangle.build_figure1(b, c, alpha)
        tau = -fig.tau if fault == FAULT_TAU_SIGN else fig.tau
        worst = max(worst, abs(sol.area - 2.0 * tau))
    return CheckResult("area-equivalence", worst < 1e-9, f"max |defect - 2 tau| = {worst:.3e}")


def check_theorem1_grid(rng, samples: int) -> CheckResult:
    """Root of alpha - beta - gamma coincides with the grid-search argmax."""
    pairs = max(10, samples // 10)
    worst_gap = 0.0
    worst_root = 0.0
    for _ in range(pairs):
        b = rng.uniform(0.1, 3.0)
        c = rng.uniform(0.1, 3.0)
        opt = triangle.optimal_alpha(b, c)
        grid = oracle.grid_search_max_area(b, c, 100_000)
        worst_gap = max(worst_gap, abs(opt.alpha_star - grid.alpha_hat) / grid.grid_step)
        sol = opt.solution
        worst_root = max(worst_root, abs(sol.alpha - sol.beta - sol.gamma))
    ok = worst_gap <= 2.0 and worst_root < 1e-12
    return CheckResult(
        "theorem1-grid-cross-check",
        ok,
        f"max gap = {worst_gap:.2f} grid steps over {pairs} pairs, "
        f"max |alpha - beta - gamma| = {worst_root:.3e}",
    )


def check_certificates(rng, samples: int) -> CheckResult:
    """All three optimality witnesses vanish at the optimum and not at alpha/2."""
    pairs = max(10, samples // 10)
    worst = 0.0
    min_neg = math.inf
    for _ in range(pairs):
        b = rng.uniform(0.1, 3.0)
        c = rng.uniform(0.1, 3.0)
        a_star = triangle.optimal_alpha(b, c).alpha_star
        cert = triangle.optimality_certificate(triangle.build_figure1(b, c, a_star))
        worst = max(
            worst, abs(cert.acb_angle - math.pi / 2), cert.tangency_gap, cert.residual
        )
        off = triangle.optimality_certificate(
            triangle.build_figure1(b, c, 0.5 * a_star)
        )
        min_neg = min(min_neg, abs(off.acb_angle - math.pi / 2))
    ok = worst < 1e-9 and min_neg > 1e-3
    return CheckResult(
        "optimality-certificates",
        ok,
        f"max residual at optimum = {worst:.3e}, min off-optimum gap = {min_neg:.3e}",
    )


def check_euclidean_limit(rng, samples: int) -> CheckResult:
    opt = triangle.optimal_alpha(1e-3, 1e-3)
    gap_alpha = abs(opt.alpha_star - math.pi / 2)
    worst_rel = 0.0
    for _ in range(max(10, samples // 10)):
        b = rng.uniform(1e-4, 1.5e-3)
        c = rng.uniform(1e-4, 1.5e-3)
        alpha = rng.uniform(0.1, math.pi - 0.1)
        hyp = triangle.solve_sas(b, c, alpha)
        euc = oracle.euclidean_limit_triangle(b, c, alpha)
        worst_rel = max(worst_rel, abs(hyp.a - euc.a) / euc.a)
    # the true hyperbolic/Euclidean gap scales as sides^2 (~1.3e-7 relative
    # at sides 1e-3), so 1e-6 is the meaningful agreement level here
    ok = gap_alpha < 1e-3 and worst_rel < 1e-6
    return CheckResult(
        "euclidean-limit",
        ok,
        f"|alpha* - pi/2| = {gap_alpha:.3e} at sides 1e-3, "
        f"max relative side gap = {worst_rel:.3e}",
    )


def check_inversion_identity(rng, samples: int) -> CheckResult:
    """|B| |B'| = 1: the power of the center with respect to omega."""
    worst = 0.0
    for b, c, alpha in zip(*_random_sides_angles(rng, samples)):
        fig = triangle.build_figure1(b, c, alpha)
        worst = max(worst, abs(fig.B.norm() * math.hypot(*fig.b_prime) - 1.0))
    return CheckResult("inversion-identity", worst < 1e-10, f"max | |B||B'| - 1 | = {worst:.3e}")


def check_metric_oracle(rng, samples: int) -> CheckResult:
    pairs = max(10, samples // 40)
    worst = 0.0
    for _ in range(pairs):
        pts = []
        while len(pts) < 2:
            x, y = rng.uniform(-0.9, 0.9, 2)
            if math.hypot(x, y) <= 0.9:
                pts.append(disk.DiskPoint(float(x), float(y)))
        direct = disk.hyp_distance(pts[0], pts[1])
        sampled = oracle.geodesic_length_by_sampling(pts[0], pts[1], 10_000)
        worst = max(worst, abs(direct - sampled))
    return CheckResult(
        "metric-oracle", worst < 1e-6, f"max |closed form - polyline| = {worst:.3e}"
    )


def check_isometry_invariance(rng, samples: int) -> CheckResult:
    count = max(10, samples // 2)
    worst = 0.0
    for _ in range(count):
        b = rng.uniform(0.1, 3.0)
        c = rng.uniform(0.1, 3.0)
        alpha = rng.uniform(0.05, math.pi - 0.05)
        A, B, C = triangle.embed_triangle(b, c, alpha)
        r = 0.9 * math.sqrt(rng.uniform(0.0, 1.0))
        t = rng.uniform(0.0, 2.0 * math.pi)
        m = disk.DiskIsometry(
            disk.DiskPoint(r * math.cos(t), r * math.sin(t)), rng.uniform(0.0, 2.0 * math.pi)
        )
        A2, B2, C2 = m(A), m(B), m(C)
        worst = max(
            worst,
            abs(disk.hyp_distance(A, B) - disk.hyp_distance(A2, B2)),
            abs(disk.hyp_distance(A, C) - disk.hyp_distance(A2, C2)),
            abs(disk.hyp_distance(B, C) - disk.hyp_distance(B2, C2)),
            abs(disk.angle_at_vertex(A, B, C) - disk.angle_at_vertex(A2, B2, C2)),
            abs(disk.angle_at_vertex(B, A, C) - disk.angle_at_vertex(B2, A2, C2)),
            abs(disk.angle_at_vertex(C, A, B) - disk.angle_at_vertex(C2, A2, B2)),
        )
    return CheckResult(
        "isometry-invariance", worst < 1e-10, f"max measurement drift = {worst:.3e}"
    )


def check_deficit_nonnegative(rng, samples: int) -> CheckResult:
    count = max(5, samples // 40)
    worst = math.inf
    for k in range(count):
        n = int(rng.integers(4, 10))
        poly = polygon.random_convex_polygon(n, int(rng.integers(0, 2**32)))
        d = polygon.isoperimetric_deficit(
            polygon.polygon_perimeter(poly), polygon.polygon_area(poly)
        )
        worst = min(worst, d)
    return CheckResult(
        "deficit-nonnegativity", worst > -1e-9, f"min polygon deficit = {worst:.3e}"
    )


def check_polar_round_trip(rng, samples: int) -> CheckResult:
    worst = 0.0
    for _ in range(samples):
        d = rng.uniform(0.0, 9.0)
        theta = rng.uniform(0.0, 2.0 * math.pi)
        p = disk.point_from_polar(d, theta)
        worst = max(worst, abs(disk.hyp_distance(disk.ORIGIN, p) - d))
    return CheckResult(
        "polar-round-trip", worst < 1e-12, f"max |d_back - d| = {worst:.3e}"
    )


def run_all(samples: int = 200, seed: int = 0, fault: str | None = None) -> list[CheckResult]:
    """Run every check with independent seeded streams; deterministic per seed."""
    results = []
    checks = [
        ("area-equivalence", lambda r: check_area_equivalence(r, samples, fault)),
        ("theorem1-grid-cross-check", lambda r: check_theorem1_grid(r, samples)),
        ("optimality-certificates", lambda r: check_certificates(r, samples)),
        ("euclidean-limit", lambda r: check_euclidean_limit(r, samples)),
        ("inversion-identity", lambda r: check_inversion_identity(r, samples)),
        ("metric-oracle", lambda r: check_metric_oracle(r, samples)),
        ("isometry-invariance", lambda r: check_isometry_invariance(r, samples)),
        ("deficit-nonnegativity", lambda r: check_deficit_nonnegative(r, samples)),
        ("polar-round-trip", lambda r: check_polar_round_trip(r, samples)),
    ]
    for k, (name, fn) in enumerate(checks):
        rng = np.random.default_rng([seed, k])
        results.append(fn(rng))
    return results
