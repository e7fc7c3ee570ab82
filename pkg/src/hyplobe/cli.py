"""Command-line front end.

Subcommands: triangle, optimize, steiner, isoperimetric, verify. JSON is the
default output format (floats with 17 significant digits, so every double
round-trips exactly); traces and sweeps are CSV with '.' decimals and '\n'
newlines so repeated runs diff byte-for-byte.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 non-convergence.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import __version__, polygon, svgfig, triangle, verify
from .errors import DomainError, HyplobeError
from .oracle import grid_search_max_area


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise HyplobeError(f"non-finite value {x} in output (internal bug)")
    return format(x, ".17g")


def _to_json(value, indent: int = 0) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = ",\n".join(
            f'{inner}"{k}": {_to_json(v, indent + 1)}' for k, v in value.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = ",\n".join(f"{inner}{_to_json(v, indent + 1)}" for v in value)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt_float(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if value is None:
        return "null"
    raise TypeError(f"cannot serialize {type(value)}")


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _solution_dict(sol: triangle.TriangleSolution) -> dict:
    return {
        "a": sol.a, "b": sol.b, "c": sol.c,
        "alpha": sol.alpha, "beta": sol.beta, "gamma": sol.gamma,
        "area": sol.area,
    }


def _circle_dict(c) -> dict:
    return {"cx": c.cx, "cy": c.cy, "radius": c.radius}


def cmd_triangle(args) -> int:
    sol = triangle.solve_sas(args.b, args.c, args.alpha)
    fig = triangle.build_figure1(args.b, args.c, args.alpha)
    if args.format == "svg":
        _write(svgfig.figure1_svg(fig), args.output)
        return 0
    report = {
        "inputs": {"b": args.b, "c": args.c, "alpha": args.alpha},
        "solution": _solution_dict(sol),
        "figure": {
            "A": [fig.A.x, fig.A.y],
            "B": [fig.B.x, fig.B.y],
            "C": [fig.C.x, fig.C.y],
            "omega": _circle_dict(fig.omega),
            "psi": _circle_dict(fig.psi),
            "b_prime": [fig.b_prime[0], fig.b_prime[1]],
            "tau": fig.tau,
        },
        "area_defect": sol.area,
        "area_two_tau": 2.0 * fig.tau,
        "defect_minus_two_tau": sol.area - 2.0 * fig.tau,
    }
    _write(_to_json(report) + "\n", args.output)
    return 0


def cmd_optimize(args) -> int:
    opt = triangle.optimal_alpha(args.b, args.c)
    cert = triangle.optimality_certificate(
        triangle.build_figure1(args.b, args.c, opt.alpha_star)
    )
    grid = grid_search_max_area(args.b, args.c, 100_000)
    report = {
        "inputs": {"b": args.b, "c": args.c},
        "alpha_star": opt.alpha_star,
        "solution": _solution_dict(opt.solution),
        "certificates": {
            "right_angle_residual": abs(cert.acb_angle - math.pi / 2),
            "tangency_gap": cert.tangency_gap,
            "alpha_plus_tau_residual": cert.residual,
        },
        "grid_check": {
            "alpha_hat": grid.alpha_hat,
            "grid_step": grid.grid_step,
            "gap": abs(grid.alpha_hat - opt.alpha_star),
        },
    }
    _write(_to_json(report) + "\n", args.output)
    return 0


def _trace_csv(trace) -> str:
    lines = ["iter,vertex,area,perimeter,residual"]
    for step in trace:
        lines.append(
            f"{step.iteration},{step.vertex},{_fmt_float(step.area_after)},"
            f"{_fmt_float(step.perimeter)},{_fmt_float(step.residual)}"
        )
    return "\n".join(lines) + "\n"


def cmd_steiner(args) -> int:
    poly = polygon.random_convex_polygon(args.n, args.seed)
    area0 = polygon.polygon_area(poly)
    perim0 = polygon.polygon_perimeter(poly)
    result = polygon.steiner_optimize(poly, tol=args.tol, max_sweeps=args.max_sweeps)
    area1 = polygon.polygon_area(result.polygon)
    perim1 = polygon.polygon_perimeter(result.polygon)
    _write(_trace_csv(result.trace), args.trace_csv)
    report = {
        "n": args.n,
        "seed": args.seed,
        "tol": args.tol,
        "max_sweeps": args.max_sweeps,
        "sweeps": result.sweeps,
        "converged": result.converged,
        "moves_accepted": len(result.trace),
        "initial": {
            "area": area0,
            "perimeter": perim0,
            "deficit": polygon.isoperimetric_deficit(perim0, area0),
        },
        "final": {
            "area": area1,
            "perimeter": perim1,
            "deficit": polygon.isoperimetric_deficit(perim1, area1),
        },
        "concyclicity_spread": result.spread,
        "vertices": [[v.x, v.y] for v in result.polygon.vertices],
    }
    _write(_to_json(report) + "\n", args.output)
    return 0 if result.converged else 3


def cmd_isoperimetric(args) -> int:
    if args.n_min < 3 or args.n_max < args.n_min:
        raise DomainError("need 3 <= n-min <= n-max")
    lines = ["n,area,deficit"]
    for n in range(args.n_min, args.n_max + 1):
        spec = polygon.regular_polygon_for_perimeter(n, args.perimeter)
        stats = polygon.regular_polygon(spec)
        deficit = polygon.isoperimetric_deficit(stats.perimeter, stats.area)
        lines.append(f"{n},{_fmt_float(stats.area)},{_fmt_float(deficit)}")
    r = polygon.circle_radius_for_circumference(args.perimeter)
    if r > polygon.D_MAX / 2:
        raise DomainError("perimeter outside the representable range")
    circumference, area = polygon.circle_geometry(r)
    deficit = polygon.isoperimetric_deficit(circumference, area)
    lines.append(f"circle,{_fmt_float(area)},{_fmt_float(deficit)}")
    _write("\n".join(lines) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    results = verify.run_all(samples=args.samples, seed=args.seed, fault=args.inject_fault)
    print(f"verify: samples={args.samples} seed={args.seed}")
    failed = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name}: {r.detail}")
        if not r.passed:
            failed.append(r.name)
    if failed:
        print(f"FAILED properties: {', '.join(failed)}", file=sys.stderr)
        return 1
    print("all properties passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyplobe",
        description="Maximal-area hyperbolic triangles and Steiner-style "
        "isoperimetric experiments in the Poincare disk.",
    )
    parser.add_argument("--version", action="version", version=f"hyplobe {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="solve a SAS triangle and its disk construction")
    p.add_argument("--b", type=float, required=True, help="side |AC|")
    p.add_argument("--c", type=float, required=True, help="side |AB|")
    p.add_argument("--alpha", type=float, required=True, help="apex angle at A (radians)")
    p.add_argument("--format", choices=["json", "svg"], default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("optimize", help="maximal-area apex angle for two fixed sides")
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("steiner", help="perimeter-preserving polygon improvement run")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--seed", type=int, required=True, help="64-bit seed (PCG64)")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-sweeps", type=int, default=500)
    p.add_argument("--trace-csv", default="steiner_trace.csv",
                   help="path for the per-move CSV trace")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_steiner)

    p = sub.add_parser("isoperimetric", help="regular-polygon deficit sweep at fixed perimeter")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=96)
    p.add_argument("--perimeter", type=float, required=True)
    p.add_argument("--format", choices=["csv"], default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_isoperimetric)

    p = sub.add_parser("verify", help="run the oracle/property suite")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", choices=[verify.FAULT_TAU_SIGN], default=None,
                   help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HyplobeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
