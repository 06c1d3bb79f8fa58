"""Command-line front end.

Subcommands:

    com              center of mass of a system file (JSON report)
    equilibrium      balanced two-body pair: partner radius, ordering
                     verdict, lever residual, rotation-sweep trace
    limit-sweep      flat-limit error of a system over a list of radii
    karcher-compare  averaging-formula center versus the Riemannian
                     barycenter, with their separation
    distance         geodesic distance between two disk points
    project          hyperboloid point to disk coordinates
    unproject        disk point to hyperboloid coordinates

Exit codes: 0 success, 1 invalid input, 2 numerical failure.  Output is
deterministic: identical inputs give byte-identical reports.
"""

from __future__ import annotations

import argparse
import math
import sys

from .barycenter import (
    LINE,
    com_disk,
    com_line,
    euclidean_limit_error,
    lever_residual,
    to_disk_system,
    to_hyperboloid_system,
)
from .equilibria import (
    EQUALITY_RTOL,
    SWEEP_ANGLES,
    classify_balance,
    diametric_system,
    rotation_sweep,
)
from .errors import NumericalError, ValidationError
from .files import (
    csv_text,
    file_digest,
    format_float,
    load_system,
    report_text,
)
from .geometry import (
    BOUNDARY_MARGIN,
    TOL_CONSTRUCT,
    arclength_from_pole,
    disk_distance,
    hpoint,
    project,
    unproject,
    unproject_line,
)
from .karcher import KarcherSettings, karcher_mean

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2

CSV_HEADER_SWEEP = "theta,re_wc,im_wc,defect"
CSV_HEADER_LIMIT = "R,error"


class _Parser(argparse.ArgumentParser):
    # Usage problems are input validation; keep them on exit code 1.
    def error(self, message):
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as handle:
            handle.write(text)


def _pair(value: complex) -> list[float]:
    return [value.real, value.imag]


def _cmd_com(args) -> int:
    system = load_system(args.input)
    if system.model == LINE:
        center = com_line(system)
        lift = unproject_line(center, system.radius)
        disk = to_disk_system(system)
        com = com_disk(disk)
        results = {
            "center_interval": center,
            "center_hyperbola": [lift.x, lift.y],
            "log_ratio_mean": _pair(com.log_ratio_mean),
            "total_mass": com.total_mass,
        }
    else:
        disk = to_disk_system(system)
        com = com_disk(disk)
        lift = unproject(com.center, system.radius)
        results = {
            "center_disk": _pair(com.center),
            "center_hyperboloid": [lift.x, lift.y, lift.z],
            "log_ratio_mean": _pair(com.log_ratio_mean),
            "total_mass": com.total_mass,
        }
    report = {
        "command": "com",
        "input_sha256": file_digest(args.input),
        "model": system.model,
        "radius": system.radius,
        "results": results,
        "tolerances": {
            "boundary_margin": BOUNDARY_MARGIN,
            "on_surface_construct": TOL_CONSTRUCT,
        },
    }
    _emit(report_text(report), args.output)
    return EXIT_OK


def _cmd_equilibrium(args) -> int:
    radius = args.radius
    verdict = classify_balance(args.m1, args.m2, args.alpha, radius)
    system = diametric_system(args.m1, args.m2, args.alpha, radius)
    angles = [2.0 * math.pi * k / args.angles for k in range(args.angles)]
    sweep = rotation_sweep(system, angles)
    rows = [
        (s.angle, s.com.center.real, s.com.center.imag, s.defect)
        for s in sweep.samples
    ]
    if args.format == "csv":
        _emit(csv_text(CSV_HEADER_SWEEP, rows), args.output)
        return EXIT_OK
    s1 = args.m1 * arclength_from_pole(args.alpha, radius)
    s2 = args.m2 * arclength_from_pole(verdict.partner_radius, radius)
    residual = s1 - s2
    report = {
        "command": "equilibrium",
        "inputs": {
            "alpha": args.alpha,
            "angles": args.angles,
            "m1": args.m1,
            "m2": args.m2,
            "radius": radius,
        },
        "results": {
            "center_at_start": {
                "tolerance": 1e-12 * radius,
                "value": abs(sweep.base.center),
            },
            "lever_residual": {
                "tolerance": EQUALITY_RTOL * max(abs(s1), abs(s2)),
                "value": residual,
            },
            "matches_mass_order": verdict.matches_mass_order,
            "max_defect": sweep.max_defect,
            "partner_radius": verdict.partner_radius,
            "relation": verdict.relation,
            "trace": [list(row) for row in rows],
        },
        "tolerances": {"radius_equality_rtol": EQUALITY_RTOL},
    }
    _emit(report_text(report), args.output)
    return EXIT_OK


def _parse_sweep(text: str) -> list[float]:
    try:
        radii = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ValidationError(f"bad sweep list {text!r}: {exc}") from exc
    if not radii:
        raise ValidationError("sweep list is empty")
    for radius in radii:
        if not (math.isfinite(radius) and radius > 0):
            raise ValidationError(f"sweep radii must be positive, got {radius!r}")
    return radii


def _cmd_limit_sweep(args) -> int:
    system = load_system(args.input)
    radii = _parse_sweep(args.sweep)
    disk = to_disk_system(system)
    masses = disk.masses()
    positions = [complex(p) for p in disk.positions()]
    smallest = min(radii)
    for w in positions:
        if abs(w) >= smallest * (1.0 - BOUNDARY_MARGIN):
            raise ValidationError(
                f"point {w!r} falls outside the swept disk of radius {smallest!r}"
            )
    rows = [(r, euclidean_limit_error(masses, positions, r)) for r in radii]
    if args.format == "csv":
        _emit(csv_text(CSV_HEADER_LIMIT, rows), args.output)
        return EXIT_OK
    errors = [err for _, err in rows]
    ratios = [
        errors[k] / errors[k + 1] if errors[k + 1] != 0.0 else math.inf
        for k in range(len(errors) - 1)
    ]
    report = {
        "command": "limit-sweep",
        "input_sha256": file_digest(args.input),
        "results": {
            "ratios": ratios,
            "rows": [list(row) for row in rows],
            "strictly_decreasing": all(
                a > b for a, b in zip(errors, errors[1:])
            ),
        },
        "sweep": radii,
        "tolerances": {"boundary_margin": BOUNDARY_MARGIN},
    }
    _emit(report_text(report), args.output)
    return EXIT_OK


def _cmd_karcher_compare(args) -> int:
    system = load_system(args.input)
    radius = system.radius
    settings = KarcherSettings(tol=args.tol)
    mean_point = karcher_mean(to_hyperboloid_system(system), settings)
    mean_disk = project(mean_point, radius)
    disk = to_disk_system(system)
    com = com_disk(disk)
    results = {
        "center_disk": _pair(com.center),
        "karcher_disk": _pair(mean_disk),
        "karcher_hyperboloid": [mean_point.x, mean_point.y, mean_point.z],
        "separation": disk_distance(com.center, mean_disk, radius),
    }
    if len(disk.particles) == 2:
        (pa, pb) = disk.particles
        results["lever_residual_com"] = lever_residual(
            pa.mass, pa.position, pb.mass, pb.position, com.center, radius
        )
        results["lever_residual_karcher"] = lever_residual(
            pa.mass, pa.position, pb.mass, pb.position, mean_disk, radius
        )
    report = {
        "command": "karcher-compare",
        "input_sha256": file_digest(args.input),
        "model": system.model,
        "radius": radius,
        "results": results,
        "tolerances": {
            "karcher_gradient": settings.tol
            if settings.tol is not None
            else 1e-12 * radius,
        },
    }
    _emit(report_text(report), args.output)
    return EXIT_OK


def _cmd_distance(args) -> int:
    w1 = complex(args.coords[0], args.coords[1])
    w2 = complex(args.coords[2], args.coords[3])
    sys.stdout.write(format_float(disk_distance(w1, w2, args.radius)) + "\n")
    return EXIT_OK


def _cmd_project(args) -> int:
    point = hpoint(args.coords[0], args.coords[1], args.coords[2], args.radius)
    w = project(point, args.radius)
    sys.stdout.write(f"{format_float(w.real)} {format_float(w.imag)}\n")
    return EXIT_OK


def _cmd_unproject(args) -> int:
    lifted = unproject(complex(args.coords[0], args.coords[1]), args.radius)
    sys.stdout.write(
        f"{format_float(lifted.x)} {format_float(lifted.y)} "
        f"{format_float(lifted.z)}\n"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hypercom",
        description="Center of mass on constant negative curvature surfaces.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    com = sub.add_parser("com", help="center of mass of a system file")
    com.add_argument("--input", required=True, help="system file (JSON)")
    com.add_argument("--output", default=None, help="report path (default stdout)")
    com.set_defaults(func=_cmd_com)

    eq = sub.add_parser("equilibrium", help="balanced two-body configuration")
    eq.add_argument("--m1", type=float, required=True)
    eq.add_argument("--m2", type=float, required=True)
    eq.add_argument("--alpha", type=float, required=True,
                    help="disk radius of the first mass")
    eq.add_argument("--radius", type=float, required=True)
    eq.add_argument("--angles", type=int, default=SWEEP_ANGLES,
                    help="rotation sweep resolution")
    eq.add_argument("--format", choices=("json", "csv"), default="json")
    eq.add_argument("--output", default=None)
    eq.set_defaults(func=_cmd_equilibrium)

    sweep = sub.add_parser("limit-sweep", help="flat-limit error over radii")
    sweep.add_argument("--input", required=True)
    sweep.add_argument("--sweep", required=True, help="comma-separated radii")
    sweep.add_argument("--format", choices=("json", "csv"), default="json")
    sweep.add_argument("--output", default=None)
    sweep.set_defaults(func=_cmd_limit_sweep)

    kc = sub.add_parser(
        "karcher-compare",
        help="averaging formula versus the Riemannian barycenter",
    )
    kc.add_argument("--input", required=True)
    kc.add_argument("--tol", type=float, default=None,
                    help="gradient tolerance (default 1e-12 * radius)")
    kc.add_argument("--output", default=None)
    kc.set_defaults(func=_cmd_karcher_compare)

    dist = sub.add_parser("distance", help="distance between two disk points")
    dist.add_argument("coords", type=float, nargs=4, help="re1 im1 re2 im2")
    dist.add_argument("--radius", type=float, required=True)
    dist.set_defaults(func=_cmd_distance)

    proj = sub.add_parser("project", help="hyperboloid point to disk point")
    proj.add_argument("coords", type=float, nargs=3, help="x y z")
    proj.add_argument("--radius", type=float, required=True)
    proj.set_defaults(func=_cmd_project)

    unproj = sub.add_parser("unproject", help="disk point to hyperboloid point")
    unproj.add_argument("coords", type=float, nargs=2, help="re im")
    unproj.add_argument("--radius", type=float, required=True)
    unproj.set_defaults(func=_cmd_unproject)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"hypercom: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericalError as exc:
        print(f"hypercom: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def run() -> None:
    sys.exit(main())
