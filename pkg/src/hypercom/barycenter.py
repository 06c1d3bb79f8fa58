"""Center of mass for systems of massed particles on the curved models.

In the coordinate v = log((R + w) / (R - w)) the center of a system is
the plain mass-weighted average of the particle coordinates; mapping
the average back through w = R tanh(v / 2) gives the center point in
the disk.  On the real diameter v is the arclength from the pole
divided by R, so for two real particles this is exactly the balance
point of the lever rule m1 s1 = m2 s2.  As R grows the construction
degenerates to the flat weighted mean.

Whether the same point satisfies the geodesic lever rule for generic
(non-diametric) configurations is deliberately not assumed here; the
lever_point bisection and the karcher module exist to measure that.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ValidationError
from .geometry import (
    HPoint,
    check_disk_point,
    check_hpoint,
    check_interval_point,
    check_radius,
    disk_distance,
    geodesic_between,
    project,
    unproject,
)

LINE = "line"
DISK = "disk"
HYPERBOLOID = "hyperboloid"
MODELS = (LINE, DISK, HYPERBOLOID)

# Bisection for the two-body balance point stops when the residual falls
# below this fraction of the endpoint separation.
LEVER_RESIDUAL_RTOL = 1e-12
LEVER_MAX_BISECTIONS = 200


def check_mass(mass: float) -> float:
    mass = float(mass)
    if not (math.isfinite(mass) and mass > 0.0):
        raise ValidationError(f"mass must be positive and finite, got {mass!r}")
    return mass


@dataclass(frozen=True)
class Particle:
    """One massed particle; the position type depends on the model tag."""

    mass: float
    position: complex | float | HPoint


@dataclass(frozen=True)
class MassedSystem:
    """Nonempty ordered collection of particles on one model at one radius."""

    particles: tuple[Particle, ...]
    radius: float
    model: str = DISK

    def __post_init__(self):
        check_radius(self.radius)
        if self.model not in MODELS:
            raise ValidationError(f"unknown model tag {self.model!r}")
        if not self.particles:
            raise ValidationError("a system needs at least one particle")
        for particle in self.particles:
            check_mass(particle.mass)
            if self.model == LINE:
                check_interval_point(particle.position, self.radius)
            elif self.model == DISK:
                check_disk_point(particle.position, self.radius)
            else:
                check_hpoint(particle.position, self.radius)

    @property
    def total_mass(self) -> float:
        return math.fsum(p.mass for p in self.particles)

    def masses(self) -> list[float]:
        return [p.mass for p in self.particles]

    def positions(self) -> list:
        return [p.position for p in self.particles]


def line_system(masses, positions, radius: float) -> MassedSystem:
    return _system(masses, positions, radius, LINE, float)


def disk_system(masses, positions, radius: float) -> MassedSystem:
    return _system(masses, positions, radius, DISK, complex)


def hyperboloid_system(masses, points, radius: float) -> MassedSystem:
    return _system(masses, points, radius, HYPERBOLOID, lambda p: HPoint(*p))


def _system(masses, positions, radius, model, coerce) -> MassedSystem:
    masses = list(masses)
    positions = list(positions)
    if len(masses) != len(positions):
        raise ValidationError(
            f"{len(masses)} masses for {len(positions)} positions"
        )
    particles = tuple(
        Particle(float(m), coerce(p)) for m, p in zip(masses, positions)
    )
    return MassedSystem(particles=particles, radius=radius, model=model)


@dataclass(frozen=True)
class CenterOfMass:
    """Center point plus the averaged coordinate it came from."""

    center: complex
    log_ratio_mean: complex
    total_mass: float


def log_ratio(w, radius: float) -> complex:
    """Averaging coordinate log((R + w) / (R - w)), principal branch.

    (R + w) / (R - w) has real part (R^2 - |w|^2) / |R - w|^2 > 0
    whenever |w| < R, so the principal logarithm is analytic on the
    whole disk and never crosses its cut; the imaginary part stays in
    (-pi/2, pi/2).  Odd in w and commutes with conjugation.
    """
    radius = check_radius(radius)
    w = check_disk_point(w, radius)
    return cmath.log((radius + w) / (radius - w))


def log_ratio_inv(v, radius: float) -> complex:
    """Inverse coordinate map w = R tanh(v / 2) on the strip |Im v| < pi/2."""
    radius = check_radius(radius)
    v = complex(v)
    if not abs(v.imag) < 0.5 * math.pi:
        raise ValidationError(
            f"coordinate {v!r} is outside the strip |imag| < pi/2"
        )
    return radius * cmath.tanh(0.5 * v)


def _require_model(system: MassedSystem, model: str) -> None:
    if system.model != model:
        raise ValidationError(
            f"expected a {model!r} system, got {system.model!r}"
        )


def com_line(system: MassedSystem) -> float:
    """Center of mass of a 1D system, as its interval coordinate.

    The averaged coordinate is formed with exact summation, so the
    result does not depend on particle order.  A single particle is
    returned unchanged.
    """
    _require_model(system, LINE)
    radius = system.radius
    if len(system.particles) == 1:
        return float(system.particles[0].position)
    total = math.fsum(p.mass for p in system.particles)
    mean = (
        math.fsum(
            p.mass * math.log((radius + p.position) / (radius - p.position))
            for p in system.particles
        )
        / total
    )
    return radius * math.tanh(0.5 * mean)


def com_disk(system: MassedSystem) -> CenterOfMass:
    """Center of mass of a disk system: mean of log_ratio, mapped back.

    Sums are exact (correctly rounded), so the center is bit-identical
    under any particle reordering.  A single particle short-circuits to
    its own position.
    """
    _require_model(system, DISK)
    radius = system.radius
    masses = [p.mass for p in system.particles]
    total = math.fsum(masses)
    if len(system.particles) == 1:
        w = complex(system.particles[0].position)
        return CenterOfMass(
            center=w, log_ratio_mean=log_ratio(w, radius), total_mass=total
        )
    coords = [log_ratio(p.position, radius) for p in system.particles]
    mean = complex(
        math.fsum(m * v.real for m, v in zip(masses, coords)) / total,
        math.fsum(m * v.imag for m, v in zip(masses, coords)) / total,
    )
    return CenterOfMass(
        center=log_ratio_inv(mean, radius), log_ratio_mean=mean, total_mass=total
    )


def com_hyperboloid(masses, points, radius: float) -> HPoint:
    """Center of mass of particles on the sheet, computed through the disk."""
    radius = check_radius(radius)
    points = [check_hpoint(p, radius) for p in points]
    masses = [check_mass(m) for m in masses]
    if len(masses) != len(points):
        raise ValidationError(f"{len(masses)} masses for {len(points)} points")
    if len(points) == 1:
        return points[0]
    system = disk_system(masses, [project(p, radius) for p in points], radius)
    return unproject(com_disk(system).center, radius)


def com_euclidean(masses, positions) -> complex:
    """Flat weighted mean; the zero-curvature limit of com_disk."""
    masses = [check_mass(m) for m in masses]
    positions = [complex(p) for p in positions]
    if len(masses) != len(positions):
        raise ValidationError(
            f"{len(masses)} masses for {len(positions)} positions"
        )
    if not positions:
        raise ValidationError("a system needs at least one particle")
    if len(positions) == 1:
        return positions[0]
    total = math.fsum(masses)
    return complex(
        math.fsum(m * p.real for m, p in zip(masses, positions)) / total,
        math.fsum(m * p.imag for m, p in zip(masses, positions)) / total,
    )


def euclidean_limit_error(masses, positions, radius: float) -> float:
    """|com_disk - com_euclidean| for fixed masses and positions at radius R.

    Decays like (mean(w^3) - mean(w)^3) / (3 R^2) for real positions,
    so quadrupling when R halves.
    """
    system = disk_system(masses, positions, radius)
    return abs(com_disk(system).center - com_euclidean(masses, positions))


def lever_residual(m1, p1, m2, p2, probe, radius: float) -> float:
    """Signed lever imbalance m1 d(p1, c) - m2 d(p2, c) at a probe point c.

    Zero at the balance point when the probe lies on the geodesic
    through the two particles; any disk point is accepted.
    """
    m1 = check_mass(m1)
    m2 = check_mass(m2)
    return m1 * disk_distance(p1, probe, radius) - m2 * disk_distance(
        p2, probe, radius
    )


def to_disk_system(system: MassedSystem) -> MassedSystem:
    """Re-express a system in disk coordinates (identity for disk input)."""
    if system.model == DISK:
        return system
    if system.model == LINE:
        positions = [complex(p.position) for p in system.particles]
    else:
        positions = [project(p.position, system.radius) for p in system.particles]
    return disk_system(system.masses(), positions, system.radius)


def to_hyperboloid_system(system: MassedSystem) -> MassedSystem:
    """Lift a system onto the sheet (identity for hyperboloid input)."""
    if system.model == HYPERBOLOID:
        return system
    disk = to_disk_system(system)
    points = [unproject(p.position, disk.radius) for p in disk.particles]
    return hyperboloid_system(disk.masses(), points, disk.radius)


def lever_point(m1, p1, m2, p2, radius: float) -> complex:
    """Balance point on the geodesic segment from p1 to p2.

    Bisection on the curve parameter: the residual grows strictly from
    -m2 L at p1 to +m1 L at p2, so the zero is unique.  Stops when the
    residual falls below LEVER_RESIDUAL_RTOL * L; for endpoints so close
    that distance rounding dominates, the final bracket midpoint is
    returned (it brackets the true balance point either way).
    """
    m1 = check_mass(m1)
    m2 = check_mass(m2)
    segment = geodesic_between(p1, p2, radius)
    target = LEVER_RESIDUAL_RTOL * segment.length
    lo, hi = 0.0, 1.0
    probe = segment.point(0.5)
    for _ in range(LEVER_MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        probe = segment.point(mid)
        residual = lever_residual(m1, p1, m2, p2, probe, radius)
        if abs(residual) < target:
            break
        if residual < 0.0:
            lo = mid
        else:
            hi = mid
    return probe
