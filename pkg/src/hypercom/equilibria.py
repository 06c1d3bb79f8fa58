"""Balanced configurations and how their center behaves under rotation.

A two-body configuration on a diameter of the disk balances when
m1 s1 = m2 s2, with s the arclength from the pole to each particle.
Solving the balance for the second radius gives the closed form
r = R tanh((m1 / (2 m2)) log((R + alpha) / (R - alpha))), which orders
against alpha exactly opposite to the masses: heavier partner, smaller
radius.

Rigidly rotating a configuration and recomputing its center probes
whether the averaging formula commutes with rotations.  It does for
mass-symmetric configurations (the center sits at the origin for every
angle) but not in general; rotation_sweep records the defect curve
instead of asserting it away.  The same spirit applies to the
three-body collinear and equilateral constructions and to the
mirror-symmetric pair, whose center provably stays on the imaginary
axis (the geodesic fixed by x -> -x).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .barycenter import (
    CenterOfMass,
    MassedSystem,
    check_mass,
    com_disk,
    com_line,
    disk_system,
    line_system,
)
from .errors import NumericalError, ValidationError
from .geometry import (
    BOUNDARY_MARGIN,
    check_interval_point,
    check_radius,
    check_disk_point,
    rotate_disk,
)

# Two radii count as equal when they agree to this relative tolerance;
# otherwise the ordering is decided by sign.
EQUALITY_RTOL = 1e-12

# Rotation sweeps default to this many uniform angles in [0, 2*pi).
SWEEP_ANGLES = 64

EULERIAN = "eulerian"
LAGRANGIAN = "lagrangian"


def balance_radius(m1: float, m2: float, alpha: float, radius: float) -> float:
    """Radius r at which mass m2 opposite the origin balances m1 at alpha.

    Closed form r = R tanh((m1 / (2 m2)) log((R + alpha) / (R - alpha))).
    The result is certified: the balance recomputed from the rounded r
    must hold to EQUALITY_RTOL, which fails (NumericalError) once r is
    within about 1e-5 of the rim, where the log ratio loses the digits
    the balance invariant needs.  Extreme mass ratios with alpha near
    the rim land there; the balancing radius exists but doubles cannot
    carry it.
    """
    m1 = check_mass(m1)
    m2 = check_mass(m2)
    radius = check_radius(radius)
    alpha = check_interval_point(alpha, radius)
    if alpha <= 0.0:
        raise ValidationError(f"alpha must be in (0, R), got {alpha!r}")
    target = m1 * math.log((radius + alpha) / (radius - alpha))
    r = radius * math.tanh(target / (2.0 * m2))
    if r >= radius * (1.0 - BOUNDARY_MARGIN):
        raise NumericalError(
            f"balancing radius for masses ({m1!r}, {m2!r}) at alpha {alpha!r} "
            f"rounds onto the disk boundary"
        )
    achieved = m2 * math.log((radius + r) / (radius - r))
    if abs(achieved - target) > EQUALITY_RTOL * max(abs(achieved), abs(target)):
        raise NumericalError(
            f"balancing radius {r!r} cannot reproduce the lever balance to "
            f"{EQUALITY_RTOL!r} in double precision"
        )
    return r


@dataclass(frozen=True)
class TwoBodyEquilibrium:
    """Diametric two-body configuration satisfying the lever balance."""

    m1: float
    m2: float
    alpha: float
    partner_radius: float
    radius: float

    def __post_init__(self):
        radius = check_radius(self.radius)
        check_mass(self.m1)
        check_mass(self.m2)
        s1 = self.m1 * math.log((radius + self.alpha) / (radius - self.alpha))
        s2 = self.m2 * math.log(
            (radius + self.partner_radius) / (radius - self.partner_radius)
        )
        if abs(s1 - s2) > EQUALITY_RTOL * max(abs(s1), abs(s2)):
            raise ValidationError(
                f"radii ({self.alpha!r}, {self.partner_radius!r}) do not "
                f"satisfy the lever balance for masses "
                f"({self.m1!r}, {self.m2!r})"
            )


def balanced_pair(m1, m2, alpha, radius) -> TwoBodyEquilibrium:
    """Construct the balanced diametric pair for m1 at radius alpha."""
    return TwoBodyEquilibrium(
        m1=float(m1),
        m2=float(m2),
        alpha=float(alpha),
        partner_radius=balance_radius(m1, m2, alpha, radius),
        radius=float(radius),
    )


@dataclass(frozen=True)
class BalanceVerdict:
    """Ordering of the balancing radius against alpha, checked against masses."""

    partner_radius: float
    relation: str  # "less", "equal" or "greater" (partner vs alpha)
    matches_mass_order: bool


def classify_balance(m1, m2, alpha, radius) -> BalanceVerdict:
    """Order the balancing radius against alpha and compare with the masses.

    The heavier second mass balances closer to the origin; equality
    within EQUALITY_RTOL counts as equal radii and should go with equal
    masses.
    """
    r = balance_radius(m1, m2, alpha, radius)
    if abs(r - alpha) <= EQUALITY_RTOL * max(abs(r), abs(alpha)):
        relation = "equal"
    elif r < alpha:
        relation = "less"
    else:
        relation = "greater"
    if m2 > m1:
        expected = "less"
    elif m2 < m1:
        expected = "greater"
    else:
        expected = "equal"
    return BalanceVerdict(
        partner_radius=r,
        relation=relation,
        matches_mass_order=relation == expected,
    )


def diametric_system(m1, m2, alpha, radius) -> MassedSystem:
    """Balanced pair as a disk system: m1 at +alpha, m2 at -balance_radius."""
    pair = balanced_pair(m1, m2, alpha, radius)
    return disk_system(
        [pair.m1, pair.m2], [alpha, -pair.partner_radius], radius
    )


@dataclass(frozen=True)
class RotationSample:
    angle: float
    com: CenterOfMass
    defect: float


@dataclass(frozen=True)
class RotationSweep:
    """Center-of-mass trace of a rigidly rotated system.

    defect(theta) = |com(rotated system) - rotated com(system)|; zero
    everywhere exactly when the averaging formula commutes with the
    rotation family on this system.
    """

    base: CenterOfMass
    samples: tuple[RotationSample, ...]
    max_defect: float
    max_center_abs: float


def rotation_sweep(system: MassedSystem, angles=None) -> RotationSweep:
    """Recompute the center over rigid rotations of a disk system."""
    if angles is None:
        angles = [2.0 * math.pi * k / SWEEP_ANGLES for k in range(SWEEP_ANGLES)]
    base = com_disk(system)
    masses = system.masses()
    samples = []
    for angle in angles:
        rotated = disk_system(
            masses,
            [rotate_disk(p, angle) for p in system.positions()],
            system.radius,
        )
        com = com_disk(rotated)
        defect = abs(com.center - rotate_disk(base.center, angle))
        samples.append(RotationSample(angle=angle, com=com, defect=defect))
    return RotationSweep(
        base=base,
        samples=tuple(samples),
        max_defect=max(s.defect for s in samples),
        max_center_abs=max(abs(s.com.center) for s in samples),
    )


@dataclass(frozen=True)
class TripleConfig:
    """Three-body configuration: collinear on a diameter, or equilateral."""

    kind: str
    masses: tuple[float, float, float]
    positions: tuple[complex, complex, complex]
    radius: float

    def __post_init__(self):
        radius = check_radius(self.radius)
        for m in self.masses:
            check_mass(m)
        for p in self.positions:
            check_disk_point(p, radius)
        if self.kind == EULERIAN:
            if any(p.imag != 0.0 for p in self.positions):
                raise ValidationError(
                    "collinear triple must lie on the real diameter"
                )
        elif self.kind == LAGRANGIAN:
            side = abs(self.positions[0])
            rot = cmath.exp(2j * math.pi / 3.0)
            if (
                abs(self.positions[1] - self.positions[0] * rot)
                > 1e-9 * max(side, radius)
                or abs(self.positions[2] - self.positions[1] * rot)
                > 1e-9 * max(side, radius)
            ):
                raise ValidationError(
                    "equilateral triple must be a point orbit under rotation "
                    "by 2*pi/3"
                )
            if max(self.masses) - min(self.masses) > 1e-12 * max(self.masses):
                raise ValidationError("equilateral triple needs equal masses")
        else:
            raise ValidationError(f"unknown triple kind {self.kind!r}")


def eulerian_triple(masses, positions, radius) -> tuple[TripleConfig, CenterOfMass]:
    """Collinear three-body configuration on the real diameter.

    The center comes from the 1D averaging formula; the configuration
    is balanced exactly when the averaged coordinate vanishes.
    """
    masses = tuple(float(m) for m in masses)
    positions = tuple(float(u) for u in positions)
    if len(masses) != 3 or len(positions) != 3:
        raise ValidationError("a triple needs exactly three masses and positions")
    system = line_system(masses, positions, radius)
    center = com_line(system)
    total = system.total_mass
    mean = math.fsum(
        m * math.log((radius + u) / (radius - u))
        for m, u in zip(masses, positions)
    ) / total
    config = TripleConfig(
        kind=EULERIAN,
        masses=masses,
        positions=tuple(complex(u) for u in positions),
        radius=float(radius),
    )
    return config, CenterOfMass(
        center=complex(center), log_ratio_mean=complex(mean), total_mass=total
    )


def lagrangian_triple(side, radius, mass=1.0) -> tuple[TripleConfig, CenterOfMass]:
    """Equal masses at the vertices of an origin-centered equilateral triangle.

    Positions are side * {1, e^(2 pi i/3), e^(4 pi i/3)}.  The product
    identity prod(R +/- w_k) = R^3 +/- side^3 makes the averaged
    coordinate (1/3) log((R^3 + side^3) / (R^3 - side^3)), which is
    nonzero for side > 0: the center of the rotating triangle is not
    the origin.
    """
    radius = check_radius(radius)
    side = float(side)
    if not 0.0 < side < radius:
        raise ValidationError(f"triangle radius must be in (0, R), got {side!r}")
    positions = tuple(
        side * cmath.exp(2j * math.pi * k / 3.0) for k in range(3)
    )
    masses = (float(mass),) * 3
    config = TripleConfig(
        kind=LAGRANGIAN, masses=masses, positions=positions, radius=radius
    )
    system = disk_system(masses, positions, radius)
    return config, com_disk(system)


def mirror_pair(mass, position, radius) -> tuple[MassedSystem, CenterOfMass]:
    """Equal masses at w and -conj(w), symmetric under x -> -x.

    The averaging coordinate is odd and commutes with conjugation, so
    the averaged value is purely imaginary and the center stays on the
    imaginary axis, the disk image of the geodesic x = 0.
    """
    position = check_disk_point(position, check_radius(radius))
    system = disk_system(
        [mass, mass], [position, -position.conjugate()], radius
    )
    return system, com_disk(system)
