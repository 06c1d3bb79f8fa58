"""Geometry of the two standard models of constant curvature -1/R^2.

The hyperboloid model is the upper sheet of x^2 + y^2 - z^2 = -R^2
(z > 0) in Minkowski 3-space with the bilinear form
<p, q> = p.x q.x + p.y q.y - p.z q.z.  The disk model is the complex
disk |w| < R carrying the conformal metric
ds^2 = 4 R^4 |dw|^2 / (R^2 - |w|^2)^2.  Stereographic projection from
(0, 0, -R) identifies the two isometrically:

    project:    w = u + iv with u = R x / (R + z), v = R y / (R + z)
    unproject:  x = 2 R^2 u / (R^2 - |w|^2)
                y = 2 R^2 v / (R^2 - |w|^2)
                z = R (R^2 + |w|^2) / (R^2 - |w|^2)

The z sign convention matters: the variant z = R (|w|^2 - R^2) /
(R^2 - |w|^2) sends the origin to (0, 0, -R) on the lower sheet and is
not an inverse of the projection, so it is not used here.

One-dimensional analogues (the branch x^2 - y^2 = -R^2, y > 0,
projected to the interval (-R, R)) cover the collinear case.  All
functions are pure; nothing in this module holds mutable state.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NumericalError, ValidationError

# On-surface validation at construction; relative to the point's scale.
TOL_CONSTRUCT = 1e-9
# Model round trips hold to this relative error on the documented domain.
TOL_ROUNDTRIP = 1e-12
# Distance comparisons (midpoints, additivity checks) use this.
TOL_COMPARE = 1e-9
# Disk points with |w| > R (1 - BOUNDARY_MARGIN) are rejected outright:
# the projection denominator R^2 - |w|^2 has lost all precision there.
BOUNDARY_MARGIN = 1e-12
# acosh arguments in [1 - ACOSH_CLAMP, 1) count as coincident points.
ACOSH_CLAMP = 1e-12


class HPoint(NamedTuple):
    """Point on the upper sheet x^2 + y^2 - z^2 = -R^2, z >= R."""

    x: float
    y: float
    z: float


class LPoint(NamedTuple):
    """Point on the upper branch x^2 - y^2 = -R^2, y >= R."""

    x: float
    y: float


def check_radius(radius: float) -> float:
    if not (math.isfinite(radius) and radius > 0.0):
        raise ValidationError(
            f"curvature radius must be positive and finite, got {radius!r}"
        )
    return float(radius)


def check_hpoint(p, radius: float) -> HPoint:
    """Validate a point of the upper hyperboloid sheet.

    The quadric residual is compared against TOL_CONSTRUCT scaled by
    R^2 + |p|^2; scaling by R^2 alone would reject far points whose
    residual is dominated by rounding of z^2.
    """
    x, y, z = p
    rr = radius * radius
    scale = rr + x * x + y * y + z * z
    residual = abs(x * x + y * y - z * z + rr)
    if not z > 0.0 or residual > TOL_CONSTRUCT * scale:
        raise ValidationError(
            f"point {tuple(p)!r} is not on the upper sheet for radius {radius!r}"
        )
    return p if type(p) is HPoint else HPoint(float(x), float(y), float(z))


def hpoint(x: float, y: float, z: float, radius: float) -> HPoint:
    """Validating constructor for hyperboloid points."""
    return check_hpoint(HPoint(float(x), float(y), float(z)), check_radius(radius))


def check_lpoint(p, radius: float) -> LPoint:
    """Validate a point of the upper hyperbola branch (1D model)."""
    x, y = p
    rr = radius * radius
    scale = rr + x * x + y * y
    residual = abs(x * x - y * y + rr)
    if not y > 0.0 or residual > TOL_CONSTRUCT * scale:
        raise ValidationError(
            f"point {tuple(p)!r} is not on the upper branch for radius {radius!r}"
        )
    return p if type(p) is LPoint else LPoint(float(x), float(y))


def lpoint(x: float, y: float, radius: float) -> LPoint:
    """Validating constructor for 1D hyperbola points."""
    return check_lpoint(LPoint(float(x), float(y)), check_radius(radius))


def check_disk_point(w, radius: float) -> complex:
    """Validate a disk-model point, rejecting the outermost boundary band."""
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise ValidationError(f"disk point must be finite, got {w!r}")
    if abs(w) >= radius * (1.0 - BOUNDARY_MARGIN):
        raise ValidationError(
            f"point {w!r} is not inside the disk of radius {radius!r}"
        )
    return w


def check_interval_point(u: float, radius: float) -> float:
    """Validate a 1D model point u in (-R, R), same boundary band as the disk."""
    u = float(u)
    if not math.isfinite(u) or abs(u) >= radius * (1.0 - BOUNDARY_MARGIN):
        raise ValidationError(
            f"coordinate {u!r} is not inside the interval (-{radius!r}, {radius!r})"
        )
    return u


def project(p, radius: float) -> complex:
    """Stereographic image of a hyperboloid point in the disk model."""
    radius = check_radius(radius)
    x, y, z = check_hpoint(p, radius)
    denom = radius + z
    return complex(radius * x / denom, radius * y / denom)


def unproject(w, radius: float) -> HPoint:
    """Lift a disk point onto the upper hyperboloid sheet."""
    radius = check_radius(radius)
    w = check_disk_point(w, radius)
    rr = radius * radius
    ww = w.real * w.real + w.imag * w.imag
    denom = rr - ww
    return HPoint(
        2.0 * rr * w.real / denom,
        2.0 * rr * w.imag / denom,
        radius * (rr + ww) / denom,
    )


def project_line(p, radius: float) -> float:
    """1D stereographic projection u = R x / (R + y)."""
    radius = check_radius(radius)
    x, y = check_lpoint(p, radius)
    return radius * x / (radius + y)


def unproject_line(u: float, radius: float) -> LPoint:
    """Lift an interval coordinate onto the upper hyperbola branch."""
    radius = check_radius(radius)
    u = check_interval_point(u, radius)
    rr = radius * radius
    denom = rr - u * u
    return LPoint(2.0 * rr * u / denom, radius * (rr + u * u) / denom)


def minkowski_inner(p, q) -> float:
    """Bilinear form x1 x2 + y1 y2 - z1 z2 of the ambient Minkowski space.

    Accepts any 3-sequences, so it also serves tangent vectors.
    """
    return p[0] * q[0] + p[1] * q[1] - p[2] * q[2]


def _distance_from_gap(gap: float, radius: float) -> float:
    """Distance from the acosh-argument gap (arg - 1), with the clamp contract.

    Gaps in [-ACOSH_CLAMP, 0) count as coincident points (rounding);
    anything further below is a genuine failure of the timelike-angle
    formula.  acosh(1 + g) is evaluated as 2 asinh(sqrt(g / 2)), which
    keeps small distances accurate to O(eps) instead of O(sqrt(eps)).
    """
    if gap < 0.0:
        if gap >= -ACOSH_CLAMP:
            return 0.0
        raise NumericalError(
            f"acosh argument {1.0 + gap!r} fell below 1 beyond tolerance"
        )
    return 2.0 * radius * math.asinh(math.sqrt(0.5 * gap))


def hyperboloid_distance(p, q, radius: float) -> float:
    """Geodesic distance between two points of the upper sheet.

    Mathematically R acosh(-<p, q> / R^2).  The argument gap is taken
    from the Minkowski norm of p - q when the points are close (the
    inner-product form loses half the digits there) and from the inner
    product otherwise.
    """
    radius = check_radius(radius)
    p = check_hpoint(p, radius)
    q = check_hpoint(q, radius)
    rr = radius * radius
    dx, dy, dz = p.x - q.x, p.y - q.y, p.z - q.z
    gap = (dx * dx + dy * dy - dz * dz) / (2.0 * rr)
    if gap > 0.5:
        gap = -minkowski_inner(p, q) / rr - 1.0
    return _distance_from_gap(gap, radius)


def disk_distance(w1, w2, radius: float) -> float:
    """Geodesic distance in the disk model, pulled back through the lift."""
    return hyperboloid_distance(
        unproject(w1, radius), unproject(w2, radius), radius
    )


def arclength_from_pole(u: float, radius: float) -> float:
    """Signed geodesic arclength from the pole to the 1D point over u.

    Integrating the conformal line element 2 R^2 dt / (R^2 - t^2) from
    0 to u gives s = R log((R + u) / (R - u)); odd and strictly
    increasing in u.
    """
    radius = check_radius(radius)
    u = check_interval_point(u, radius)
    return radius * math.log((radius + u) / (radius - u))


def arc_between(u1: float, u2: float, radius: float) -> float:
    """Signed arclength from the point over u1 to the point over u2."""
    radius = check_radius(radius)
    u1 = check_interval_point(u1, radius)
    u2 = check_interval_point(u2, radius)
    return radius * (
        math.log((radius + u2) / (radius - u2))
        - math.log((radius + u1) / (radius - u1))
    )


@dataclass(frozen=True)
class GeodesicSegment:
    """Constant-speed geodesic from ``start`` to ``end`` in the disk model.

    point(0) is start, point(1) is end, and
    disk_distance(point(s), point(t)) = |s - t| * length for s, t in
    [0, 1].  The curve lives on the hyperboloid (the plane through the
    lifted endpoints and the origin) and is projected back, so there is
    no circle-versus-diameter case split.
    """

    start: complex
    end: complex
    radius: float
    length: float
    base: HPoint
    tangent: tuple[float, float, float]

    def point(self, t: float) -> complex:
        # cosh(s) p + sinh(s) R v, evaluated through the null directions
        # p +/- R v; the split keeps the far end accurate where the
        # cosh/sinh terms would cancel e^s-sized intermediates.
        s = t * self.length / self.radius
        r = self.radius
        bx, by, bz = self.base
        vx, vy, vz = self.tangent
        ep = 0.5 * math.exp(s)
        em = 0.5 * math.exp(-s)
        return project(
            HPoint(
                ep * (bx + r * vx) + em * (bx - r * vx),
                ep * (by + r * vy) + em * (by - r * vy),
                ep * (bz + r * vz) + em * (bz - r * vz),
            ),
            r,
        )


def geodesic_between(a, b, radius: float) -> GeodesicSegment:
    """Geodesic segment joining two distinct disk points.

    The unit tangent at the lift of ``a`` comes from Minkowski
    Gram-Schmidt on the chord toward the lift of ``b``.
    """
    radius = check_radius(radius)
    a = check_disk_point(a, radius)
    b = check_disk_point(b, radius)
    p = unproject(a, radius)
    q = unproject(b, radius)
    length = hyperboloid_distance(p, q, radius)
    if a == b or length == 0.0:
        raise ValidationError(f"degenerate geodesic: endpoints {a!r} coincide")
    coef = minkowski_inner(p, q) / (radius * radius)
    tx = q.x + coef * p.x
    ty = q.y + coef * p.y
    tz = q.z + coef * p.z
    # <t, t> = R^2 sinh^2(L/R) exactly; the closed form avoids the
    # square cancellation that squaring the components runs into.
    norm = radius * math.sinh(length / radius)
    return GeodesicSegment(
        start=a,
        end=b,
        radius=radius,
        length=length,
        base=p,
        tangent=(tx / norm, ty / norm, tz / norm),
    )


def rotate_disk(w, angle: float) -> complex:
    """Rotate a disk point about the origin; an isometry of the disk metric."""
    return complex(w) * cmath.exp(1j * angle)
