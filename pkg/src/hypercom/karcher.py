"""Weighted Riemannian barycenter on the hyperboloid sheet.

Independent cross-check for the disk averaging formula: the barycenter
here is the minimizer of sum m_k d(x, x_k)^2, found by gradient
descent through the exponential map, x <- exp_x(step * mean of
m_k log_x(x_k)).  On a globally negatively curved surface the
objective is strictly geodesically convex with Hessian eigenvalues
between 1 and (d/R) coth(d/R), so the minimizer is unique; the step is
the inverse of the mass-weighted mean of (d_k/R) coth(d_k/R), the
local smoothness bound.  For tight clusters that factor is 1 and this
is the plain fixed-point iteration, but a unit step overshoots and
oscillates once points spread beyond about 2R, so the damping is what
makes convergence unconditional.

For two particles the minimizer lies on their geodesic and satisfies
the lever rule m1 d(x, x1) = m2 d(x, x2), so it coincides with
barycenter.lever_point.  For three or more particles off a common
diameter it generally differs from com_disk; the CLI reports that gap
rather than asserting anything about it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .barycenter import HYPERBOLOID, MassedSystem
from .errors import ConvergenceError, ValidationError
from .geometry import (
    HPoint,
    check_hpoint,
    check_radius,
    hyperboloid_distance,
    minkowski_inner,
)

# Tangency of a vector at its base point, relative to the product scale.
TANGENT_TOL = 1e-10


@dataclass(frozen=True)
class TangentVector:
    """Vector in the tangent plane of the sheet at ``base``.

    Tangency means Minkowski-orthogonality to the base point; such
    vectors are spacelike, so their Minkowski norm is a real length.
    """

    base: HPoint
    v: tuple[float, float, float]

    def norm(self) -> float:
        return math.sqrt(max(minkowski_inner(self.v, self.v), 0.0))


@dataclass(frozen=True)
class KarcherSettings:
    """Stopping rule for the barycenter iteration.

    ``tol`` bounds the Minkowski norm of the mean log vector at the
    output; None means 1e-12 times the radius of the system being
    averaged.
    """

    tol: float | None = None
    max_iter: int = 10_000

    def __post_init__(self):
        if self.tol is not None and not (math.isfinite(self.tol) and self.tol > 0.0):
            raise ValidationError(f"tolerance must be positive, got {self.tol!r}")
        if self.max_iter < 1:
            raise ValidationError(f"max_iter must be at least 1, got {self.max_iter!r}")


def _check_tangent(base: HPoint, v, radius: float) -> None:
    inner = minkowski_inner(base, v)
    scale = (radius * radius) + math.sqrt(
        (base.x * base.x + base.y * base.y + base.z * base.z)
        * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
    )
    if abs(inner) > TANGENT_TOL * scale:
        raise ValidationError(
            f"vector {tuple(v)!r} is not tangent at {tuple(base)!r}"
        )


def exp_map(vector: TangentVector, radius: float) -> HPoint:
    """Follow the geodesic from the base point for arclength |v|.

    cosh(|v|/R) p + R sinh(|v|/R) v/|v| with |v| the Minkowski norm; the
    zero vector returns the base point itself.
    """
    radius = check_radius(radius)
    base = check_hpoint(vector.base, radius)
    _check_tangent(base, vector.v, radius)
    norm = vector.norm()
    if norm == 0.0:
        return base
    ch = math.cosh(norm / radius)
    sh = radius * math.sinh(norm / radius) / norm
    vx, vy, vz = vector.v
    return HPoint(ch * base.x + sh * vx, ch * base.y + sh * vy, ch * base.z + sh * vz)


def log_map(p, q, radius: float) -> TangentVector:
    """Tangent vector at p pointing to q with |log_map(p, q)| = d(p, q).

    The direction is the Minkowski projection of q onto the tangent
    plane at p; the map is globally defined and inverts exp_map.
    """
    radius = check_radius(radius)
    p = check_hpoint(p, radius)
    q = check_hpoint(q, radius)
    dist = hyperboloid_distance(p, q, radius)
    if dist == 0.0:
        return TangentVector(base=p, v=(0.0, 0.0, 0.0))
    coef = minkowski_inner(p, q) / (radius * radius)
    tx = q.x + coef * p.x
    ty = q.y + coef * p.y
    tz = q.z + coef * p.z
    # The projected chord has Minkowski norm R sinh(d/R) exactly, so the
    # rescale to arclength never squares the (possibly huge) components.
    scale = dist / (radius * math.sinh(dist / radius))
    return TangentVector(base=p, v=(tx * scale, ty * scale, tz * scale))


def _ratio_coth(t: float) -> float:
    # t coth t, extended by its limit 1 at t = 0; the tangential Hessian
    # eigenvalue of half the squared distance at geodesic distance t R.
    if t < 1e-8:
        return 1.0
    return t / math.tanh(t)


def _renormalize(x: float, y: float, z: float, radius: float) -> HPoint:
    # Rescale onto the sheet to kill rounding drift; z > 0 is preserved.
    factor = radius / math.sqrt(z * z - x * x - y * y)
    return HPoint(x * factor, y * factor, z * factor)


def karcher_mean(
    system: MassedSystem,
    settings: KarcherSettings | None = None,
    initial: HPoint | None = None,
) -> HPoint:
    """Weighted Frechet mean of a hyperboloid-model system.

    Starts from the mass-weighted Minkowski average rescaled onto the
    sheet (always on-sheet and inside the convex hull; ``initial``
    overrides it, and the limit does not depend on the start) and
    iterates until the mean log vector is shorter than the tolerance.
    Raises ConvergenceError, with the last iterate and gradient norm
    attached, if the cap is hit first.
    """
    if system.model != HYPERBOLOID:
        raise ValidationError(
            f"expected a {HYPERBOLOID!r} system, got {system.model!r}"
        )
    if settings is None:
        settings = KarcherSettings()
    radius = system.radius
    tol = settings.tol if settings.tol is not None else 1e-12 * radius
    points = [p.position for p in system.particles]
    masses = [p.mass for p in system.particles]
    if len(points) == 1:
        return points[0]
    total = math.fsum(masses)
    if initial is not None:
        current = check_hpoint(initial, radius)
    else:
        current = _renormalize(
            math.fsum(m * p.x for m, p in zip(masses, points)) / total,
            math.fsum(m * p.y for m, p in zip(masses, points)) / total,
            math.fsum(m * p.z for m, p in zip(masses, points)) / total,
            radius,
        )
    gradient_norm = math.inf
    for _ in range(settings.max_iter):
        logs = [log_map(current, p, radius) for p in points]
        gx = math.fsum(m * t.v[0] for m, t in zip(masses, logs)) / total
        gy = math.fsum(m * t.v[1] for m, t in zip(masses, logs)) / total
        gz = math.fsum(m * t.v[2] for m, t in zip(masses, logs)) / total
        # A rounded-negative square means the gradient is at the noise
        # floor; sqrt(|.|) estimates that floor instead of claiming zero.
        gradient_norm = math.sqrt(abs(gx * gx + gy * gy - gz * gz))
        if gradient_norm < tol:
            return current
        # Inverse of the smoothness bound sum of m_k (d_k/R) coth(d_k/R);
        # never above 1, and exactly 1 in the coincident limit.
        smoothness = math.fsum(
            m * _ratio_coth(t.norm() / radius) for m, t in zip(masses, logs)
        ) / total
        step = 1.0 / smoothness
        moved = exp_map(
            TangentVector(base=current, v=(step * gx, step * gy, step * gz)),
            radius,
        )
        current = _renormalize(moved.x, moved.y, moved.z, radius)
    raise ConvergenceError(
        f"barycenter iteration did not reach {tol!r} within "
        f"{settings.max_iter} steps (gradient norm {gradient_norm!r})",
        last_iterate=current,
        gradient_norm=gradient_norm,
    )
