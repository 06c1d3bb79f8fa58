"""Independent numeric oracles used by the tests.

Everything here deliberately avoids the code paths it checks:
arclengths come from adaptive quadrature of the conformal line element,
balance points from bisection on the lever relation, and the averaging
formula from 30+ digit complex arithmetic.  Values frozen into tests
were produced by these functions.
"""

import mpmath as mp


def arclength_quadrature(u1, u2, radius, dps=30):
    """Arclength between interval coordinates by quadrature of the metric."""
    with mp.workdps(dps):
        rr = mp.mpf(radius) ** 2
        value = mp.quad(lambda t: 2 * rr / (rr - t * t), [mp.mpf(u1), mp.mpf(u2)])
        return float(value)


def com_disk_highprec(masses, points, radius, dps=30):
    """Averaged-coordinate center evaluated in high-precision arithmetic."""
    with mp.workdps(dps):
        r = mp.mpf(radius)
        total = mp.fsum(mp.mpf(m) for m in masses)
        mean = (
            mp.fsum(
                mp.mpf(m) * mp.log((r + mp.mpc(w)) / (r - mp.mpc(w)))
                for m, w in zip(masses, points)
            )
            / total
        )
        return complex(r * mp.tanh(mean / 2))


def com_line_bisection(masses, positions, radius, dps=30):
    """1D center by bisection on the summed lever relation.

    The center u solves sum m_k (s(u) - s(u_k)) = 0 with s the (log
    form) arclength from the pole; the left side is strictly increasing
    in u, so plain interval halving finds it without ever inverting the
    relation in closed form.
    """
    with mp.workdps(dps):
        r = mp.mpf(radius)

        def s(u):
            return r * mp.log((r + u) / (r - u))

        def imbalance(u):
            return mp.fsum(mp.mpf(m) * (s(u) - s(mp.mpf(p))) for m, p in zip(masses, positions))

        lo = -r * (1 - mp.mpf("1e-25"))
        hi = r * (1 - mp.mpf("1e-25"))
        for _ in range(200):
            mid = (lo + hi) / 2
            if imbalance(mid) < 0:
                lo = mid
            else:
                hi = mid
        return float((lo + hi) / 2)


def balance_radius_bisection(m1, m2, alpha, radius, dps=30):
    """Partner radius from bisection on m1 s(alpha) - m2 s(r) = 0."""
    with mp.workdps(dps):
        r = mp.mpf(radius)
        target = mp.mpf(m1) * mp.log((r + mp.mpf(alpha)) / (r - mp.mpf(alpha)))

        def excess(x):
            return mp.mpf(m2) * mp.log((r + x) / (r - x)) - target

        lo = mp.mpf(0)
        hi = r * (1 - mp.mpf("1e-25"))
        for _ in range(200):
            mid = (lo + hi) / 2
            if excess(mid) < 0:
                lo = mid
            else:
                hi = mid
        return float((lo + hi) / 2)


def euclidean_limit_error_highprec(masses, points, radius, dps=50):
    """Distance between the curved and flat weighted means, high precision."""
    with mp.workdps(dps):
        total = mp.fsum(mp.mpf(m) for m in masses)
        flat = (
            mp.fsum(mp.mpf(m) * mp.mpc(w) for m, w in zip(masses, points)) / total
        )
        r = mp.mpf(radius)
        mean = (
            mp.fsum(
                mp.mpf(m) * mp.log((r + mp.mpc(w)) / (r - mp.mpc(w)))
                for m, w in zip(masses, points)
            )
            / total
        )
        return float(abs(r * mp.tanh(mean / 2) - flat))
