"""Residual verifiers for the Euler-Lagrange equation, its first integral and Killing field."""
import logging
from typing import Dict, Tuple

import numpy as np

from ..errors import InvalidInputError
from ..geometry.core import finite_diff, integrate_samples
from ..geometry.curves import PlanarCurve
from .profiles import MIN_PROFILE_SAMPLES, CurvatureProfile

logger = logging.getLogger(__name__)


def _require_samples(profile: CurvatureProfile, what: str):
    if profile.n < MIN_PROFILE_SAMPLES:
        raise InvalidInputError(f"{what}: need at least {MIN_PROFILE_SAMPLES} samples, got {profile.n}")


def kappa_derivative(profile: CurvatureProfile) -> np.ndarray:
    """
    d(kappa)/ds through the bounded variable u = kappa / sqrt(kappa^2 + a^2).

    kappa' = u' (kappa^2 + a^2)^(3/2) / a^2, with u' by finite_diff. Falls
    back to differencing kappa directly when a = 0.
    """
    if profile.a == 0:
        return finite_diff(profile.kappa, profile.h)
    w = profile.kappa**2 + profile.a**2
    return finite_diff(profile.u, profile.h) * w**1.5 / profile.a**2


def first_integral_rhs(kappa: np.ndarray, a: float, delta: float) -> np.ndarray:
    """(kappa^2 + a^2)^2 / a^4 * (delta (kappa^2 + a^2) - a^4)."""
    w = kappa**2 + a**2
    return w**2 / a**4 * (delta * w - a**4)


def first_integral_residual(profile: CurvatureProfile) -> float:
    """
    Max relative defect of the first integral over interior samples.

    |(kappa')^2 - rhs| / (1 + (kappa')^2) with the profile's delta.
    """
    _require_samples(profile, "first_integral_residual")
    kp2 = kappa_derivative(profile)**2
    rhs = first_integral_rhs(profile.kappa, profile.a, profile.delta)
    rel = np.abs(kp2 - rhs) / (1.0 + kp2)
    return float(np.max(rel[1:-1]))


def el_residual(profile: CurvatureProfile) -> float:
    """Max |u'' - a^2 u| over interior samples, u = kappa / sqrt(kappa^2 + a^2)."""
    _require_samples(profile, "el_residual")
    if profile.a <= 0:
        raise InvalidInputError("el_residual: a must be positive")
    u = profile.u
    upp = finite_diff(u, profile.h, order=2)
    return float(np.max(np.abs(upp - profile.a**2 * u)[1:-1]))


# arc-length width of the recomputed-curvature stencil, in units of 1/a
SAMPLED_EL_SPAN = 0.01


def sampled_el_residual(curve: PlanarCurve, a: float) -> float:
    """
    Euler-Lagrange residual of a curve whose kappa was recomputed from coordinates.

    Recomputed kappa already carries a second difference, so u'' is taken
    over a stride of about SAMPLED_EL_SPAN / a in arc length and the two end
    samples, where one-sided stencils were used, are left out.

    Args:
        curve: Uniformly sampled curve, at least 16 samples
        a: Energy parameter (> 0)

    Returns:
        Max |u'' - a^2 u| over the strided interior samples
    """
    if curve.n < MIN_PROFILE_SAMPLES:
        raise InvalidInputError(f"sampled_el_residual: need at least {MIN_PROFILE_SAMPLES} samples, got {curve.n}")
    if a <= 0:
        raise InvalidInputError("sampled_el_residual: a must be positive")
    stride = max(1, int(SAMPLED_EL_SPAN / (a * curve.h)))
    idx = np.arange(1, curve.n - 1, stride)
    if idx.size < 3:
        raise InvalidInputError(f"sampled_el_residual: curve too short for a stride of {stride} samples")
    kappa = curve.kappa[idx]
    u = kappa / np.sqrt(kappa**2 + a**2)
    step = stride * curve.h
    upp = (u[2:] - 2.0 * u[1:-1] + u[:-2]) / step**2
    logger.debug("sampled EL residual: stride %d over %d samples", stride, curve.n)
    return float(np.max(np.abs(upp - a**2 * u[1:-1])))


def killing_field_J(profile: CurvatureProfile) -> Tuple[np.ndarray, np.ndarray]:
    """
    Frame components of the Killing field J along the curve.

    Returns:
        (tangential, normal): -a^2 / sqrt(kappa^2 + a^2) and d/ds(u)
    """
    _require_samples(profile, "killing_field_J")
    normal = finite_diff(profile.u, profile.h)
    tangential = -profile.a**2 / np.sqrt(profile.kappa**2 + profile.a**2)
    return tangential, normal


def killing_norm_defect(profile: CurvatureProfile) -> float:
    """Max deviation of |J|^2 from the profile's delta."""
    tangential, normal = killing_field_J(profile)
    return float(np.max(np.abs(tangential**2 + normal**2 - profile.delta)))


def fit_delta(profile: CurvatureProfile) -> float:
    """
    Least-squares first-integral constant from the samples alone.

    The first integral is affine in delta, so the fit is closed form.
    """
    _require_samples(profile, "fit_delta")
    a = profile.a
    kp2 = kappa_derivative(profile)[1:-1]**2
    w = profile.kappa[1:-1]**2 + a**2
    coef = w**3 / a**4
    target = kp2 + w**2
    return float(np.dot(coef, target) / np.dot(coef, coef))


def _sign_changes(values: np.ndarray) -> Tuple[int, list]:
    signs = np.sign(values)
    idx = np.flatnonzero(signs)
    flips = idx[1:][signs[idx[1:]] != signs[idx[:-1]]]
    return int(flips.size), flips.tolist()


def shape_summary(profile: CurvatureProfile) -> Dict:
    """
    Count inflections (sign changes of kappa) and vertices (of kappa').

    Returns:
        Dictionary with the counts and the arc length of each change
    """
    _require_samples(profile, "shape_summary")
    n_infl, infl = _sign_changes(profile.kappa)
    n_vert, vert = _sign_changes(kappa_derivative(profile))
    return {
        "kappa_sign_changes": n_infl,
        "kappa_prime_sign_changes": n_vert,
        "inflection_s": [float(profile.s[i]) for i in infl],
        "vertex_s": [float(profile.s[i]) for i in vert],
    }


def theta_energy(curve: PlanarCurve, a: float) -> float:
    """Trapezoid value of the integral of sqrt(kappa^2 + a^2) ds."""
    return float(integrate_samples(np.sqrt(curve.kappa**2 + a**2), curve.h)[-1])
