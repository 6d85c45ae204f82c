"""Two independent reconstructions of an extremal from its curvature."""
import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..errors import InvalidInputError
from ..geometry.core import finite_diff, integrate_samples
from ..geometry.curves import PlanarCurve
from .profiles import MIN_PROFILE_SAMPLES, CurvatureProfile, ExtremalSpec, curvature_profile

logger = logging.getLogger(__name__)


def quadrature_samples(profile: CurvatureProfile) -> Tuple[np.ndarray, np.ndarray]:
    """
    Radial coordinate and axial speed of the profile in the (r, z) half-plane.

    r = u / sqrt(delta) is signed (|r| = |kappa| / sqrt(delta (kappa^2 + a^2)));
    z' = -a^2 / sqrt(delta (kappa^2 + a^2)).
    """
    if profile.delta <= 0:
        raise InvalidInputError(f"quadrature needs delta > 0, got {profile.delta}")
    root_delta = math.sqrt(profile.delta)
    r = profile.u / root_delta
    z_prime = -profile.a**2 / (root_delta * np.sqrt(profile.kappa**2 + profile.a**2))
    return r, z_prime


def unit_speed_residual(profile: CurvatureProfile) -> float:
    """Max |r'^2 + z'^2 - 1| with r' by finite_diff and z' from the quadrature integrand."""
    r, z_prime = quadrature_samples(profile)
    r_prime = finite_diff(r, profile.h)
    return float(np.max(np.abs(r_prime**2 + z_prime**2 - 1.0)))


# one-sided second-derivative stencil whose leading error, h^2/12 f'''', matches the central one
END_STENCIL = np.array([4.0, -14.0, 20.0, -15.0, 6.0, -1.0])


def _second_derivative(values: np.ndarray, h: float) -> np.ndarray:
    """
    Second derivative with central differences inside and matched ends.

    The truncation error is the same smooth h^2/12 f'''' at every sample, so
    curvature recomputed from it can be differenced again.
    """
    out = finite_diff(values, h, order=2)
    out[0] = np.dot(END_STENCIL, values[:6]) / h**2
    out[-1] = np.dot(END_STENCIL, values[:-7:-1]) / h**2
    return out


def curve_from_quadrature(
    spec: ExtremalSpec,
    n: int,
    margin: Optional[float] = None,
    tail_kappa: float = 1e-3,
) -> PlanarCurve:
    """
    Coordinates (r(s), z(s)) of the extremal by quadrature.

    Theta is the direction of (r', z') and kappa is recomputed from the
    samples as -r''/z' (unit speed), so neither is copied from the profile.

    Args:
        spec: Extremal parameters
        n: Number of samples
        margin: Distance kept from the domain ends, see curvature_profile
        tail_kappa: Exp family lower truncation

    Returns:
        PlanarCurve with points (r, z), z(s_min) = 0
    """
    profile = curvature_profile(spec, n, margin=margin, tail_kappa=tail_kappa)
    return curve_from_profile_quadrature(profile)


def curve_from_profile_quadrature(profile: CurvatureProfile) -> PlanarCurve:
    """Quadrature reconstruction for an already sampled profile."""
    h = profile.h
    r, z_prime = quadrature_samples(profile)
    z = integrate_samples(z_prime, h)
    r_prime = finite_diff(r, h)
    r_second = _second_derivative(r, h)
    theta = np.unwrap(np.arctan2(z_prime, r_prime))
    kappa = -r_second / z_prime
    return PlanarCurve(s=profile.s, points=np.column_stack((r, z)), theta=theta, kappa=kappa)


def curve_from_turning_angle(profile: CurvatureProfile) -> PlanarCurve:
    """
    Curve with the given curvature, starting at the origin heading along +x.

    theta = integral of kappa, points = (integral of cos theta, integral of sin theta).
    """
    if profile.n < MIN_PROFILE_SAMPLES:
        raise InvalidInputError(
            f"curve_from_turning_angle: need at least {MIN_PROFILE_SAMPLES} samples, got {profile.n}"
        )
    h = profile.h
    theta = integrate_samples(profile.kappa, h)
    x = integrate_samples(np.cos(theta), h)
    y = integrate_samples(np.sin(theta), h)
    return PlanarCurve(s=profile.s, points=np.column_stack((x, y)), theta=theta, kappa=profile.kappa)
