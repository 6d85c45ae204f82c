"""Rotational surfaces of constant negative Gaussian curvature swept by binormal evolution."""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ..errors import InvalidInputError, NotApplicableError
from ..extremal.profiles import CurvatureProfile, ExtremalSpec, Family, killing_norm_sq
from ..extremal.reconstruct import curve_from_quadrature
from ..extremal.residuals import sampled_el_residual
from ..geometry.core import finite_diff
from ..geometry.curves import PlanarCurve, _frozen

logger = logging.getLogger(__name__)

MIN_PROFILE_SAMPLES = 32
MIN_ANGLE_SAMPLES = 8
# interior radii at or below this fraction of max r count as touching the axis
AXIS_RTOL = 1e-12


class SurfaceType(Enum):
    CONIC = "conic"
    HYPERBOLIC = "hyperbolic"
    PSEUDOSPHERE = "pseudosphere"


_SURFACE_OF_FAMILY = {
    Family.SINH: SurfaceType.CONIC,
    Family.COSH: SurfaceType.HYPERBOLIC,
    Family.EXP: SurfaceType.PSEUDOSPHERE,
}


def classify(spec: ExtremalSpec) -> SurfaceType:
    """Surface type swept by the extremal of the given family."""
    return _SURFACE_OF_FAMILY[spec.family]


def angle_grid(n_angle: int, sector: float = 2 * math.pi) -> np.ndarray:
    """Uniform angles: [0, 2 pi) for a full turn, [0, sector] inclusive otherwise."""
    if n_angle < MIN_ANGLE_SAMPLES:
        raise InvalidInputError(f"need n_angle >= {MIN_ANGLE_SAMPLES}, got {n_angle}")
    if not (0 < sector <= 2 * math.pi):
        raise InvalidInputError(f"sector must lie in (0, 2 pi], got {sector}")
    if math.isclose(sector, 2 * math.pi):
        return 2 * math.pi * np.arange(n_angle) / n_angle
    return np.linspace(0.0, sector, n_angle)


@dataclass(frozen=True)
class RevolutionSurface:
    """
    Surface swept by rotating a meridian about the z axis.

    Attributes:
        meridian: Unit-speed profile with points (rho, z); rho is the signed
            radius, negative on the mirrored half of a conic profile
        angles: Rotation angles of the mesh columns
        a: Energy parameter of the generating extremal (0 for hand-built surfaces)
        delta: Killing-norm squared of the generating extremal
        angular_rate: Rotation angle per unit of evolution time
        closed: True when the angles cover a full turn
        spec: Generating parameters, None for hand-built surfaces
    """

    meridian: PlanarCurve
    angles: np.ndarray
    a: float = 0.0
    delta: float = math.nan
    angular_rate: float = math.nan
    closed: bool = True
    spec: Optional[ExtremalSpec] = None

    def __post_init__(self):
        angles = np.asarray(self.angles, dtype=float)
        if angles.ndim != 1 or angles.size < 2:
            raise InvalidInputError(f"RevolutionSurface: bad angle grid shape {angles.shape}")
        object.__setattr__(self, "angles", _frozen(angles))

    @property
    def profile_s(self) -> np.ndarray:
        return self.meridian.s

    @property
    def rho(self) -> np.ndarray:
        return self.meridian.x

    @property
    def r(self) -> np.ndarray:
        return np.abs(self.meridian.x)

    @property
    def z(self) -> np.ndarray:
        return self.meridian.y

    @property
    def n_s(self) -> int:
        return self.meridian.n

    @property
    def n_angle(self) -> int:
        return self.angles.size

    def mesh_points(self) -> np.ndarray:
        """(n_s, n_angle, 3) array of (r cos u, r sin u, z)."""
        r = self.r[:, None]
        cos_u, sin_u = np.cos(self.angles)[None, :], np.sin(self.angles)[None, :]
        z = np.broadcast_to(self.z[:, None], (self.n_s, self.n_angle))
        return np.stack((r * cos_u, r * sin_u, z), axis=-1)

    @classmethod
    def from_profile(cls, s, r, z, n_angle: int = MIN_ANGLE_SAMPLES, sector: float = 2 * math.pi) -> "RevolutionSurface":
        """
        Hand-built surface from radius and height samples on a uniform grid.

        Theta and kappa of the meridian are recomputed from the samples.
        """
        s = np.asarray(s, dtype=float)
        r = np.asarray(r, dtype=float)
        z = np.asarray(z, dtype=float)
        if np.any(r < 0):
            raise InvalidInputError("from_profile: radii must be non-negative")
        h = (s[-1] - s[0]) / (s.size - 1)
        r_prime, z_prime = finite_diff(r, h), finite_diff(z, h)
        theta = np.unwrap(np.arctan2(z_prime, r_prime))
        meridian = PlanarCurve(s=s, points=np.column_stack((r, z)), theta=theta, kappa=finite_diff(theta, h))
        return cls(
            meridian=meridian,
            angles=angle_grid(n_angle, sector),
            closed=math.isclose(sector, 2 * math.pi),
        )


def binormal_speed(profile: CurvatureProfile) -> np.ndarray:
    """|I| = |kappa| / sqrt(kappa^2 + a^2) per sample."""
    return np.abs(profile.u)


def evolve(
    spec: ExtremalSpec,
    n_s: int,
    n_angle: int,
    margin: Optional[float] = None,
    sector: float = 2 * math.pi,
    tail_kappa: float = 1e-3,
) -> RevolutionSurface:
    """
    Sweep the extremal's quadrature profile about the z axis.

    Args:
        spec: Extremal parameters
        n_s: Profile samples (>= 32; even for the sinh family so that the
            profile never samples the axis)
        n_angle: Angular samples (>= 8)
        margin: Distance kept from the domain ends
        sector: Swept angle; below 2 pi the mesh is left open
        tail_kappa: Exp family lower truncation

    Returns:
        RevolutionSurface with angular_rate = sqrt(delta)
    """
    if n_s < MIN_PROFILE_SAMPLES:
        raise InvalidInputError(f"evolve: need n_s >= {MIN_PROFILE_SAMPLES}, got {n_s}")
    if spec.family is Family.SINH and n_s % 2:
        raise InvalidInputError("evolve: conic profiles need an even n_s so that s = 0 is not sampled")
    angles = angle_grid(n_angle, sector)
    meridian = curve_from_quadrature(spec, n_s, margin=margin, tail_kappa=tail_kappa)
    delta = killing_norm_sq(spec)
    logger.debug(
        "evolve %s surface: n_s=%d n_angle=%d sector=%.6g",
        classify(spec).value, n_s, n_angle, sector,
    )
    return RevolutionSurface(
        meridian=meridian,
        angles=angles,
        a=spec.a,
        delta=delta,
        angular_rate=math.sqrt(delta),
        closed=math.isclose(sector, 2 * math.pi),
        spec=spec,
    )


def gaussian_curvature(surface: RevolutionSurface) -> np.ndarray:
    """
    K = -r''/r at the interior profile samples.

    r'' is taken on the signed radius, which is smooth through the axis.
    """
    if surface.n_s < MIN_PROFILE_SAMPLES:
        raise InvalidInputError(f"gaussian_curvature: need at least {MIN_PROFILE_SAMPLES} samples")
    rho = surface.rho
    interior = np.abs(rho[1:-1])
    if np.any(interior <= AXIS_RTOL * np.max(np.abs(rho))):
        bad = int(np.argmin(interior)) + 1
        raise InvalidInputError(f"gaussian_curvature: profile touches the axis at sample {bad}")
    rho_second = finite_diff(rho, surface.meridian.h, order=2)
    return -rho_second[1:-1] / rho[1:-1]


def verify_profile_el(curve: PlanarCurve, K: float) -> float:
    """
    Euler-Lagrange residual of a profile's curvature for a = sqrt(-K).

    Raises:
        InvalidInputError: K >= 0
        NotApplicableError: the profile is a geodesic
    """
    if K >= 0:
        raise InvalidInputError(f"verify_profile_el: K must be negative, got {K}")
    if np.max(np.abs(curve.kappa)) <= 1e-6:
        raise NotApplicableError("verify_profile_el: profile is a geodesic")
    a = math.sqrt(-K)
    return sampled_el_residual(curve, a)


def surface_metadata(surface: RevolutionSurface) -> dict:
    """Summary written next to an exported mesh."""
    r = surface.r
    meta = {
        "a": surface.a,
        "delta": surface.delta,
        "angular_rate": surface.angular_rate,
        "n_s": surface.n_s,
        "n_angle": surface.n_angle,
        "closed": surface.closed,
        "r_max": float(np.max(r)),
    }
    if surface.spec is not None:
        meta.update(surface.spec.to_dict())
        meta["surface_type"] = classify(surface.spec).value
    if surface.delta > 0:
        meta["r_bound"] = 1.0 / math.sqrt(surface.delta)
    if surface.a > 0:
        k_target = -surface.a**2
        K = gaussian_curvature(surface)
        meta["K_target"] = k_target
        meta["K_measured_max_err"] = float(np.max(np.abs(K - k_target)) / abs(k_target))
    return meta
