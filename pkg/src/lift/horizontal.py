"""Horizontal lifts of planar curves to R^2 x S^1."""
import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import InvalidInputError
from ..geometry.curves import GRID_RTOL, PlanarCurve, _frozen

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class LiftedCurve:
    """
    Sampled curve (x, y, theta) in R^2 x S^1.

    Attributes:
        t: Increasing parameter samples
        x: Planar x coordinates
        y: Planar y coordinates
        theta: Fiber angle, a continuous real lift
    """

    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    theta: np.ndarray

    def __post_init__(self):
        arrays = {name: np.asarray(getattr(self, name), dtype=float) for name in ("t", "x", "y", "theta")}
        t = arrays["t"]
        if t.ndim != 1 or t.size < 2:
            raise InvalidInputError(f"LiftedCurve: need at least 2 samples, got shape {t.shape}")
        for name, arr in arrays.items():
            if arr.shape != t.shape:
                raise InvalidInputError(f"LiftedCurve: {name} has shape {arr.shape}, expected {t.shape}")
            if not np.all(np.isfinite(arr)):
                raise InvalidInputError(f"LiftedCurve: {name} contains non-finite values")
        if np.any(np.diff(t) <= 0):
            raise InvalidInputError("LiftedCurve: parameter samples must be strictly increasing")
        if np.any(np.hypot(np.diff(arrays["x"]), np.diff(arrays["y"])) <= 0):
            raise InvalidInputError("LiftedCurve: planar projection is not regular")
        for name, arr in arrays.items():
            object.__setattr__(self, name, _frozen(arr))

    @property
    def n(self) -> int:
        return self.t.size

    @property
    def winding(self) -> int:
        """Whole turns of the fiber angle between the first and last sample."""
        return int(round((self.theta[-1] - self.theta[0]) / TWO_PI))

    def reduced_theta(self) -> np.ndarray:
        """Theta reduced to [0, 2 pi)."""
        return np.mod(self.theta, TWO_PI)

    def sidecar(self) -> dict:
        """Metadata needed to rebuild the continuous theta from reduced values."""
        return {"winding": self.winding, "start_turns": int(math.floor(self.theta[0] / TWO_PI))}

    @classmethod
    def from_reduced(cls, t, x, y, theta_mod, start_turns: int = 0) -> "LiftedCurve":
        """Rebuild a lifted curve from serialized theta in [0, 2 pi)."""
        theta = np.unwrap(np.asarray(theta_mod, dtype=float)) + TWO_PI * start_turns
        return cls(t=t, x=x, y=y, theta=theta)


def lift(c: PlanarCurve) -> LiftedCurve:
    """
    Horizontal lift of a planar curve; theta is the curve's tangent angle.

    Args:
        c: Regularly sampled planar curve

    Returns:
        LiftedCurve with t = s and x, y copied
    """
    return LiftedCurve(t=c.s, x=c.x, y=c.y, theta=c.theta)


def _uniform_step(t: np.ndarray):
    h = (t[-1] - t[0]) / (t.size - 1)
    if np.max(np.abs(np.diff(t) - h)) <= GRID_RTOL * max(h, np.max(np.abs(t))):
        return float(h)
    return None


def project(l: LiftedCurve) -> PlanarCurve:
    """
    Planar projection with theta and kappa recomputed from (x, y).

    The recomputed theta is shifted by whole turns to start on the same sheet
    as the fiber coordinate.

    Args:
        l: Lifted curve with at least 5 samples

    Returns:
        PlanarCurve; s = t when t is uniform, else the mean chord grid
    """
    points = np.column_stack((l.x, l.y))
    h = _uniform_step(l.t)
    curve = PlanarCurve.from_points(points, s0=float(l.t[0]) if h else 0.0, h=h)
    turns = round((l.theta[0] - curve.theta[0]) / TWO_PI)
    if turns:
        curve = PlanarCurve(s=curve.s, points=curve.points, theta=curve.theta + TWO_PI * turns, kappa=curve.kappa)
    return curve


def _midpoint_theta(l: LiftedCurve) -> np.ndarray:
    return 0.5 * (l.theta[:-1] + l.theta[1:])


def horizontality_residual(l: LiftedCurve) -> float:
    """
    Max of |sin(theta) dx - cos(theta) dy| / dt over the segments.

    Theta is taken at the segment midpoint (mean of the endpoint values).
    """
    dx, dy = np.diff(l.x), np.diff(l.y)
    mid = _midpoint_theta(l)
    defect = np.abs(np.sin(mid) * dx - np.cos(mid) * dy)
    return float(np.max(defect / np.diff(l.t)))


def sr_length(l: LiftedCurve, a: float) -> float:
    """
    Sub-Riemannian length with the planar direction weighted by a.

    Sum over segments of sqrt(a^2 |dp|^2 + dtheta^2).
    """
    if a <= 0:
        raise InvalidInputError(f"sr_length: a must be positive, got {a}")
    dp2 = np.diff(l.x) ** 2 + np.diff(l.y) ** 2
    dtheta = np.diff(l.theta)
    return float(np.sum(np.sqrt(a**2 * dp2 + dtheta**2)))


def horizontal_vertical_split(l: LiftedCurve, a: float) -> Tuple[float, float]:
    """(a * planar length, total fiber rotation) of a lifted curve."""
    if a <= 0:
        raise InvalidInputError(f"horizontal_vertical_split: a must be positive, got {a}")
    planar = a * float(np.sum(np.hypot(np.diff(l.x), np.diff(l.y))))
    fiber = float(np.sum(np.abs(np.diff(l.theta))))
    return planar, fiber
