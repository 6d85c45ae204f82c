"""Core curve types: uniformly sampled planar curves and polylines."""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import InvalidInputError

# relative tolerance on the arc-length step
GRID_RTOL = 1e-9


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.setflags(write=False)
    return out


def segment_angles(vertices: np.ndarray) -> np.ndarray:
    """Direction angle of each chord, unwrapped so consecutive jumps are < pi."""
    d = np.diff(vertices, axis=0)
    return np.unwrap(np.arctan2(d[:, 1], d[:, 0]))


def turning_angles(vertices: np.ndarray) -> np.ndarray:
    """Signed turning angle at each interior vertex, in (-pi, pi]."""
    d = np.diff(vertices, axis=0)
    a, b = d[:-1], d[1:]
    cross = a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]
    dot = a[:, 0] * b[:, 0] + a[:, 1] * b[:, 1]
    return np.arctan2(cross, dot)


@dataclass(frozen=True)
class Polyline:
    """Ordered planar vertices, at least three, with no repeated consecutive vertex."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2:
            raise InvalidInputError(f"Polyline: expected (n, 2) vertices, got shape {v.shape}")
        if v.shape[0] < 3:
            raise InvalidInputError(f"Polyline: need at least 3 vertices, got {v.shape[0]}")
        if not np.all(np.isfinite(v)):
            raise InvalidInputError("Polyline: vertices must be finite")
        seg = np.linalg.norm(np.diff(v, axis=0), axis=1)
        if np.any(seg <= 0):
            bad = int(np.argmin(seg))
            raise InvalidInputError(f"Polyline: degenerate segment between vertices {bad} and {bad + 1}")
        object.__setattr__(self, "vertices", _frozen(v))

    @property
    def n(self) -> int:
        return self.vertices.shape[0]

    def segment_lengths(self) -> np.ndarray:
        return np.linalg.norm(np.diff(self.vertices, axis=0), axis=1)

    def length(self) -> float:
        return float(self.segment_lengths().sum())


@dataclass(frozen=True)
class PlanarCurve:
    """
    Planar curve sampled on a uniform arc-length grid.

    Attributes:
        s: Arc-length samples, strictly increasing with uniform step h
        points: (n, 2) positions
        theta: Tangent angle per sample, continuous (no 2*pi jumps)
        kappa: Signed curvature per sample
    """

    s: np.ndarray
    points: np.ndarray
    theta: np.ndarray
    kappa: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float)
        pts = np.asarray(self.points, dtype=float)
        theta = np.asarray(self.theta, dtype=float)
        kappa = np.asarray(self.kappa, dtype=float)

        n = s.size
        if n < 2:
            raise InvalidInputError(f"PlanarCurve: need at least 2 samples, got {n}")
        if pts.shape != (n, 2) or theta.shape != (n,) or kappa.shape != (n,):
            raise InvalidInputError(
                f"PlanarCurve: shape mismatch s={s.shape} points={pts.shape} "
                f"theta={theta.shape} kappa={kappa.shape}"
            )
        for name, arr in (("s", s), ("points", pts), ("theta", theta), ("kappa", kappa)):
            if not np.all(np.isfinite(arr)):
                raise InvalidInputError(f"PlanarCurve: {name} contains non-finite values")

        ds = np.diff(s)
        h = (s[-1] - s[0]) / (n - 1)
        if h <= 0 or np.any(ds <= 0):
            raise InvalidInputError("PlanarCurve: arc-length samples must be strictly increasing")
        tol = GRID_RTOL * max(h, np.max(np.abs(s)))
        if np.max(np.abs(ds - h)) > tol:
            raise InvalidInputError("PlanarCurve: arc-length grid is not uniform")
        jumps = np.abs(np.diff(theta))
        if np.any(jumps >= np.pi):
            raise InvalidInputError(
                f"PlanarCurve: theta jumps by {jumps.max():.3f} rad; expected a continuous lift"
            )

        object.__setattr__(self, "s", _frozen(s))
        object.__setattr__(self, "points", _frozen(pts))
        object.__setattr__(self, "theta", _frozen(theta))
        object.__setattr__(self, "kappa", _frozen(kappa))

    @property
    def n(self) -> int:
        return self.s.size

    @property
    def h(self) -> float:
        return float((self.s[-1] - self.s[0]) / (self.n - 1))

    @property
    def x(self) -> np.ndarray:
        return self.points[:, 0]

    @property
    def y(self) -> np.ndarray:
        return self.points[:, 1]

    def speed_defect(self) -> float:
        """Max relative deviation of consecutive chord lengths from the step h."""
        chords = np.linalg.norm(np.diff(self.points, axis=0), axis=1)
        return float(np.max(np.abs(chords / self.h - 1.0)))

    def to_polyline(self) -> Polyline:
        return Polyline(self.points)

    @classmethod
    def from_points(cls, points, s0: float = 0.0, h: Optional[float] = None) -> "PlanarCurve":
        """
        Build a curve from positions alone, recomputing theta and kappa.

        Theta at an interior sample bisects the two adjacent chords; at the
        ends the neighbouring turning angle is extrapolated. Kappa is the
        second-order derivative of theta.

        Args:
            points: (n, 2) positions, n >= 5
            s0: Arc length of the first sample
            h: Arc-length step; defaults to the mean chord length

        Returns:
            PlanarCurve
        """
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 5:
            raise InvalidInputError(f"from_points: need (n >= 5, 2) points, got shape {pts.shape}")
        chords = np.linalg.norm(np.diff(pts, axis=0), axis=1)
        if np.any(chords <= 0):
            raise InvalidInputError("from_points: repeated consecutive points")

        n = pts.shape[0]
        if h is None:
            h = float(chords.sum() / (n - 1))
        alpha = segment_angles(pts)
        theta = np.empty(n)
        theta[1:-1] = 0.5 * (alpha[:-1] + alpha[1:])
        theta[0] = alpha[0] - 0.5 * (alpha[1] - alpha[0])
        theta[-1] = alpha[-1] + 0.5 * (alpha[-1] - alpha[-2])
        kappa = np.gradient(theta, h, edge_order=2)
        s = s0 + h * np.arange(n)
        return cls(s=s, points=pts, theta=theta, kappa=kappa)
