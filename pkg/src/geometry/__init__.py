"""Shared numeric primitives and curve types."""
from .curves import PlanarCurve, Polyline, segment_angles, turning_angles
from .core import cumulative_length, finite_diff, integrate_samples, resample_arclength

__all__ = [
    "PlanarCurve",
    "Polyline",
    "segment_angles",
    "turning_angles",
    "cumulative_length",
    "finite_diff",
    "integrate_samples",
    "resample_arclength",
]
