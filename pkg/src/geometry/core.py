"""Numeric primitives on uniformly sampled data: quadrature, differences, resampling."""
import logging

import numpy as np
from scipy.integrate import cumulative_trapezoid

from ..errors import InvalidInputError
from .curves import Polyline

logger = logging.getLogger(__name__)


def _as_samples(values, min_count: int, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise InvalidInputError(f"{what}: expected a 1-d sample array, got shape {arr.shape}")
    if arr.size < min_count:
        raise InvalidInputError(f"{what}: need at least {min_count} samples, got {arr.size}")
    return arr


def _check_step(h: float):
    if not np.isfinite(h) or h <= 0:
        raise InvalidInputError(f"step must be positive and finite, got {h}")


def integrate_samples(values, h: float) -> np.ndarray:
    """
    Cumulative composite-trapezoid integral of uniformly spaced samples.

    Args:
        values: Integrand samples
        h: Sample spacing

    Returns:
        Array of the same length; first entry 0
    """
    arr = _as_samples(values, 2, "integrate_samples")
    _check_step(h)
    return cumulative_trapezoid(arr, dx=h, initial=0.0)


def finite_diff(values, h: float, order: int = 1) -> np.ndarray:
    """
    Derivative of uniformly spaced samples, second-order accurate everywhere.

    Central differences at interior points and one-sided second-order
    stencils at the two ends.

    Args:
        values: Samples
        h: Sample spacing
        order: 1 for the first derivative, 2 for the second

    Returns:
        Derivative samples, same length as the input
    """
    arr = _as_samples(values, 5, "finite_diff")
    _check_step(h)

    if order == 1:
        return np.gradient(arr, h, edge_order=2)
    if order == 2:
        out = np.empty_like(arr)
        out[1:-1] = (arr[2:] - 2.0 * arr[1:-1] + arr[:-2]) / h**2
        out[0] = (2.0 * arr[0] - 5.0 * arr[1] + 4.0 * arr[2] - arr[3]) / h**2
        out[-1] = (2.0 * arr[-1] - 5.0 * arr[-2] + 4.0 * arr[-3] - arr[-4]) / h**2
        return out
    raise InvalidInputError(f"finite_diff: order must be 1 or 2, got {order}")


def cumulative_length(vertices: np.ndarray) -> np.ndarray:
    """Cumulative chord length along an (n, 2) vertex array, starting at 0."""
    seg = np.linalg.norm(np.diff(vertices, axis=0), axis=1)
    return np.concatenate(([0.0], np.cumsum(seg)))


def resample_arclength(p: Polyline, n: int) -> Polyline:
    """
    Resample a polyline to ``n`` vertices equally spaced in arc length.

    Output vertices lie on the input polyline; both endpoints are kept.

    Args:
        p: Input polyline
        n: Number of output vertices (>= 3)

    Returns:
        Resampled polyline
    """
    if n < 3:
        raise InvalidInputError(f"resample_arclength: n must be >= 3, got {n}")

    acc = cumulative_length(p.vertices)
    total = acc[-1]
    if total <= 0:
        raise InvalidInputError("resample_arclength: polyline has zero length")

    targets = np.linspace(0.0, total, n)
    x = np.interp(targets, acc, p.vertices[:, 0])
    y = np.interp(targets, acc, p.vertices[:, 1])
    out = np.column_stack((x, y))
    # keep the endpoints bit-exact
    out[0] = p.vertices[0]
    out[-1] = p.vertices[-1]
    logger.debug("resampled polyline: %d -> %d vertices, length %.6g", p.n, n, total)
    return Polyline(out)
