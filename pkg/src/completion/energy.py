"""Discrete Theta_a energy of a polyline, its numeric gradient and turning sums."""
import logging
import math

import numpy as np

from ..errors import InvalidInputError
from ..geometry.curves import Polyline, segment_angles, turning_angles

logger = logging.getLogger(__name__)

# vertices 0, 1, n-2 and n-1 carry the boundary data
CLAMPED_OFFSETS = (0, 1, -2, -1)


def _wrap_angle(angle: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    wrapped = math.remainder(angle, 2 * math.pi)
    return math.pi if wrapped == -math.pi else wrapped


def vertex_terms(vertices: np.ndarray, a: float) -> np.ndarray:
    """
    Energy carried by each vertex.

    Interior vertex i contributes sqrt(phi_i^2 + a^2 ds_i^2), where phi_i
    is its turning angle and ds_i the mean of the two adjacent segment
    lengths (kappa_i = phi_i / ds_i). Each endpoint contributes a times half
    its segment length.
    """
    seg = np.linalg.norm(np.diff(vertices, axis=0), axis=1)
    ds = 0.5 * (seg[:-1] + seg[1:])
    phi = turning_angles(vertices)
    terms = np.empty(vertices.shape[0])
    terms[1:-1] = np.sqrt(phi**2 + (a * ds) ** 2)
    terms[0] = 0.5 * a * seg[0]
    terms[-1] = 0.5 * a * seg[-1]
    return terms


def discrete_energy(p: Polyline, a: float) -> float:
    """
    Discrete Theta_a of a polyline.

    Args:
        p: Polyline with at least 3 vertices
        a: Energy parameter (>= 0)

    Returns:
        Sum of the per-vertex terms
    """
    if a < 0:
        raise InvalidInputError(f"discrete_energy: a must be >= 0, got {a}")
    return float(np.sum(vertex_terms(p.vertices, a)))


def free_mask(n: int) -> np.ndarray:
    """Boolean mask of the vertices the solver may move."""
    mask = np.ones(n, dtype=bool)
    mask[list(CLAMPED_OFFSETS)] = False
    return mask


def gradient_array(vertices: np.ndarray, a: float, displacement: float = 1e-7) -> np.ndarray:
    """
    Central-difference gradient of the energy, on a raw (n, 2) array.

    A vertex only enters its own term and its two neighbours', so vertices
    three apart are perturbed together and the local term changes are
    summed over each perturbed vertex's window.
    """
    n = vertices.shape[0]
    seg = np.linalg.norm(np.diff(vertices, axis=0), axis=1)
    eps = displacement * float(seg.mean())
    grad = np.zeros_like(vertices)
    free = free_mask(n)
    idx = np.arange(n)

    for color in range(3):
        movers = free & (idx % 3 == color)
        if not movers.any():
            continue
        for axis in range(2):
            plus = vertices.copy()
            minus = vertices.copy()
            plus[movers, axis] += eps
            minus[movers, axis] -= eps
            change = vertex_terms(plus, a) - vertex_terms(minus, a)
            window = np.zeros(n)
            window[1:-1] = change[:-2] + change[1:-1] + change[2:]
            grad[movers, axis] = window[movers] / (2.0 * eps)
    return grad


def discrete_gradient(p: Polyline, a: float, displacement: float = 1e-7) -> np.ndarray:
    """
    Per-vertex gradient of discrete_energy by central differences.

    Args:
        p: Polyline with at least 8 vertices
        a: Energy parameter (>= 0)
        displacement: Step as a fraction of the mean segment length

    Returns:
        (n, 2) array; rows of the clamped vertices are exactly zero
    """
    if p.n < 8:
        raise InvalidInputError(f"discrete_gradient: need at least 8 vertices, got {p.n}")
    if a < 0:
        raise InvalidInputError(f"discrete_gradient: a must be >= 0, got {a}")
    return gradient_array(p.vertices, a, displacement)


def total_turning(p: Polyline) -> float:
    """Sum of the signed turning angles at the interior vertices."""
    return float(np.sum(turning_angles(p.vertices)))


def winding_class(p: Polyline, theta0: float, theta1: float) -> int:
    """
    Integer m with  integral(kappa) = theta1 - theta0 + 2 pi m.

    The turning from theta0 onto the first segment and from the last segment
    onto theta1 is counted along with the interior turning.
    """
    alpha = segment_angles(p.vertices)
    turning = (
        _wrap_angle(alpha[0] - theta0)
        + total_turning(p)
        + _wrap_angle(theta1 - alpha[-1])
    )
    return int(round((turning - (theta1 - theta0)) / (2 * math.pi)))
