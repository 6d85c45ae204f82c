"""Wavefront OBJ export of revolution surface meshes."""
import io
import logging
from typing import Tuple

import numpy as np

from ..errors import InvalidInputError
from .revolution import RevolutionSurface

logger = logging.getLogger(__name__)


def triangle_faces(n_s: int, n_angle: int, closed: bool = True) -> np.ndarray:
    """
    1-based triangle indices of the profile-major grid.

    Each quad (i, j) is split along its (i, j)-(i+1, j+1) diagonal. A closed
    grid also gets the seam quads between the last and the first column.
    """
    cols = n_angle if closed else n_angle - 1
    i, j = np.meshgrid(np.arange(n_s - 1), np.arange(cols), indexing="ij")
    i, j = i.ravel(), j.ravel()
    j_next = (j + 1) % n_angle
    v00 = i * n_angle + j
    v01 = i * n_angle + j_next
    v10 = (i + 1) * n_angle + j
    v11 = (i + 1) * n_angle + j_next
    lower = np.column_stack((v00, v10, v11))
    upper = np.column_stack((v00, v11, v01))
    return np.stack((lower, upper), axis=1).reshape(-1, 3) + 1


def export_obj(surface: RevolutionSurface, digits: int = 9) -> bytes:
    """
    Serialize the surface mesh as OBJ text.

    Vertices are written profile-major with ``digits`` significant digits,
    followed by the triangle faces; the output depends only on the surface.

    Args:
        surface: Surface to export
        digits: Significant digits per coordinate

    Returns:
        UTF-8 encoded OBJ document
    """
    if digits < 1:
        raise InvalidInputError(f"export_obj: digits must be positive, got {digits}")
    points = surface.mesh_points().reshape(-1, 3)
    faces = triangle_faces(surface.n_s, surface.n_angle, surface.closed)

    buf = io.StringIO()
    buf.write(f"# revolution surface: {surface.n_s} x {surface.n_angle} grid\n")
    buf.write("o surface\n")
    np.savetxt(buf, points, fmt=f"v %.{digits}g %.{digits}g %.{digits}g")
    np.savetxt(buf, faces, fmt="f %d %d %d")
    logger.debug("OBJ: %d vertices, %d faces", points.shape[0], faces.shape[0])
    return buf.getvalue().encode("utf-8")


def parse_obj(data: bytes) -> Tuple[np.ndarray, np.ndarray]:
    """Read back the vertex and face arrays of an OBJ document (triangles only)."""
    vertices, faces = [], []
    for line in data.decode("utf-8").splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "v":
            vertices.append([float(p) for p in parts[1:4]])
        elif parts[0] == "f":
            faces.append([int(p.split("/")[0]) for p in parts[1:4]])
    return np.array(vertices, dtype=float).reshape(-1, 3), np.array(faces, dtype=int).reshape(-1, 3)
