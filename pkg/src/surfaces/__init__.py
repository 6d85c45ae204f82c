"""Constant negative curvature surfaces of revolution."""
from .obj_export import export_obj, parse_obj, triangle_faces
from .revolution import (
    RevolutionSurface,
    SurfaceType,
    angle_grid,
    binormal_speed,
    classify,
    evolve,
    gaussian_curvature,
    surface_metadata,
    verify_profile_el,
)

__all__ = [
    "export_obj",
    "parse_obj",
    "triangle_faces",
    "RevolutionSurface",
    "SurfaceType",
    "angle_grid",
    "binormal_speed",
    "classify",
    "evolve",
    "gaussian_curvature",
    "surface_metadata",
    "verify_profile_el",
]
