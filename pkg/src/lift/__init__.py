"""Lifts of planar curves to the unit tangent bundle."""
from .horizontal import (
    LiftedCurve,
    horizontal_vertical_split,
    horizontality_residual,
    lift,
    project,
    sr_length,
)

__all__ = [
    "LiftedCurve",
    "horizontal_vertical_split",
    "horizontality_residual",
    "lift",
    "project",
    "sr_length",
]
