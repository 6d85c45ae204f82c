"""Closed-form critical curves of Theta_a and their verifiers."""
from .profiles import (
    CurvatureProfile,
    ExtremalSpec,
    Family,
    boundary_blowup,
    curvature_profile,
    default_margin,
    domain,
    exp_tail_window,
    killing_norm_sq,
)
from .reconstruct import (
    curve_from_profile_quadrature,
    curve_from_quadrature,
    curve_from_turning_angle,
    quadrature_samples,
    unit_speed_residual,
)
from .residuals import (
    el_residual,
    first_integral_residual,
    fit_delta,
    kappa_derivative,
    sampled_el_residual,
    killing_field_J,
    killing_norm_defect,
    shape_summary,
    theta_energy,
)

__all__ = [
    "CurvatureProfile",
    "ExtremalSpec",
    "Family",
    "boundary_blowup",
    "curvature_profile",
    "default_margin",
    "domain",
    "exp_tail_window",
    "killing_norm_sq",
    "curve_from_profile_quadrature",
    "curve_from_quadrature",
    "curve_from_turning_angle",
    "quadrature_samples",
    "unit_speed_residual",
    "el_residual",
    "first_integral_residual",
    "fit_delta",
    "kappa_derivative",
    "sampled_el_residual",
    "killing_field_J",
    "killing_norm_defect",
    "shape_summary",
    "theta_energy",
]
