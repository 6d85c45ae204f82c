"""Curve completion by descent on the discrete Theta_a energy."""
from .energy import discrete_energy, discrete_gradient, total_turning, winding_class
from .fit import fit_first_integral
from .solver import CompletionProblem, SolverReport, complete

__all__ = [
    "discrete_energy",
    "discrete_gradient",
    "total_turning",
    "winding_class",
    "fit_first_integral",
    "CompletionProblem",
    "SolverReport",
    "complete",
]
