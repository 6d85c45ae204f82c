"""Gradient-descent solver for the curve completion boundary-value problem."""
import logging
import math
from dataclasses import asdict, dataclass, field
from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from scipy.linalg import solveh_banded

from ..errors import ConvergenceError, InvalidInputError, NotApplicableError, TrivialProblemError
from ..geometry.core import resample_arclength
from ..geometry.curves import PlanarCurve, Polyline, segment_angles
from .energy import winding_class
from .fit import MIN_FIT_SAMPLES, fit_first_integral

logger = logging.getLogger(__name__)

# dense samples per output vertex for the initial cubic
INIT_OVERSAMPLING = 8
MAX_HALVINGS = 60
MAX_RESTORE = 20
# endpoint-constraint tolerance per chord
DEFECT_TOL = 1e-14
# cubic extrapolation from the four nearest interior samples
END_EXTRAPOLATION = np.array([4.0, -6.0, 4.0, -1.0])


class CompletionProblem(BaseModel):
    """Boundary data and solver knobs for one completion."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    p: Tuple[float, float]
    q: Tuple[float, float]
    theta0: float
    theta1: float
    a: float = Field(ge=0)
    nodes: int = Field(default=128, ge=8)
    max_iters: int = Field(default=2000, ge=1)
    step0: float = Field(default=1.0, gt=0)
    tol: float = Field(default=1e-10, gt=0)
    metric: Literal["sobolev", "euclidean"] = "sobolev"

    @model_validator(mode="after")
    def _distinct_endpoints(self):
        if self.p == self.q:
            raise ValueError("p and q must be distinct")
        for name in ("p", "q", "theta0", "theta1", "a"):
            if not np.all(np.isfinite(getattr(self, name))):
                raise ValueError(f"{name} must be finite")
        return self

    @classmethod
    def from_dict(cls, data: dict) -> "CompletionProblem":
        """Validate a JSON-style mapping, reporting problems as InvalidInputError."""
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            raise InvalidInputError(f"invalid completion problem: {e}") from e


@dataclass
class SolverReport:
    """
    Outcome of one solve.

    gradient_norm is the metric norm of the projected gradient at the final
    iterate, the quantity compared against the tolerance.
    """

    iterations: int
    energy_history: List[float] = field(default_factory=list)
    final_energy: float = math.nan
    gradient_norm: float = math.nan
    fitted_delta: Optional[float] = None
    first_integral_residual: Optional[float] = None
    converged: bool = False
    winding: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def hermite_initial(problem: CompletionProblem) -> np.ndarray:
    """
    Cubic Hermite blend between the endpoint rays, resampled to uniform arc length.

    Tangent magnitudes equal |q - p|, so the construction commutes with
    rigid motions and scaling.
    """
    p = np.asarray(problem.p, dtype=float)
    q = np.asarray(problem.q, dtype=float)
    chord = float(np.linalg.norm(q - p))
    t0 = chord * np.array([math.cos(problem.theta0), math.sin(problem.theta0)])
    t1 = chord * np.array([math.cos(problem.theta1), math.sin(problem.theta1)])

    t = np.linspace(0.0, 1.0, INIT_OVERSAMPLING * problem.nodes)[:, None]
    h00 = 2 * t**3 - 3 * t**2 + 1
    h10 = t**3 - 2 * t**2 + t
    h01 = -2 * t**3 + 3 * t**2
    h11 = t**3 - t**2
    dense = h00 * p + h10 * t0 + h01 * q + h11 * t1
    dense[0], dense[-1] = p, q
    keep = np.concatenate(([True], np.linalg.norm(np.diff(dense, axis=0), axis=1) > 0))
    return clamp_boundary(resample_arclength(Polyline(dense[keep]), problem.nodes).vertices.copy(), problem)


def clamp_boundary(vertices: np.ndarray, problem: CompletionProblem) -> np.ndarray:
    """Place vertices 1 and n-2 on the boundary rays at the mean segment length."""
    seg = np.linalg.norm(np.diff(vertices, axis=0), axis=1)
    h0 = float(seg.mean())
    vertices[0] = problem.p
    vertices[-1] = problem.q
    vertices[1] = vertices[0] + h0 * np.array([math.cos(problem.theta0), math.sin(problem.theta0)])
    vertices[-2] = vertices[-1] - h0 * np.array([math.cos(problem.theta1), math.sin(problem.theta1)])
    return vertices


def chord_angles(vertices: np.ndarray, problem: CompletionProblem) -> np.ndarray:
    """
    Chord directions of an initial polyline, pinned to the boundary data.

    The first angle is theta0 exactly and the last is theta1 shifted by the
    multiple of 2 pi the polyline already winds by.
    """
    alpha = segment_angles(vertices)
    alpha = alpha + (problem.theta0 - alpha[0])
    alpha[0] = problem.theta0
    turns = round((alpha[-1] - problem.theta1) / (2 * math.pi))
    alpha[-1] = problem.theta1 + 2 * math.pi * turns
    return alpha


class ChordSystem:
    """
    Equal-chord polylines from p to q, parametrized by their chord angles.

    With every chord of length h the polyline ends at p + h * sum(e(alpha)),
    so reaching q fixes h = rho / sum(cos(alpha - beta)) and imposes
    sum(sin(alpha - beta)) = 0, where q - p = rho * e(beta). The first and
    last angles are held fixed; the others are free.
    """

    def __init__(self, problem: CompletionProblem):
        self.p = np.asarray(problem.p, dtype=float)
        self.q = np.asarray(problem.q, dtype=float)
        d = self.q - self.p
        self.rho = float(np.hypot(d[0], d[1]))
        self.beta = math.atan2(d[1], d[0])
        self.a = problem.a
        self.metric = problem.metric
        bands = np.zeros((2, problem.nodes - 3))
        bands[0, 1:] = -1.0
        bands[1, :] = 2.0
        self._bands = bands

    def span(self, alpha: np.ndarray) -> float:
        return float(np.sum(np.cos(alpha - self.beta)))

    def defect(self, alpha: np.ndarray) -> float:
        return float(np.sum(np.sin(alpha - self.beta)))

    def step_length(self, alpha: np.ndarray) -> float:
        return self.rho / self.span(alpha)

    def admissible(self, alpha: np.ndarray) -> bool:
        return bool(
            np.all(np.isfinite(alpha))
            and self.span(alpha) > 0
            and np.all(np.abs(np.diff(alpha)) < math.pi)
        )

    def energy(self, alpha: np.ndarray) -> float:
        h = self.step_length(alpha)
        return float(np.sum(np.hypot(np.diff(alpha), self.a * h)) + self.a * h)

    def energy_change(self, alpha: np.ndarray, trial: np.ndarray) -> float:
        """energy(trial) - energy(alpha), summed term by term without cancellation."""
        a = self.a
        h, h_t = self.step_length(alpha), self.step_length(trial)
        c, c_t = self.span(alpha), self.span(trial)
        mid = 0.5 * (alpha + trial) - self.beta
        dh = self.rho * float(np.sum(2.0 * np.sin(mid) * np.sin(0.5 * (trial - alpha)))) / (c * c_t)
        phi, phi_t = np.diff(alpha), np.diff(trial)
        dphi = np.diff(trial - alpha)
        terms = np.hypot(phi, a * h)
        terms_t = np.hypot(phi_t, a * h_t)
        dterms = (dphi * (phi + phi_t) + a * a * dh * (h + h_t)) / (terms + terms_t)
        return float(np.sum(dterms) + a * dh)

    def gradient(self, alpha: np.ndarray) -> np.ndarray:
        """Energy gradient with respect to the free angles, h following the endpoint."""
        a = self.a
        h = self.step_length(alpha)
        phi = np.diff(alpha)
        terms = np.hypot(phi, a * h)
        u = phi / terms
        energy_h = float(np.sum(a * a * h / terms)) + a
        return u[:-1] - u[1:] + energy_h * (h * h / self.rho) * np.sin(alpha[1:-1] - self.beta)

    def defect_gradient(self, alpha: np.ndarray) -> np.ndarray:
        return np.cos(alpha[1:-1] - self.beta)

    def precondition(self, values: np.ndarray, h: float) -> np.ndarray:
        """
        Apply the inverse metric.

        The Sobolev metric is the discrete Dirichlet form on the free angles,
        scaled by a * h.
        """
        if self.metric == "euclidean":
            return 0.25 * self.a * h * values
        return self.a * h * solveh_banded(self._bands, values)

    def restore(self, alpha: np.ndarray) -> Optional[np.ndarray]:
        """Newton iteration back onto the endpoint constraint, None when it fails."""
        out = alpha.copy()
        tol = DEFECT_TOL * alpha.size
        for _ in range(MAX_RESTORE):
            if not self.admissible(out):
                return None
            c = self.defect(out)
            if abs(c) <= tol:
                return out
            h = self.step_length(out)
            w = self.precondition(self.defect_gradient(out), h)
            out[1:-1] -= w * (c / float(np.dot(self.defect_gradient(out), w)))
        return out if self.admissible(out) and abs(self.defect(out)) <= tol else None

    def descent(self, alpha: np.ndarray) -> Tuple[np.ndarray, float]:
        """
        Preconditioned gradient projected onto the constraint tangent.

        Returns:
            (direction, decrement) with decrement the metric norm of the
            projected gradient
        """
        h = self.step_length(alpha)
        grad = self.gradient(alpha)
        normal = self.defect_gradient(alpha)
        direction = self.precondition(grad, h)
        w = self.precondition(normal, h)
        direction = direction - w * (float(np.dot(normal, direction)) / float(np.dot(normal, w)))
        return direction, math.sqrt(max(float(np.dot(grad, direction)), 0.0))

    def vertices(self, alpha: np.ndarray) -> np.ndarray:
        h = self.step_length(alpha)
        chords = np.column_stack((np.cos(alpha), np.sin(alpha)))
        out = np.empty((alpha.size + 1, 2))
        out[0] = self.p
        out[1:] = self.p + h * np.cumsum(chords, axis=0)
        out[-1] = self.q
        return out

    def curve(self, alpha: np.ndarray) -> PlanarCurve:
        """
        Sampled curve of an equal-chord polyline.

        Theta bisects adjacent chords and is exact at the ends; kappa is the
        turning angle over h, extrapolated cubically to the endpoints.
        """
        h = self.step_length(alpha)
        n = alpha.size + 1
        theta = np.empty(n)
        theta[0], theta[-1] = alpha[0], alpha[-1]
        theta[1:-1] = 0.5 * (alpha[:-1] + alpha[1:])
        kappa = np.empty(n)
        kappa[1:-1] = np.diff(alpha) / h
        kappa[0] = np.dot(END_EXTRAPOLATION, kappa[1:5])
        kappa[-1] = np.dot(END_EXTRAPOLATION, kappa[-2:-6:-1])
        return PlanarCurve(s=h * np.arange(n), points=self.vertices(alpha), theta=theta, kappa=kappa)


def complete(problem: CompletionProblem) -> Tuple[PlanarCurve, SolverReport]:
    """
    Minimize the discrete Theta_a over polylines with the given boundary data.

    Iterates are equal-chord polylines, so every iterate is already uniformly
    resampled. Each step moves the free chord angles along the projected
    Sobolev gradient, returns to the endpoint constraint and is accepted
    only when the energy drops. The solve stops once the metric norm of the
    projected gradient falls below problem.tol.

    Args:
        problem: Boundary data and solver knobs

    Returns:
        (curve, report); the curve is built from the final iterate and the
        report carries the energy history and the first-integral fit

    Raises:
        TrivialProblemError: a = 0, where every curve in a winding class
            has the same total curvature
        ConvergenceError: the initial polyline cannot be brought onto the
            endpoint constraint
    """
    if problem.a == 0:
        raise TrivialProblemError(
            "a = 0: total curvature is constant on each winding class, nothing to minimize"
        )

    system = ChordSystem(problem)
    alpha = system.restore(chord_angles(hermite_initial(problem), problem))
    if alpha is None:
        raise ConvergenceError("initial polyline could not be joined to q with equal chords")

    history = [system.energy(alpha)]
    step = problem.step0
    iterations = 0
    direction, decrement = system.descent(alpha)

    while iterations < problem.max_iters and decrement > problem.tol:
        accepted = False
        for _ in range(MAX_HALVINGS):
            trial = alpha.copy()
            trial[1:-1] -= step * direction
            trial = system.restore(trial)
            if trial is not None:
                change = system.energy_change(alpha, trial)
                if change < 0:
                    accepted = True
                    break
            step *= 0.5
        iterations += 1
        if not accepted:
            logger.debug("line search stalled at iteration %d (decrement %.3e)", iterations, decrement)
            break

        alpha = trial
        history.append(history[-1] + change)
        step = min(2.0 * step, problem.step0)
        direction, decrement = system.descent(alpha)
        if iterations % 100 == 0:
            logger.debug("iteration %d: energy %.12g, decrement %.3e, step %.3e",
                         iterations, history[-1], decrement, step)

    converged = decrement <= problem.tol
    curve = system.curve(alpha)
    report = SolverReport(
        iterations=iterations,
        energy_history=history,
        final_energy=history[-1],
        gradient_norm=decrement,
        converged=converged,
        winding=winding_class(curve.to_polyline(), problem.theta0, problem.theta1),
    )

    if curve.n < MIN_FIT_SAMPLES:
        logger.debug("%d nodes: too few for the first-integral fit", curve.n)
    else:
        try:
            report.fitted_delta, report.first_integral_residual = fit_first_integral(curve, problem.a)
        except NotApplicableError:
            logger.debug("solution is a geodesic; first-integral fit skipped")

    if not converged:
        logger.warning(
            "completion did not converge in %d iterations (decrement %.3e > tol %.3e)",
            iterations, decrement, problem.tol,
        )
    else:
        logger.debug("converged in %d iterations, energy %.15g", iterations, history[-1])
    return curve, report
