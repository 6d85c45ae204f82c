"""First-integral fit used to validate completed curves."""
import logging
from typing import Tuple

import numpy as np

from ..errors import InvalidInputError, NotApplicableError
from ..extremal.profiles import CurvatureProfile
from ..extremal.residuals import el_residual, first_integral_residual, fit_delta
from ..geometry.curves import PlanarCurve

logger = logging.getLogger(__name__)

MIN_FIT_SAMPLES = 32
GEODESIC_KAPPA = 1e-6


def fit_first_integral(curve: PlanarCurve, a: float) -> Tuple[float, float]:
    """
    Least-squares first-integral constant of a sampled curve.

    The first integral is implied by any delta when kappa is constant, so a
    curve of constant nonzero curvature is scored by its Euler-Lagrange
    residual instead.

    Args:
        curve: Uniformly sampled curve, at least 32 samples
        a: Energy parameter (> 0)

    Returns:
        (delta_hat, residual) with residual the max relative defect at delta_hat

    Raises:
        NotApplicableError: the curve is a geodesic (max |kappa| <= 1e-6)
    """
    if curve.n < MIN_FIT_SAMPLES:
        raise InvalidInputError(f"fit_first_integral: need at least {MIN_FIT_SAMPLES} samples, got {curve.n}")
    if a <= 0:
        raise InvalidInputError(f"fit_first_integral: a must be positive, got {a}")
    kappa = curve.kappa
    if np.max(np.abs(kappa)) <= GEODESIC_KAPPA:
        raise NotApplicableError("fit_first_integral: curve is a geodesic")

    unit = CurvatureProfile.from_samples(curve.s, kappa, a, delta=1.0)
    delta_hat = fit_delta(unit)
    fitted = CurvatureProfile.from_samples(curve.s, kappa, a, delta=delta_hat)

    spread = np.max(np.abs(kappa - kappa.mean()))
    if spread <= GEODESIC_KAPPA * max(1.0, abs(float(kappa.mean()))):
        residual = el_residual(fitted)
    else:
        residual = first_integral_residual(fitted)
    logger.debug("first-integral fit: delta=%.12g residual=%.3e", delta_hat, residual)
    return delta_hat, residual
