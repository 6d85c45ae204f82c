"""Residual threshold checks."""
import logging
import math
from enum import Enum
from typing import Dict, List, Optional


class CheckLevel(Enum):
    """Outcome of a residual check."""
    PASS = "pass"
    FAIL = "fail"


class ResidualCheck:
    """One residual compared against its bound."""

    def __init__(self, level: CheckLevel, metric: str, message: str, value: float, threshold: float):
        """
        Create a check result.

        Args:
            level: Pass or fail
            metric: Residual name
            message: Human-readable summary
            value: Measured residual
            threshold: Bound the residual must stay below
        """
        self.level = level
        self.metric = metric
        self.message = message
        self.value = value
        self.threshold = threshold

    @property
    def passed(self) -> bool:
        return self.level is CheckLevel.PASS

    def to_dict(self) -> Dict:
        """Convert check to dictionary."""
        return {
            "level": self.level.value,
            "metric": self.metric,
            "message": self.message,
            "value": self.value,
            "threshold": self.threshold,
        }

    def __repr__(self) -> str:
        return f"[{self.level.value.upper()}] {self.metric}: {self.message} (value={self.value:.3e}, threshold={self.threshold:.1e})"


class CheckManager:
    """Compare residuals with configured bounds."""

    def __init__(self, thresholds: Optional[Dict] = None):
        """
        Initialize the check manager.

        Args:
            thresholds: Mapping of residual name to its upper bound
        """
        self.thresholds = dict(thresholds or self._default_thresholds())
        self.last_checks: List[ResidualCheck] = []
        self.logger = logging.getLogger(__name__)

    @staticmethod
    def _default_thresholds() -> Dict:
        """Get default residual bounds."""
        return {
            "first_integral": 1e-4,
            "el": 1e-3,
            "killing_norm": 1e-4,
            "unit_speed": 1e-4,
            "gaussian_curvature": 1e-3,
            "fitted_first_integral": 1e-2,
        }

    def check(self, metric: str, value: float) -> ResidualCheck:
        """
        Check one residual against its bound.

        Args:
            metric: Residual name; must have a configured bound
            value: Measured residual

        Returns:
            The check result
        """
        if metric not in self.thresholds:
            raise KeyError(f"no threshold configured for {metric!r}")
        threshold = float(self.thresholds[metric])
        if math.isfinite(value) and value < threshold:
            return ResidualCheck(CheckLevel.PASS, metric, f"{metric} residual within bound", value, threshold)
        return ResidualCheck(CheckLevel.FAIL, metric, f"{metric} residual exceeds bound", value, threshold)

    def check_all(self, residuals: Dict[str, Optional[float]]) -> List[ResidualCheck]:
        """
        Check every residual that has a configured bound.

        Residuals that are None (not applicable) or unbounded are skipped.

        Args:
            residuals: Mapping of residual name to measured value

        Returns:
            List of check results, in the order of ``residuals``
        """
        checks = [
            self.check(metric, float(value))
            for metric, value in residuals.items()
            if value is not None and metric in self.thresholds
        ]

        self.last_checks = checks
        for check in checks:
            if not check.passed:
                self.logger.warning(str(check))
        return checks

    def failed(self) -> List[ResidualCheck]:
        """Failed checks of the last check_all call."""
        return [c for c in self.last_checks if not c.passed]
