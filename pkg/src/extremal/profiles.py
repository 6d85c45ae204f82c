"""Closed-form curvature profiles of the critical curves of Theta_a."""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Tuple

import numpy as np

from ..errors import InvalidInputError, InvariantViolationError
from ..geometry.curves import GRID_RTOL, _frozen

logger = logging.getLogger(__name__)

MIN_PROFILE_SAMPLES = 16


class Family(Enum):
    """The three closed-form families, named after f in f(a*s)."""
    SINH = "sinh"
    COSH = "cosh"
    EXP = "exp"

    @property
    def f(self) -> Callable[[np.ndarray], np.ndarray]:
        return {Family.SINH: np.sinh, Family.COSH: np.cosh, Family.EXP: np.exp}[self]

    @classmethod
    def parse(cls, name: str) -> "Family":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(f.value for f in cls)
            raise InvalidInputError(f"unknown family {name!r}; expected one of: {choices}") from None


@dataclass(frozen=True)
class ExtremalSpec:
    """Parameter triple (a, d, family) selecting one closed-form critical curve."""

    a: float
    d: float
    family: Family

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family.parse(self.family))
        a, d = float(self.a), float(self.d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "d", d)
        if not (math.isfinite(a) and math.isfinite(d)):
            raise InvariantViolationError(f"a and d must be finite (a={a}, d={d})")
        if a <= 0:
            raise InvariantViolationError(f"bound a > 0 violated (a={a})")
        if d <= a * a:
            raise InvariantViolationError(f"bound d > a^2 violated (d={d}, a^2={a * a})")
        if self.family is Family.COSH and d >= 2 * a * a:
            raise InvariantViolationError(
                f"bound d < 2a^2 violated for the cosh family (d={d}, 2a^2={2 * a * a})"
            )

    @property
    def c(self) -> float:
        """Amplitude of u = kappa / sqrt(kappa^2 + a^2) = c * f(a s)."""
        return math.sqrt(self.d - self.a**2) / self.a

    def to_dict(self) -> dict:
        return {"a": self.a, "d": self.d, "family": self.family.value}


def killing_norm_sq(spec: ExtremalSpec) -> float:
    """
    Squared length of the Killing field J along the extremal.

    This is the first-integral constant: sinh -> d, cosh -> 2a^2 - d, exp -> a^2.
    """
    a2 = spec.a**2
    if spec.family is Family.SINH:
        return spec.d
    if spec.family is Family.COSH:
        return 2 * a2 - spec.d
    return a2


def domain(spec: ExtremalSpec) -> Tuple[float, float]:
    """
    Open arc-length interval on which the profile is defined.

    Returns:
        (s_min, s_max); s_min is -inf for the exp family
    """
    a = spec.a
    root = math.sqrt(a**2 / (spec.d - a**2))
    if spec.family is Family.SINH:
        half = math.asinh(root) / a
        return (-half, half)
    if spec.family is Family.COSH:
        half = math.acosh(root) / a
        return (-half, half)
    return (-math.inf, math.log(root) / a)


def exp_tail_window(spec: ExtremalSpec, tail_kappa: float = 1e-3) -> float:
    """
    Length W of the sampled window below s_max for the exp family.

    Chosen so that |kappa(s_max - W)| < tail_kappa * a.
    """
    if tail_kappa <= 0:
        raise InvalidInputError(f"tail_kappa must be positive, got {tail_kappa}")
    # u(s) = exp(a (s - s_max)); kappa = a u / sqrt(1 - u^2); halve for strictness
    u_tail = 0.5 * tail_kappa / math.sqrt(1.0 + tail_kappa**2)
    return math.log(1.0 / u_tail) / spec.a


def sampling_window(spec: ExtremalSpec, tail_kappa: float = 1e-3) -> Tuple[float, float]:
    """Finite interval covered by samples before the margin is applied."""
    lo, hi = domain(spec)
    if spec.family is Family.EXP:
        lo = hi - exp_tail_window(spec, tail_kappa)
    return lo, hi


@dataclass(frozen=True)
class CurvatureProfile:
    """
    Sampled curvature on a uniform arc-length grid.

    Attributes:
        s: Uniform arc-length samples
        kappa: Signed curvature samples
        a: Energy parameter
        delta: Killing-norm squared (first-integral constant)
        domain: Open interval containing every sample
        spec: Generating parameters, None for hand-built profiles
    """

    s: np.ndarray
    kappa: np.ndarray
    a: float
    delta: float
    domain: Tuple[float, float]
    spec: Optional[ExtremalSpec] = None

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float)
        kappa = np.asarray(self.kappa, dtype=float)
        if s.ndim != 1 or kappa.shape != s.shape:
            raise InvalidInputError(f"CurvatureProfile: shape mismatch s={s.shape} kappa={kappa.shape}")
        if s.size < 2:
            raise InvalidInputError("CurvatureProfile: need at least 2 samples")
        if not (np.all(np.isfinite(s)) and np.all(np.isfinite(kappa))):
            raise InvalidInputError("CurvatureProfile: samples must be finite")
        h = (s[-1] - s[0]) / (s.size - 1)
        if h <= 0 or np.max(np.abs(np.diff(s) - h)) > GRID_RTOL * max(h, np.max(np.abs(s))):
            raise InvalidInputError("CurvatureProfile: arc-length grid must be uniform and increasing")
        lo, hi = self.domain
        if not (s[0] > lo and s[-1] < hi):
            raise InvalidInputError(
                f"CurvatureProfile: samples [{s[0]}, {s[-1]}] not strictly inside domain ({lo}, {hi})"
            )
        if self.a < 0:
            raise InvalidInputError(f"CurvatureProfile: a must be >= 0, got {self.a}")
        object.__setattr__(self, "s", _frozen(s))
        object.__setattr__(self, "kappa", _frozen(kappa))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "delta", float(self.delta))
        object.__setattr__(self, "domain", (float(lo), float(hi)))

    @property
    def n(self) -> int:
        return self.s.size

    @property
    def h(self) -> float:
        return float((self.s[-1] - self.s[0]) / (self.n - 1))

    @property
    def u(self) -> np.ndarray:
        """Bounded variable kappa / sqrt(kappa^2 + a^2)."""
        return self.kappa / np.sqrt(self.kappa**2 + self.a**2)

    @classmethod
    def from_samples(cls, s, kappa, a: float, delta: float) -> "CurvatureProfile":
        """Wrap hand-built samples; the domain is the whole line."""
        return cls(s=s, kappa=kappa, a=a, delta=delta, domain=(-math.inf, math.inf))

    def sidecar(self) -> dict:
        """Metadata written next to the profile CSV."""
        # JSON has no infinity; an unbounded end is written as null
        bounds = [b if math.isfinite(b) else None for b in self.domain]
        meta = {"a": self.a, "delta": self.delta, "domain": bounds}
        if self.spec is not None:
            meta.update(self.spec.to_dict())
        return meta


def default_margin(spec: ExtremalSpec, margin_fraction: float = 1e-3, tail_kappa: float = 1e-3) -> float:
    lo, hi = sampling_window(spec, tail_kappa)
    return margin_fraction * (hi - lo)


def curvature_profile(
    spec: ExtremalSpec,
    n: int,
    margin: Optional[float] = None,
    tail_kappa: float = 1e-3,
    margin_fraction: float = 1e-3,
) -> CurvatureProfile:
    """
    Sample the closed-form curvature of one extremal.

    kappa^2 = a^2 (d - a^2) f^2(a s) / (a^2 - (d - a^2) f^2(a s)); the sinh
    branch is odd in s, cosh and exp take the positive root.

    Args:
        spec: Extremal parameters
        n: Number of samples (>= 16)
        margin: Distance kept from each finite domain end (only the upper end
            for exp); defaults to margin_fraction * window width
        tail_kappa: Exp family lower truncation, see exp_tail_window
        margin_fraction: Default margin as a fraction of the window width

    Returns:
        CurvatureProfile on a uniform grid
    """
    if n < MIN_PROFILE_SAMPLES:
        raise InvalidInputError(f"curvature_profile: need n >= {MIN_PROFILE_SAMPLES}, got {n}")

    lo, hi = sampling_window(spec, tail_kappa)
    width = hi - lo
    if margin is None:
        margin = margin_fraction * width
    if not (0 < margin < width / 2):
        raise InvalidInputError(
            f"curvature_profile: margin must lie in (0, {width / 2:.6g}), got {margin}"
        )

    if spec.family is Family.EXP:
        s = np.linspace(lo, hi - margin, n)
    else:
        s = np.linspace(lo + margin, hi - margin, n)

    u = spec.c * spec.family.f(spec.a * s)
    kappa = spec.a * u / np.sqrt(1.0 - u**2)
    delta = killing_norm_sq(spec)
    logger.debug(
        "profile %s a=%g d=%g: n=%d s in [%.6g, %.6g], max|kappa|=%.6g",
        spec.family.value, spec.a, spec.d, n, s[0], s[-1], np.max(np.abs(kappa)),
    )
    return CurvatureProfile(s=s, kappa=kappa, a=spec.a, delta=delta, domain=domain(spec), spec=spec)


def boundary_blowup(spec: ExtremalSpec, margins, n: int = 2048, tail_kappa: float = 1e-3) -> list:
    """Max |kappa| of the profile sampled with each margin in turn."""
    return [
        float(np.max(np.abs(curvature_profile(spec, n, margin=m, tail_kappa=tail_kappa).kappa)))
        for m in margins
    ]
