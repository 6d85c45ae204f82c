"""Tests for horizontal lifts and the sub-Riemannian length."""
import math

import numpy as np
import pytest

from src.completion import discrete_energy
from src.errors import InvalidInputError
from src.extremal import CurvatureProfile, ExtremalSpec, curvature_profile, curve_from_turning_angle
from src.geometry import PlanarCurve
from src.lift import (
    LiftedCurve,
    horizontal_vertical_split,
    horizontality_residual,
    lift,
    project,
    sr_length,
)


def unit_circle(n=200):
    s = np.linspace(0, 2 * np.pi, n)
    return PlanarCurve(s=s, points=np.column_stack((np.cos(s), np.sin(s))), theta=s + np.pi / 2, kappa=np.ones(n))


def segment(length=3.0, n=31):
    s = np.linspace(0, length, n)
    return PlanarCurve(s=s, points=np.column_stack((s, np.zeros(n))), theta=np.zeros(n), kappa=np.zeros(n))


def bump_curve(n=4001, length=2.0):
    """Turning-angle curve whose curvature and its derivative vanish at both ends."""
    s = np.linspace(0, length, n)
    kappa = np.sin(np.pi * s / length) ** 2
    return curve_from_turning_angle(CurvatureProfile.from_samples(s, kappa, a=1.0, delta=1.0))


def random_curve(seed, n=4001, length=2.0):
    """Smooth random curvature with a sin^2 envelope, so kappa and kappa' vanish at both ends."""
    rng = np.random.default_rng(seed)
    s = np.linspace(0, length, n)
    modes = sum(c * np.sin(k * np.pi * s / length) for k, c in enumerate(rng.uniform(-1, 1, 3), start=1))
    kappa = np.sin(np.pi * s / length) ** 2 * modes
    return curve_from_turning_angle(CurvatureProfile.from_samples(s, kappa, a=1.0, delta=1.0))


class TestLift:
    def test_horizontal_segment(self):
        lifted = lift(segment())
        np.testing.assert_array_equal(lifted.theta, 0.0)
        assert lifted.winding == 0

    def test_circle(self):
        lifted = lift(unit_circle())
        np.testing.assert_allclose(lifted.theta, lifted.t + np.pi / 2)
        assert lifted.theta[-1] == pytest.approx(2 * np.pi + np.pi / 2)
        assert lifted.winding == 1
        assert horizontality_residual(lifted) < 1e-12

    def test_extremal_lift_is_horizontal(self):
        curve = curve_from_turning_angle(curvature_profile(ExtremalSpec(1, 2, "sinh"), 2048))
        assert horizontality_residual(lift(curve)) < 1e-6

    def test_round_trip(self):
        circle = unit_circle()
        back = project(lift(circle))
        np.testing.assert_array_equal(back.points, circle.points)
        np.testing.assert_allclose(back.theta, circle.theta, atol=1e-12)
        np.testing.assert_allclose(back.s, circle.s, atol=1e-12)

    def test_project_keeps_sheet(self):
        circle = unit_circle()
        shifted = LiftedCurve(t=circle.s, x=circle.x, y=circle.y, theta=circle.theta + 6 * np.pi)
        back = project(shifted)
        np.testing.assert_allclose(back.theta, shifted.theta, atol=1e-12)

    def test_irregular_projection(self):
        with pytest.raises(InvalidInputError, match="not regular"):
            LiftedCurve(t=[0, 1, 2], x=[0, 1, 1], y=[0, 0, 0], theta=[0, 0, 0])

    def test_parameter_must_increase(self):
        with pytest.raises(InvalidInputError):
            LiftedCurve(t=[0, 2, 1], x=[0, 1, 2], y=[0, 0, 0], theta=[0, 0, 0])


class TestHorizontality:
    def test_vertical_motion_with_flat_fiber(self):
        lifted = LiftedCurve(t=[0, 1, 2], x=[0, 1, 2], y=[0, 0, 1], theta=[0, 0, 0])
        assert horizontality_residual(lifted) == pytest.approx(1.0)

    def test_sideways_motion(self):
        lifted = LiftedCurve(t=[0, 1, 2], x=[0, 1, 2], y=[0, 0, 0], theta=[np.pi / 2] * 3)
        assert horizontality_residual(lifted) == pytest.approx(1.0)

    def test_divides_by_parameter_step(self):
        lifted = LiftedCurve(t=[0, 2, 4], x=[0, 1, 2], y=[0, 0, 0], theta=[np.pi / 2] * 3)
        assert horizontality_residual(lifted) == pytest.approx(0.5)

    def test_slow_parametrization_halves_the_residual(self):
        circle = unit_circle()
        tilted = LiftedCurve(t=circle.s, x=circle.x, y=circle.y, theta=circle.theta + 0.1)
        slow = LiftedCurve(t=2 * circle.s, x=circle.x, y=circle.y, theta=circle.theta + 0.1)
        assert horizontality_residual(slow) == pytest.approx(0.5 * horizontality_residual(tilted), rel=1e-12)


class TestLength:
    def test_straight_segment(self):
        assert sr_length(lift(segment(3.0)), 1.0) == pytest.approx(3.0)

    def test_planar_weight(self):
        assert sr_length(lift(segment(3.0)), 2.0) == pytest.approx(6.0)

    @pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
    def test_matches_discrete_energy_of_projection(self, a):
        curve = bump_curve()
        sr = sr_length(lift(curve), a)
        energy = discrete_energy(curve.to_polyline(), a)
        assert sr == pytest.approx(energy, rel=1e-6)

    @pytest.mark.parametrize("seed", range(20))
    def test_random_curves(self, seed):
        curve = random_curve(seed)
        lifted = lift(curve)
        assert horizontality_residual(lifted) < 1e-6
        for a in (0.5, 1.0, 2.0):
            assert sr_length(lifted, a) == pytest.approx(discrete_energy(curve.to_polyline(), a), rel=1e-6)

    def test_needs_positive_weight(self):
        with pytest.raises(InvalidInputError):
            sr_length(lift(segment()), 0.0)

    def test_split(self):
        planar, fiber = horizontal_vertical_split(lift(segment(3.0)), 2.0)
        assert planar == pytest.approx(6.0)
        assert fiber == 0.0

    def test_split_of_circle(self):
        planar, fiber = horizontal_vertical_split(lift(unit_circle(400)), 1.0)
        assert fiber == pytest.approx(2 * np.pi)
        assert planar == pytest.approx(2 * np.pi, rel=1e-4)


class TestReducedTheta:
    def test_reduced_range(self):
        lifted = lift(unit_circle())
        reduced = lifted.reduced_theta()
        assert np.all((reduced >= 0) & (reduced < 2 * np.pi))

    def test_rebuild_from_reduced(self):
        circle = unit_circle()
        lifted = LiftedCurve(t=circle.s, x=circle.x, y=circle.y, theta=circle.theta - 4 * np.pi)
        meta = lifted.sidecar()
        rebuilt = LiftedCurve.from_reduced(lifted.t, lifted.x, lifted.y, lifted.reduced_theta(), meta["start_turns"])
        np.testing.assert_allclose(rebuilt.theta, lifted.theta, atol=1e-12)
        assert meta["winding"] == 1
