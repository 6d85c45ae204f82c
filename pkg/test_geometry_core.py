"""Tests for the sampled-curve primitives."""
import numpy as np
import pytest

from src.errors import InvalidInputError
from src.geometry import (
    PlanarCurve,
    Polyline,
    finite_diff,
    integrate_samples,
    resample_arclength,
)


class TestIntegrateSamples:
    def test_constant(self):
        np.testing.assert_allclose(integrate_samples([1, 1, 1, 1], 0.5), [0, 0.5, 1.0, 1.5])

    def test_zeros(self):
        np.testing.assert_array_equal(integrate_samples(np.zeros(7), 0.1), np.zeros(7))

    def test_affine_is_exact(self):
        np.testing.assert_allclose(integrate_samples([0.0, 0.5, 1.0], 0.5), [0, 0.125, 0.5], atol=1e-15)

    def test_too_few_samples(self):
        with pytest.raises(InvalidInputError):
            integrate_samples([1.0], 0.1)

    def test_bad_step(self):
        with pytest.raises(InvalidInputError):
            integrate_samples([1.0, 2.0], 0.0)


class TestFiniteDiff:
    def test_constant(self):
        np.testing.assert_allclose(finite_diff(np.full(10, 3.0), 0.1), 0.0, atol=1e-12)

    def test_linear(self):
        s = np.linspace(0, 1, 11)
        np.testing.assert_allclose(finite_diff(s, 0.1), 1.0, atol=1e-12)

    def test_second_derivative_of_square(self):
        h = 0.01
        s = np.arange(101) * h
        np.testing.assert_allclose(finite_diff(s**2, h, order=2), 2.0, atol=1e-8)

    def test_linearity(self):
        h = 0.05
        s = np.arange(40) * h
        u, v = np.sin(s), np.exp(s)
        lhs = finite_diff(2.0 * u - 3.0 * v, h)
        rhs = 2.0 * finite_diff(u, h) - 3.0 * finite_diff(v, h)
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    def test_inverts_integration(self):
        h = 1e-3
        s = np.arange(1001) * h
        values = np.cos(s)
        back = finite_diff(integrate_samples(values, h), h)
        np.testing.assert_allclose(back[1:-1], values[1:-1], atol=1e-6)

    def test_too_few_samples(self):
        with pytest.raises(InvalidInputError):
            finite_diff([0.0, 1.0, 2.0, 3.0], 0.1)

    def test_bad_order(self):
        with pytest.raises(InvalidInputError):
            finite_diff(np.arange(6.0), 1.0, order=3)


class TestResampleArclength:
    def test_straight_segment(self):
        out = resample_arclength(Polyline([[0, 0], [0.3, 0], [1, 0]]), 5)
        np.testing.assert_allclose(out.vertices[:, 0], [0, 0.25, 0.5, 0.75, 1.0], atol=1e-15)
        np.testing.assert_allclose(out.vertices[:, 1], 0.0)

    def test_idempotent_on_uniform(self):
        v = np.column_stack((np.linspace(0, 2, 9), np.zeros(9)))
        out = resample_arclength(Polyline(v), 9)
        np.testing.assert_allclose(out.vertices, v, atol=1e-12)

    def test_l_shape(self):
        out = resample_arclength(Polyline([[0, 0], [1, 0], [1, 1]]), 5)
        expected = [[0, 0], [0.5, 0], [1, 0], [1, 0.5], [1, 1]]
        np.testing.assert_allclose(out.vertices, expected, atol=1e-12)

    def test_endpoints_exact(self):
        v = np.array([[0.1, 0.2], [0.7, 0.9], [1.3, 0.4], [2.0, 1.1]])
        out = resample_arclength(Polyline(v), 17)
        assert tuple(out.vertices[0]) == tuple(v[0])
        assert tuple(out.vertices[-1]) == tuple(v[-1])

    def test_rejects_small_n(self):
        with pytest.raises(InvalidInputError):
            resample_arclength(Polyline([[0, 0], [1, 0], [2, 0]]), 2)


class TestPolyline:
    def test_repeated_vertex(self):
        with pytest.raises(InvalidInputError, match="degenerate segment"):
            Polyline([[0, 0], [1, 0], [1, 0]])

    def test_too_short(self):
        with pytest.raises(InvalidInputError):
            Polyline([[0, 0], [1, 0]])

    def test_length(self):
        assert Polyline([[0, 0], [3, 0], [3, 4]]).length() == pytest.approx(7.0)


def _circle(n=200, radius=1.0):
    h = 2 * np.pi * radius / (n - 1)
    s = np.arange(n) * h
    phi = s / radius
    points = radius * np.column_stack((np.cos(phi), np.sin(phi)))
    return PlanarCurve(s=s, points=points, theta=phi + np.pi / 2, kappa=np.full(n, 1.0 / radius))


class TestPlanarCurve:
    def test_rejects_nonuniform_grid(self):
        s = np.array([0.0, 0.1, 0.25, 0.3])
        with pytest.raises(InvalidInputError, match="uniform"):
            PlanarCurve(s=s, points=np.zeros((4, 2)), theta=np.zeros(4), kappa=np.zeros(4))

    def test_rejects_theta_jump(self):
        s = np.arange(4) * 0.1
        theta = np.array([0.0, 0.1, 0.1 + np.pi, 0.2])
        with pytest.raises(InvalidInputError, match="theta jumps"):
            PlanarCurve(s=s, points=np.zeros((4, 2)), theta=theta, kappa=np.zeros(4))

    def test_rejects_nan(self):
        s = np.arange(4) * 0.1
        kappa = np.array([0.0, np.nan, 0.0, 0.0])
        with pytest.raises(InvalidInputError):
            PlanarCurve(s=s, points=np.zeros((4, 2)), theta=np.zeros(4), kappa=kappa)

    def test_arrays_are_read_only(self):
        curve = _circle(32)
        with pytest.raises(ValueError):
            curve.kappa[0] = 5.0

    def test_circle_speed_defect_small(self):
        assert _circle(400).speed_defect() < 1e-4

    def test_from_points_recovers_circle(self):
        reference = _circle(400)
        rebuilt = PlanarCurve.from_points(reference.points)
        np.testing.assert_allclose(rebuilt.kappa, 1.0, rtol=1e-3)
        np.testing.assert_allclose(rebuilt.theta[1:-1], reference.theta[1:-1], atol=1e-9)

    def test_from_points_straight_line(self):
        pts = np.column_stack((np.linspace(0, 1, 11), np.zeros(11)))
        curve = PlanarCurve.from_points(pts)
        assert curve.h == pytest.approx(0.1)
        np.testing.assert_allclose(curve.theta, 0.0, atol=1e-15)
        np.testing.assert_allclose(curve.kappa, 0.0, atol=1e-12)
