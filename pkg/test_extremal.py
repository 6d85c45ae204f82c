"""Tests for the closed-form critical curves and their residual checks."""
import math

import numpy as np
import pytest

from src.errors import InvalidInputError, InvariantViolationError
from src.extremal import (
    CurvatureProfile,
    ExtremalSpec,
    Family,
    boundary_blowup,
    curvature_profile,
    curve_from_profile_quadrature,
    curve_from_quadrature,
    curve_from_turning_angle,
    domain,
    el_residual,
    exp_tail_window,
    first_integral_residual,
    fit_delta,
    killing_field_J,
    killing_norm_defect,
    killing_norm_sq,
    shape_summary,
    theta_energy,
    unit_speed_residual,
)
from src.extremal.residuals import first_integral_rhs
from src.geometry import PlanarCurve

ASINH_ONE = math.log(1 + math.sqrt(2))


def grid_specs():
    specs = []
    for a in (0.5, 1.0, 2.0):
        specs.append(ExtremalSpec(a, 2 * a * a, "sinh"))
        specs.append(ExtremalSpec(a, 1.5 * a * a, "cosh"))
        specs.append(ExtremalSpec(a, 1.5 * a * a, "exp"))
    return specs


GRID = grid_specs()
GRID_IDS = [f"{s.family.value}-a{s.a:g}" for s in GRID]


class TestExtremalSpec:
    def test_parses_family_name(self):
        assert ExtremalSpec(1, 2, "SINH").family is Family.SINH

    def test_unknown_family(self):
        with pytest.raises(InvalidInputError, match="unknown family"):
            ExtremalSpec(1, 2, "tanh")

    @pytest.mark.parametrize("a", [0.0, -1.0])
    def test_a_must_be_positive(self, a):
        with pytest.raises(InvariantViolationError, match="a > 0"):
            ExtremalSpec(a, 2, "sinh")

    def test_d_above_a_squared(self):
        with pytest.raises(InvariantViolationError, match=r"d > a\^2"):
            ExtremalSpec(1, 1, "exp")

    def test_cosh_upper_bound(self):
        with pytest.raises(InvariantViolationError, match=r"d < 2a\^2"):
            ExtremalSpec(1, 2.5, "cosh")

    def test_cosh_upper_bound_only_for_cosh(self):
        ExtremalSpec(1, 2.5, "sinh")
        ExtremalSpec(1, 2.5, "exp")


class TestDomain:
    def test_sinh(self):
        lo, hi = domain(ExtremalSpec(1, 2, "sinh"))
        assert lo == pytest.approx(-ASINH_ONE)
        assert hi == pytest.approx(ASINH_ONE)

    def test_cosh(self):
        lo, hi = domain(ExtremalSpec(1, 1.5, "cosh"))
        assert hi == pytest.approx(math.acosh(math.sqrt(2)))
        assert hi == pytest.approx(ASINH_ONE)
        assert lo == pytest.approx(-hi)

    def test_exp(self):
        lo, hi = domain(ExtremalSpec(1, 2, "exp"))
        assert lo == -math.inf
        assert hi == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("spec", GRID, ids=GRID_IDS)
    def test_bounded_above(self, spec):
        assert math.isfinite(domain(spec)[1])

    def test_exp_tail_window(self):
        spec = ExtremalSpec(1, 2, "exp")
        s = domain(spec)[1] - exp_tail_window(spec, 1e-3)
        u = spec.c * math.exp(spec.a * s)
        assert spec.a * u / math.sqrt(1 - u * u) < 1e-3 * spec.a


class TestKillingNormSq:
    @pytest.mark.parametrize(
        "a,d,family,expected",
        [(1, 2, "sinh", 2.0), (1, 1.5, "cosh", 0.5), (1, 2, "exp", 1.0), (1, 1.5, "exp", 1.0)],
    )
    def test_values(self, a, d, family, expected):
        assert killing_norm_sq(ExtremalSpec(a, d, family)) == pytest.approx(expected)

    @pytest.mark.parametrize("spec", GRID, ids=GRID_IDS)
    def test_matches_least_squares_fit(self, spec):
        profile = curvature_profile(spec, 4096)
        assert fit_delta(profile) == pytest.approx(killing_norm_sq(spec), abs=1e-3)


class TestCurvatureProfile:
    def test_sinh_vanishes_at_center(self):
        profile = curvature_profile(ExtremalSpec(1, 2, "sinh"), 17)
        assert profile.s[8] == pytest.approx(0.0, abs=1e-12)
        assert profile.kappa[8] == pytest.approx(0.0, abs=1e-10)

    def test_cosh_is_one_at_center(self):
        profile = curvature_profile(ExtremalSpec(1, 1.5, "cosh"), 17)
        assert profile.kappa[8] == pytest.approx(1.0, abs=1e-9)

    def test_exp_value(self):
        profile = curvature_profile(ExtremalSpec(1, 2, "exp"), 8192)
        value = np.interp(-math.log(2), profile.s, profile.kappa)
        assert value == pytest.approx(1 / math.sqrt(3), abs=1e-5)

    @pytest.mark.parametrize("spec", GRID, ids=GRID_IDS)
    def test_samples_inside_domain(self, spec):
        profile = curvature_profile(spec, 256)
        lo, hi = domain(spec)
        assert profile.s[0] > lo and profile.s[-1] < hi
        assert np.all(np.diff(profile.s) > 0)

    def test_margin_too_large(self):
        with pytest.raises(InvalidInputError, match="margin"):
            curvature_profile(ExtremalSpec(1, 2, "sinh"), 64, margin=1.0)

    def test_too_few_samples(self):
        with pytest.raises(InvalidInputError):
            curvature_profile(ExtremalSpec(1, 2, "sinh"), 8)

    def test_rejects_samples_outside_domain(self):
        s = np.linspace(0, 1, 20)
        with pytest.raises(InvalidInputError, match="domain"):
            CurvatureProfile(s=s, kappa=np.zeros(20), a=1.0, delta=1.0, domain=(0.0, 2.0))

    def test_sidecar_writes_open_end_as_null(self):
        meta = curvature_profile(ExtremalSpec(1, 2, "exp"), 64).sidecar()
        assert meta["domain"][0] is None
        assert meta["family"] == "exp"
        assert meta["delta"] == pytest.approx(1.0)

    @pytest.mark.parametrize("spec", GRID, ids=GRID_IDS)
    def test_blowup_toward_boundary(self, spec):
        coarse, fine = boundary_blowup(spec, [1e-2, 1e-5])
        assert fine >= 10 * coarse


class TestResiduals:
    @pytest.mark.parametrize("spec", GRID, ids=GRID_IDS)
    def test_identities_hold_on_grid(self, spec):
        profile = curvature_profile(spec, 4096)
        assert first_integral_residual(profile) < 1e-4
        assert el_residual(profile) < 1e-3
        assert killing_norm_defect(profile) < 1e-4

    def test_constant_kappa_fails_first_integral(self):
        s = np.linspace(0, 1, 64)
        profile = CurvatureProfile.from_samples(s, np.ones(64), a=1.0, delta=2.0)
        assert first_integral_residual(profile) > 1.0

    def test_cosh_vertex_rhs_vanishes(self):
        assert first_integral_rhs(np.array([1.0]), 1.0, 0.5)[0] == pytest.approx(0.0, abs=1e-15)

    def test_geodesic_el_residual_is_zero(self):
        s = np.linspace(0, 1, 64)
        profile = CurvatureProfile.from_samples(s, np.zeros(64), a=1.0, delta=1.0)
        assert el_residual(profile) == 0.0

    def test_circle_el_residual(self):
        s = np.linspace(0, 1, 64)
        profile = CurvatureProfile.from_samples(s, np.full(64, 2.0), a=1.0, delta=1.0)
        assert el_residual(profile) == pytest.approx(2 / math.sqrt(5))

    def test_el_residual_needs_positive_a(self):
        s = np.linspace(0, 1, 64)
        profile = CurvatureProfile.from_samples(s, np.ones(64), a=0.0, delta=1.0)
        with pytest.raises(InvalidInputError):
            el_residual(profile)

    def test_killing_field_at_cosh_vertex(self):
        profile = curvature_profile(ExtremalSpec(1, 1.5, "cosh"), 1025)
        tangential, normal = killing_field_J(profile)
        assert normal[512] == pytest.approx(0.0, abs=1e-9)
        assert tangential[512] == pytest.approx(-1 / math.sqrt(2), abs=1e-9)

    def test_killing_field_of_geodesic(self):
        s = np.linspace(0, 1, 32)
        profile = CurvatureProfile.from_samples(s, np.zeros(32), a=1.0, delta=1.0)
        tangential, normal = killing_field_J(profile)
        np.testing.assert_allclose(tangential, -1.0)
        np.testing.assert_allclose(normal, 0.0, atol=1e-15)
        assert killing_norm_defect(profile) == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("spec", GRID, ids=GRID_IDS)
    def test_at_most_one_inflection_and_vertex(self, spec):
        summary = shape_summary(curvature_profile(spec, 2048))
        assert summary["kappa_sign_changes"] <= 1
        assert summary["kappa_prime_sign_changes"] <= 1

    def test_sinh_has_one_inflection(self):
        summary = shape_summary(curvature_profile(ExtremalSpec(1, 2, "sinh"), 2048))
        assert summary["kappa_sign_changes"] == 1
        assert summary["inflection_s"][0] == pytest.approx(0.0, abs=1e-3)

    def test_cosh_has_one_vertex(self):
        summary = shape_summary(curvature_profile(ExtremalSpec(1, 1.5, "cosh"), 2048))
        assert summary["kappa_sign_changes"] == 0
        assert summary["kappa_prime_sign_changes"] == 1


class TestReconstruction:
    @pytest.mark.parametrize("spec", GRID, ids=GRID_IDS)
    def test_quadrature_z_strictly_decreasing(self, spec):
        curve = curve_from_quadrature(spec, 1024)
        assert np.all(np.diff(curve.y) < 0)
        assert curve.y[0] == 0.0

    def test_quadrature_radius_at_cosh_vertex(self):
        curve = curve_from_quadrature(ExtremalSpec(1, 1.5, "cosh"), 1025)
        assert curve.x[512] == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("spec", GRID, ids=GRID_IDS)
    def test_quadrature_unit_speed(self, spec):
        assert unit_speed_residual(curvature_profile(spec, 4096)) < 1e-4

    @pytest.mark.parametrize("spec", GRID, ids=GRID_IDS)
    def test_reconstructions_are_congruent(self, spec):
        profile = curvature_profile(spec, 2048)
        by_quadrature = curve_from_profile_quadrature(profile)
        by_turning = curve_from_turning_angle(profile)
        assert np.max(np.abs(by_quadrature.kappa - by_turning.kappa)) < 1e-3

    def test_turning_angle_straight(self):
        s = np.linspace(0, 3.0, 31)
        curve = curve_from_turning_angle(CurvatureProfile.from_samples(s, np.zeros(31), a=1.0, delta=1.0))
        np.testing.assert_allclose(curve.points[-1], [3.0, 0.0], atol=1e-14)
        np.testing.assert_allclose(curve.y, 0.0)

    def test_turning_angle_closes_circle(self):
        s = np.linspace(0, 2 * math.pi, 1001)
        curve = curve_from_turning_angle(CurvatureProfile.from_samples(s, np.ones(1001), a=1.0, delta=1.0))
        np.testing.assert_allclose(curve.points[-1], [0.0, 0.0], atol=1e-9)
        radius = np.hypot(curve.x, curve.y - 1.0)
        np.testing.assert_allclose(radius, 1.0, atol=1e-5)

    def test_turning_angle_self_consistent(self):
        profile = curvature_profile(ExtremalSpec(1, 2, "sinh"), 2048, margin=0.05)
        curve = curve_from_turning_angle(profile)
        recomputed = PlanarCurve.from_points(curve.points, s0=float(curve.s[0]))
        assert np.max(np.abs(recomputed.kappa[2:-2] - profile.kappa[2:-2])) < 1e-3

    def test_quadrature_needs_positive_delta(self):
        s = np.linspace(0, 1, 32)
        with pytest.raises(InvalidInputError):
            curve_from_profile_quadrature(CurvatureProfile.from_samples(s, np.ones(32), a=1.0, delta=0.0))


def test_theta_energy_of_straight_line():
    s = np.linspace(0, 2.0, 21)
    curve = PlanarCurve(s=s, points=np.column_stack((s, np.zeros(21))), theta=np.zeros(21), kappa=np.zeros(21))
    assert theta_energy(curve, 0.5) == pytest.approx(1.0)
