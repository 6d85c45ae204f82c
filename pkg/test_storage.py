"""Tests for file export, SVG rendering, configuration and residual checks."""
import json
import math
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from src.checks import CheckLevel, CheckManager
from src.config import Config
from src.errors import InvalidInputError
from src.extremal import ExtremalSpec, curvature_profile, curve_from_profile_quadrature
from src.geometry import PlanarCurve
from src.lift import lift
from src.storage.exporter import DataExporter, dumps_json, read_curve_csv, read_lifted_csv
from src.storage.svg import render_svg


def quadrature_curve(n=128):
    return curve_from_profile_quadrature(curvature_profile(ExtremalSpec(1, 1.5, "cosh"), n))


class TestDataExporter:
    def test_output_names(self, tmp_path):
        exporter = DataExporter(str(tmp_path))
        paths = exporter.output_paths(["curve", "meta", "mesh"], "run1")
        assert paths["curve"] == tmp_path / "run1.curve.csv"
        assert paths["meta"] == tmp_path / "run1.meta.json"
        assert paths["mesh"] == tmp_path / "run1.mesh.obj"

    def test_unknown_artifact(self, tmp_path):
        with pytest.raises(KeyError):
            DataExporter(str(tmp_path)).output_paths(["plot"], "run1")

    def test_curve_round_trip_is_exact(self, tmp_path):
        curve = quadrature_curve()
        written = DataExporter(str(tmp_path)).write_outputs({"curve": curve}, "run")
        back = read_curve_csv(written["curve"])
        np.testing.assert_array_equal(back.points, curve.points)
        np.testing.assert_array_equal(back.kappa, curve.kappa)
        np.testing.assert_array_equal(back.s, curve.s)

    def test_csv_header(self, tmp_path):
        written = DataExporter(str(tmp_path)).write_outputs({"curve": quadrature_curve()}, "run")
        with open(written["curve"]) as f:
            assert f.readline().strip() == "s,x,y,theta,kappa"

    def test_lifted_round_trip(self, tmp_path):
        lifted = lift(quadrature_curve())
        written = DataExporter(str(tmp_path)).write_outputs({"lifted": lifted, "meta": lifted.sidecar()}, "run")
        back = read_lifted_csv(written["lifted"], written["meta"])
        np.testing.assert_allclose(back.theta, lifted.theta, atol=1e-12)
        np.testing.assert_array_equal(back.x, lifted.x)

    def test_refuses_overwrite(self, tmp_path):
        exporter = DataExporter(str(tmp_path))
        exporter.write_outputs({"meta": {"a": 1}}, "run")
        with pytest.raises(FileExistsError):
            exporter.write_outputs({"meta": {"a": 2}}, "run")
        exporter.write_outputs({"meta": {"a": 2}}, "run", force=True)
        assert json.loads((tmp_path / "run.meta.json").read_text()) == {"a": 2}

    def test_write_failure_names_path(self, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("file, not a directory")
        with pytest.raises(OSError, match="blocker"):
            DataExporter(str(tmp_path)).write_outputs({"meta": {}}, "blocker/run")

    def test_summary_frame(self, tmp_path):
        frame = pd.DataFrame([{"a": 1.0, "d": 2.0, "passed": True}])
        written = DataExporter(str(tmp_path)).write_outputs({"summary": frame}, "sweep")
        assert (tmp_path / "sweep.summary.csv").read_text() == "a,d,passed\n1,2,True\n"
        assert written["summary"].endswith("sweep.summary.csv")

    def test_rejects_unknown_type(self, tmp_path):
        with pytest.raises(TypeError):
            DataExporter(str(tmp_path)).render("meta", object())


def test_json_is_sorted_and_numpy_aware():
    text = dumps_json({"b": np.float64(0.5), "a": np.arange(2)})
    assert text == '{\n  "a": [\n    0,\n    1\n  ],\n  "b": 0.5\n}\n'


class TestSvg:
    def test_single_path(self):
        svg = render_svg(quadrature_curve())
        assert svg.startswith('<?xml version="1.0"')
        assert svg.count("<path ") == 1
        assert svg.endswith("</svg>\n")

    def test_two_decimal_coordinates(self):
        s = np.linspace(0, 1, 3)
        curve = PlanarCurve(s=s, points=np.column_stack((s, np.zeros(3))), theta=np.zeros(3), kappa=np.zeros(3))
        svg = render_svg(curve)
        assert 'd="M 20.00,20.00 L 520.00,20.00 L 1020.00,20.00"' in svg
        assert 'viewBox="0 0 1040.00 40.00"' in svg

    def test_zero_extent(self):
        s = np.linspace(0, 1, 3)
        curve = PlanarCurve(s=s, points=np.zeros((3, 2)), theta=np.zeros(3), kappa=np.zeros(3))
        with pytest.raises(InvalidInputError):
            render_svg(curve)


class TestConfig:
    def test_defaults_without_file(self):
        cfg = Config(None)
        assert cfg.get("solver.nodes") == 128
        assert cfg.get("surface.sector") == pytest.approx(2 * math.pi)
        assert cfg.get("missing.key", 7) == 7

    def test_yaml_overrides(self, tmp_path):
        path = tmp_path / "cfg.yaml"
        path.write_text("solver:\n  nodes: 64\nthresholds:\n  el: 0.01\n")
        cfg = Config(str(path))
        assert cfg.get("solver.nodes") == 64
        assert cfg.get("solver.tol") == 1e-10
        assert cfg.get_thresholds()["el"] == 0.01
        assert cfg.get_thresholds()["first_integral"] == 1e-4

    def test_flat_key_value(self, tmp_path):
        path = tmp_path / "cfg.txt"
        path.write_text("# solver knobs\nsolver.metric = euclidean\nsampling.curve_samples=512\n")
        cfg = Config(str(path))
        assert cfg.get("solver.metric") == "euclidean"
        assert cfg.get_sampling_config()["curve_samples"] == 512

    def test_flat_malformed_line(self, tmp_path):
        path = tmp_path / "cfg.txt"
        path.write_text("solver.nodes 64\n")
        with pytest.raises(ValueError, match="line 1"):
            Config(str(path))

    def test_repository_file_matches_defaults(self):
        assert Config(str(Path(__file__).parent / "config.yaml")).config == Config(None).config


class TestCheckManager:
    def test_pass_and_fail(self):
        manager = CheckManager()
        checks = manager.check_all({"el": 1e-5, "first_integral": 1.0, "unknown": 5.0, "unit_speed": None})
        assert [c.metric for c in checks] == ["el", "first_integral"]
        assert checks[0].level is CheckLevel.PASS
        assert checks[1].level is CheckLevel.FAIL
        assert [c.metric for c in manager.failed()] == ["first_integral"]

    def test_nan_fails(self):
        assert not CheckManager().check("el", float("nan")).passed

    def test_missing_threshold(self):
        with pytest.raises(KeyError):
            CheckManager({"el": 1e-3}).check("first_integral", 0.0)

    def test_failed_reflects_last_call(self, caplog):
        manager = CheckManager({"el": 1e-3})
        manager.check_all({"el": 0.5})
        assert "el residual exceeds bound" in caplog.text
        manager.check_all({"el": 1e-6})
        assert manager.failed() == []

    def test_to_dict(self):
        data = CheckManager().check("unit_speed", 2e-5).to_dict()
        assert data == {
            "level": "pass",
            "metric": "unit_speed",
            "message": "unit_speed residual within bound",
            "value": 2e-5,
            "threshold": 1e-4,
        }
