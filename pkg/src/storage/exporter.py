"""Data export functionality."""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np
import pandas as pd

from ..errors import InvalidInputError
from ..extremal.profiles import CurvatureProfile
from ..geometry.curves import PlanarCurve
from ..lift.horizontal import LiftedCurve

logger = logging.getLogger(__name__)

CURVE_COLUMNS = ["s", "x", "y", "theta", "kappa"]
PROFILE_COLUMNS = ["s", "kappa"]
LIFTED_COLUMNS = ["t", "x", "y", "theta"]

# artifact key -> file suffix appended to the output prefix
OUTPUT_SUFFIXES = {
    "curve": ".curve.csv",
    "profile": ".profile.csv",
    "lifted": ".lifted.csv",
    "report": ".report.json",
    "mesh": ".mesh.obj",
    "meta": ".meta.json",
    "summary": ".summary.csv",
    "svg": ".curve.svg",
}


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def dumps_json(data: Dict) -> str:
    """Deterministic JSON text: sorted keys, 2-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, default=_json_default) + "\n"


def curve_frame(curve: PlanarCurve) -> pd.DataFrame:
    return pd.DataFrame({"s": curve.s, "x": curve.x, "y": curve.y, "theta": curve.theta, "kappa": curve.kappa})


def profile_frame(profile: CurvatureProfile) -> pd.DataFrame:
    return pd.DataFrame({"s": profile.s, "kappa": profile.kappa})


def lifted_frame(lifted: LiftedCurve) -> pd.DataFrame:
    return pd.DataFrame({"t": lifted.t, "x": lifted.x, "y": lifted.y, "theta": lifted.reduced_theta()})


def _require_columns(df: pd.DataFrame, columns, path: Path):
    if list(df.columns) != columns:
        raise InvalidInputError(f"{path}: expected header {','.join(columns)}, got {','.join(map(str, df.columns))}")


def read_curve_csv(path: Union[str, Path]) -> PlanarCurve:
    """Rebuild a PlanarCurve from a ``s,x,y,theta,kappa`` CSV."""
    path = Path(path)
    df = pd.read_csv(path, float_precision="round_trip")
    _require_columns(df, CURVE_COLUMNS, path)
    return PlanarCurve(
        s=df["s"].to_numpy(),
        points=df[["x", "y"]].to_numpy(),
        theta=df["theta"].to_numpy(),
        kappa=df["kappa"].to_numpy(),
    )


def read_lifted_csv(path: Union[str, Path], sidecar: Optional[Union[str, Path]] = None) -> LiftedCurve:
    """
    Rebuild a LiftedCurve from a ``t,x,y,theta`` CSV.

    Args:
        path: CSV with theta in [0, 2 pi)
        sidecar: JSON holding ``start_turns``; theta starts on sheet 0 without it

    Returns:
        LiftedCurve with a continuous theta
    """
    path = Path(path)
    df = pd.read_csv(path, float_precision="round_trip")
    _require_columns(df, LIFTED_COLUMNS, path)
    start_turns = 0
    if sidecar is not None:
        start_turns = int(json.loads(Path(sidecar).read_text()).get("start_turns", 0))
    return LiftedCurve.from_reduced(
        df["t"].to_numpy(), df["x"].to_numpy(), df["y"].to_numpy(), df["theta"].to_numpy(), start_turns
    )


class DataExporter:
    """Write curves, profiles, meshes and reports to deterministic files."""

    def __init__(self, export_dir: str = ".", float_format: str = "%.17g"):
        """
        Initialize the data exporter.

        Args:
            export_dir: Directory relative output prefixes are resolved against
            float_format: printf-style format for CSV floats
        """
        self.export_dir = Path(export_dir)
        self.float_format = float_format

    def _csv_text(self, df: pd.DataFrame) -> str:
        return df.to_csv(index=False, float_format=self.float_format, lineterminator="\n")

    def render(self, key: str, artifact: Any) -> bytes:
        """
        Serialize one artifact to the bytes written for its key.

        Args:
            key: One of OUTPUT_SUFFIXES
            artifact: Domain object, dict, DataFrame, str or bytes

        Returns:
            File contents
        """
        if isinstance(artifact, bytes):
            return artifact
        if isinstance(artifact, str):
            return artifact.encode("utf-8")
        if isinstance(artifact, PlanarCurve):
            return self._csv_text(curve_frame(artifact)).encode("utf-8")
        if isinstance(artifact, CurvatureProfile):
            return self._csv_text(profile_frame(artifact)).encode("utf-8")
        if isinstance(artifact, LiftedCurve):
            return self._csv_text(lifted_frame(artifact)).encode("utf-8")
        if isinstance(artifact, pd.DataFrame):
            return self._csv_text(artifact).encode("utf-8")
        if isinstance(artifact, dict):
            return dumps_json(artifact).encode("utf-8")
        raise TypeError(f"cannot serialize {type(artifact).__name__} for {key!r}")

    def output_paths(self, keys, out_prefix: str) -> Dict[str, Path]:
        """Deterministic file name per artifact key."""
        prefix = Path(out_prefix)
        if not prefix.is_absolute():
            prefix = self.export_dir / prefix
        paths = {}
        for key in keys:
            if key not in OUTPUT_SUFFIXES:
                raise KeyError(f"unknown artifact {key!r}")
            paths[key] = prefix.parent / (prefix.name + OUTPUT_SUFFIXES[key])
        return paths

    def write_outputs(self, artifacts: Dict[str, Any], out_prefix: str, force: bool = False) -> Dict[str, str]:
        """
        Write every artifact under ``<prefix><suffix>``.

        Nothing is written when a target exists and ``force`` is off.

        Args:
            artifacts: Mapping of artifact key to artifact
            out_prefix: Path prefix of the output files
            force: Overwrite existing files

        Returns:
            Mapping of artifact key to written path
        """
        paths = self.output_paths(artifacts.keys(), out_prefix)
        if not force:
            existing = [str(p) for p in paths.values() if p.exists()]
            if existing:
                raise FileExistsError(f"refusing to overwrite {', '.join(existing)} (use --force)")

        written = {}
        for key in sorted(artifacts):
            path = paths[key]
            data = self.render(key, artifacts[key])
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_bytes(data)
            except OSError as e:
                raise OSError(f"cannot write {path}: {e}") from e
            written[key] = str(path)
            logger.debug("wrote %s (%d bytes)", path, len(data))
        return written
