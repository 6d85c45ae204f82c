"""Configuration management."""
import copy
import logging
import math
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)


class Config:
    """Application configuration manager."""

    def __init__(self, config_path: Optional[str] = "config.yaml"):
        """
        Initialize configuration.

        Args:
            config_path: Path to a YAML file or a flat key=value file.
                None means built-in defaults only.
        """
        self.config_path = Path(config_path) if config_path else None
        self.config = self._load_config()

    def _load_config(self) -> Dict:
        """Load configuration from file, layered over the defaults."""
        config = self._default_config()
        if self.config_path is None or not self.config_path.exists():
            return config

        try:
            with open(self.config_path, 'r') as f:
                text = f.read()
        except OSError as e:
            logger.warning("Error loading config %s: %s. Using defaults.", self.config_path, e)
            return config

        if self.config_path.suffix in (".yaml", ".yml"):
            loaded = yaml.safe_load(text) or {}
            if not isinstance(loaded, dict):
                logger.warning("Config %s is not a mapping. Using defaults.", self.config_path)
                return config
            self._merge(config, loaded)
        else:
            for key, value in self._parse_flat(text).items():
                self._set(config, key, value)
        return config

    @staticmethod
    def _parse_flat(text: str) -> Dict[str, Any]:
        """Parse flat ``key=value`` lines; values are typed through YAML."""
        entries = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ValueError(f"line {lineno}: expected key=value, got {raw!r}")
            key, value = (part.strip() for part in line.split('=', 1))
            if not key:
                raise ValueError(f"line {lineno}: empty key")
            entries[key] = yaml.safe_load(value) if value else None
        return entries

    @staticmethod
    def _merge(base: Dict, override: Dict):
        for k, v in override.items():
            if isinstance(v, dict) and isinstance(base.get(k), dict):
                Config._merge(base[k], v)
            else:
                base[k] = v

    @staticmethod
    def _set(config: Dict, key: str, value: Any):
        keys = key.split('.')
        node = config
        for k in keys[:-1]:
            if not isinstance(node.get(k), dict):
                node[k] = {}
            node = node[k]
        node[keys[-1]] = value

    @staticmethod
    def _default_config() -> Dict:
        """Get default configuration."""
        return copy.deepcopy({
            "sampling": {
                "curve_samples": 2048,
                "margin_fraction": 1e-3,
                # Exp family: lower truncation where |kappa| < exp_tail_kappa * a
                "exp_tail_kappa": 1e-3,
            },
            "solver": {
                "nodes": 128,
                "max_iters": 2000,
                "step0": 1.0,
                "tol": 1e-10,
                "metric": "sobolev",
            },
            "surface": {
                "n_s": 2048,
                "n_angle": 64,
                "sector": 2 * math.pi,
            },
            "thresholds": {
                "first_integral": 1e-4,
                "el": 1e-3,
                "killing_norm": 1e-4,
                "unit_speed": 1e-4,
                "gaussian_curvature": 1e-3,
                "fitted_first_integral": 1e-2,
            },
            "sweep": {
                "workers": 0,
            },
            "export": {
                "directory": ".",
                "float_format": "%.17g",
                "obj_digits": 9,
            },
        })

    def get(self, key: str, default: Optional[Any] = None) -> Any:
        """
        Get configuration value by key (supports dot notation).

        Args:
            key: Configuration key (e.g., 'solver.max_iters')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        keys = key.split('.')
        value = self.config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def get_thresholds(self) -> Dict:
        """Get residual thresholds configuration."""
        return self.config.get("thresholds", {})

    def get_solver_config(self) -> Dict:
        """Get completion solver configuration."""
        return self.config.get("solver", {})

    def get_sampling_config(self) -> Dict:
        """Get curve sampling configuration."""
        return self.config.get("sampling", {})

    def get_export_config(self) -> Dict:
        """Get export configuration."""
        return self.config.get("export", {})
