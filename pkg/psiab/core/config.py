"""Configuration management."""

import logging
import os
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

PACKAGE_DEFAULTS = Path(__file__).resolve().parent.parent / "config" / "defaults.yaml"
TOLERANCE_ENV = "PSIAB_TOL"
CONFIG_DIR_ENV = "PSIAB_CONFIG_DIR"


@dataclass(frozen=True)
class Settings:
    """Tolerances, sample counts and solver budgets."""
    function_tol: float = 1e-12
    dilog_rel_tol: float = 1e-13
    root_tol: float = 1e-12
    quad_tol: float = 1e-12
    containment_tol: float = 1e-10
    sharpness_tol: float = 1e-6
    polygon_samples: int = 4096
    circle_samples: int = 4096
    boundary_eps: float = 1e-9
    monotonicity_probes: int = 16
    max_iterations: int = 200
    quad_limit: int = 200

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


_FIELD_MAP = {
    ("tolerances", "function"): "function_tol",
    ("tolerances", "dilog_relative"): "dilog_rel_tol",
    ("tolerances", "root"): "root_tol",
    ("tolerances", "quadrature"): "quad_tol",
    ("tolerances", "containment"): "containment_tol",
    ("tolerances", "sharpness"): "sharpness_tol",
    ("sampling", "polygon"): "polygon_samples",
    ("sampling", "circle"): "circle_samples",
    ("sampling", "boundary_epsilon"): "boundary_eps",
    ("sampling", "monotonicity_probes"): "monotonicity_probes",
    ("solver", "max_iterations"): "max_iterations",
    ("solver", "quadrature_limit"): "quad_limit",
}


def default_config_dir() -> Path:
    override = os.getenv(CONFIG_DIR_ENV)
    if override:
        return Path(override)
    return Path.home() / ".config" / "psiab"


class ConfigManager:
    """Loads packaged defaults, the user settings file and environment overrides."""

    def __init__(self, config_dir: Optional[Path] = None):
        """Initialize the ConfigManager.

        Args:
            config_dir (Path, optional): Directory holding ``settings.yaml`` and ``.env``
        """
        self.config_dir = Path(config_dir) if config_dir else default_config_dir()
        self.settings = Settings()
        self.load_configurations()

    def load_configurations(self) -> None:
        """Load all configuration layers in order of precedence."""
        values: Dict[str, Any] = {}
        values.update(self._read_layer(PACKAGE_DEFAULTS))

        user_file = self.config_dir / "settings.yaml"
        if user_file.exists():
            try:
                values.update(self._read_layer(user_file))
            except (yaml.YAMLError, TypeError, ValueError) as e:
                # Fall back to packaged defaults
                logger.warning("Error loading %s: %s; using defaults", user_file, e)
                values = self._read_layer(PACKAGE_DEFAULTS)

        env_file = self.config_dir / ".env"
        if env_file.exists():
            load_dotenv(env_file, override=False)

        tol = os.getenv(TOLERANCE_ENV)
        if tol:
            try:
                parsed = float(tol)
            except ValueError:
                logger.warning("Ignoring %s=%r: not a number", TOLERANCE_ENV, tol)
            else:
                if parsed > 0:
                    values["root_tol"] = parsed
                    values["quad_tol"] = parsed
                else:
                    logger.warning("Ignoring %s=%r: must be positive", TOLERANCE_ENV, tol)

        self.settings = replace(Settings(), **values)

    @staticmethod
    def _read_layer(path: Path) -> Dict[str, Any]:
        """Flatten one YAML file into Settings keyword arguments."""
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
        if not isinstance(raw, dict):
            raise TypeError(f"{path} must hold a mapping")

        values: Dict[str, Any] = {}
        for (section, key), name in _FIELD_MAP.items():
            block = raw.get(section) or {}
            if key in block:
                kind = type(getattr(Settings, name))
                values[name] = kind(block[key])
        return values

    def reload(self) -> Settings:
        """Reload every layer and reset the process-wide cache."""
        global _cached
        self.load_configurations()
        _cached = self.settings
        return self.settings


_cached: Optional[Settings] = None


def get_settings() -> Settings:
    """Return the process-wide settings, loading them on first use."""
    global _cached
    if _cached is None:
        _cached = ConfigManager().settings
    return _cached


def resolve(settings: Optional[Settings]) -> Settings:
    return settings if settings is not None else get_settings()


def use_settings(settings: Settings) -> None:
    """Install ``settings`` as the process-wide default."""
    global _cached
    _cached = settings
