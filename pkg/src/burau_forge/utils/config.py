from dataclasses import dataclass, asdict, field
from pathlib import Path
from typing import Any, Dict, List, Optional
import logging
import os

import jsonschema
import yaml

from ..core.errors import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_FILE = Path("burau_forge.yaml")

ENV_THREADS = "BURAU_FORGE_THREADS"
ENV_LOG_LEVEL = "BURAU_FORGE_LOG_LEVEL"


@dataclass
class Settings:
    """Runtime knobs shared by the CLI and the scorecard"""
    threads: int = 4
    nf_max_len: int = 8
    explore_radius: int = 2
    explore_step_budget: int = 200000
    triangle_params: List[int] = field(default_factory=lambda: [2, 1])
    eigen_exponents: List[int] = field(default_factory=lambda: [-58854, 19618])
    log_level: str = "INFO"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class SettingsManager:
    """Loads settings from YAML, validates them and applies environment overrides"""

    SETTINGS_SCHEMA = {
        "type": "object",
        "additionalProperties": False,
        "properties": {
            "threads": {"type": "integer", "minimum": 1, "maximum": 256},
            "nf_max_len": {"type": "integer", "minimum": 0, "maximum": 64},
            "explore_radius": {"type": "integer", "minimum": 0, "maximum": 8},
            "explore_step_budget": {"type": "integer", "minimum": 1},
            "triangle_params": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2
            },
            "eigen_exponents": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2
            },
            "log_level": {
                "type": "string",
                "enum": ["DEBUG", "INFO", "WARNING", "ERROR"]
            }
        }
    }

    def __init__(self, settings_file: Optional[Path] = None, environ: Optional[Dict[str, str]] = None):
        self.settings_file = Path(settings_file) if settings_file else DEFAULT_SETTINGS_FILE
        self.environ = os.environ if environ is None else environ
        self.settings = self.load_settings()

    def load_settings(self) -> Settings:
        data: Dict[str, Any] = {}
        if self.settings_file.exists():
            try:
                with open(self.settings_file) as f:
                    data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigurationError(f"Cannot parse {self.settings_file}: {e}") from e
            self.validate(data)
            logger.debug(f"Loaded settings from {self.settings_file}")
        else:
            logger.debug(f"No settings file at {self.settings_file}, using defaults")

        settings = Settings(**data)
        self._apply_environment(settings)
        return settings

    def validate(self, data: Dict[str, Any]):
        try:
            jsonschema.validate(instance=data, schema=self.SETTINGS_SCHEMA)
        except jsonschema.ValidationError as e:
            key = ".".join(str(p) for p in e.path) or "<root>"
            raise ConfigurationError(f"Invalid setting '{key}': {e.message}") from e

    def _apply_environment(self, settings: Settings):
        threads = self.environ.get(ENV_THREADS)
        if threads:
            try:
                settings.threads = max(1, int(threads))
            except ValueError:
                raise ConfigurationError(f"{ENV_THREADS} must be an integer, got '{threads}'")
        level = self.environ.get(ENV_LOG_LEVEL)
        if level:
            level = level.upper()
            if level not in self.SETTINGS_SCHEMA["properties"]["log_level"]["enum"]:
                raise ConfigurationError(f"{ENV_LOG_LEVEL} has unknown level '{level}'")
            settings.log_level = level

    def save_settings(self, path: Optional[Path] = None):
        target = Path(path) if path else self.settings_file
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            with open(target, 'w') as f:
                yaml.safe_dump(self.settings.to_dict(), f, sort_keys=True)
        except OSError:
            logger.exception("Error saving settings:")
            raise
