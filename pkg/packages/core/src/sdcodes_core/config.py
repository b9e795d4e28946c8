"""Configuration schema for sdcodes.

Config file:
    ~/.config/sdcodes/config.yaml

A missing file means defaults; `sdcodes config --init` writes the template.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from sdcodes_core.errors import ConfigError


def get_config_dir() -> Path:
    """Get config directory, respecting XDG_CONFIG_HOME."""
    xdg_config = os.environ.get("XDG_CONFIG_HOME")
    if xdg_config:
        return Path(xdg_config) / "sdcodes"
    return Path.home() / ".config" / "sdcodes"


CONFIG_TEMPLATE = """\
# sdcodes configuration

field:
  # Override the built-in irreducible polynomial for a given m.
  # Bits are written constant term first, e.g. x^3 + x^2 + 1 -> "1011".
  moduli: {}

enumerate:
  # Refuse to enumerate when 1 + N + N' exceeds this
  max_codes: 1000000
  # Drop codes whose span was already emitted
  dedup: true
  # Threads for independent enumeration cells
  workers: 1

oracle:
  # Exhaustive sweep limits
  max_s: 2
  max_m: 1
  max_spans: 10000000
  # Branch-aware sampler
  sample_cap: 100000
  seed: 20240

logging:
  # Overridden by SDCODES_LOG_LEVEL
  level: WARNING
"""


@dataclass
class FieldSettings:
    """Base-field settings."""

    moduli: dict[int, str] = field(default_factory=dict)

    def modulus_bits(self, m: int) -> list[int] | None:
        """Configured modulus for m as constant-first bits, if any."""
        text = self.moduli.get(m)
        if text is None:
            return None
        return parse_bits(text)


@dataclass
class EnumerateSettings:
    """Enumeration budget and execution settings."""

    max_codes: int = 1_000_000
    dedup: bool = True
    workers: int = 1


@dataclass
class OracleSettings:
    """Exhaustive sweep and sampler settings."""

    max_s: int = 2
    max_m: int = 1
    max_spans: int = 10_000_000
    sample_cap: int = 100_000
    seed: int = 20240


@dataclass
class LoggingSettings:
    """Logging settings."""

    level: str = "WARNING"

    def __post_init__(self) -> None:
        """Allow env var override for the level."""
        env_level = os.environ.get("SDCODES_LOG_LEVEL")
        if env_level:
            self.level = env_level
        self.level = self.level.upper()


@dataclass
class SdcodesConfig:
    """sdcodes configuration (config.yaml)."""

    base_field: FieldSettings = field(default_factory=FieldSettings)
    enumeration: EnumerateSettings = field(default_factory=EnumerateSettings)
    oracle: OracleSettings = field(default_factory=OracleSettings)
    logging: LoggingSettings = field(default_factory=LoggingSettings)

    @classmethod
    def get_config_path(cls) -> Path:
        """Get the default config path."""
        return get_config_dir() / "config.yaml"

    @classmethod
    def load(cls, config_path: Path | None = None) -> SdcodesConfig:
        """Load config from file or return defaults.

        Raises:
            ConfigError: If the file is not valid YAML or has the wrong shape.
        """
        if config_path is None:
            config_path = cls.get_config_path()

        if not config_path.exists():
            return cls()

        try:
            with open(config_path) as f:
                data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML in {config_path}: {e}") from e

        if not isinstance(data, dict):
            raise ConfigError(f"Config root must be a mapping: {config_path}")
        return cls._from_dict(data)

    @classmethod
    def bootstrap(cls, config_path: Path | None = None) -> Path:
        """Create default config file.

        Returns:
            Path to the created config file.
        """
        if config_path is None:
            config_path = cls.get_config_path()

        config_path.parent.mkdir(parents=True, exist_ok=True)
        config_path.write_text(CONFIG_TEMPLATE)
        return config_path

    @classmethod
    def _from_dict(cls, data: dict[str, Any]) -> SdcodesConfig:
        """Parse config from dict."""
        field_data = data.get("field") or {}
        enum_data = data.get("enumerate") or {}
        oracle_data = data.get("oracle") or {}
        log_data = data.get("logging") or {}

        try:
            moduli = {int(m): str(bits) for m, bits in (field_data.get("moduli") or {}).items()}
        except (TypeError, ValueError, AttributeError) as e:
            raise ConfigError(f"field.moduli must map integers to bit strings: {e}") from e
        for bits in moduli.values():
            parse_bits(bits)

        return cls(
            base_field=FieldSettings(moduli=moduli),
            enumeration=EnumerateSettings(
                max_codes=int(enum_data.get("max_codes", 1_000_000)),
                dedup=bool(enum_data.get("dedup", True)),
                workers=int(enum_data.get("workers", 1)),
            ),
            oracle=OracleSettings(
                max_s=int(oracle_data.get("max_s", 2)),
                max_m=int(oracle_data.get("max_m", 1)),
                max_spans=int(oracle_data.get("max_spans", 10_000_000)),
                sample_cap=int(oracle_data.get("sample_cap", 100_000)),
                seed=int(oracle_data.get("seed", 20240)),
            ),
            logging=LoggingSettings(level=str(log_data.get("level", "WARNING"))),
        )

    def to_dict(self) -> dict[str, Any]:
        """Plain-dict view, as printed by `sdcodes config`."""
        return {
            "field": {"moduli": dict(self.base_field.moduli)},
            "enumerate": {
                "max_codes": self.enumeration.max_codes,
                "dedup": self.enumeration.dedup,
                "workers": self.enumeration.workers,
            },
            "oracle": {
                "max_s": self.oracle.max_s,
                "max_m": self.oracle.max_m,
                "max_spans": self.oracle.max_spans,
                "sample_cap": self.oracle.sample_cap,
                "seed": self.oracle.seed,
            },
            "logging": {"level": self.logging.level},
        }


def parse_bits(text: str) -> list[int]:
    """Parse a constant-first bit string such as "1101".

    Raises:
        ConfigError: If the string contains anything but 0 and 1.
    """
    text = text.strip()
    if not text or any(ch not in "01" for ch in text):
        raise ConfigError(f"Expected a bit string of 0/1 characters, got {text!r}")
    return [int(ch) for ch in text]
