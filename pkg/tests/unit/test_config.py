"""Test configuration loading."""

from pathlib import Path

import pytest
import yaml

from sdcodes_core import ConfigError
from sdcodes_core.config import (
    EnumerateSettings,
    LoggingSettings,
    OracleSettings,
    SdcodesConfig,
    get_config_dir,
    parse_bits,
)


def test_enumerate_settings_defaults():
    """Test EnumerateSettings has expected defaults."""
    settings = EnumerateSettings()
    assert settings.max_codes == 1_000_000
    assert settings.dedup is True
    assert settings.workers == 1


def test_oracle_settings_defaults():
    """Test OracleSettings has expected defaults."""
    settings = OracleSettings()
    assert (settings.max_s, settings.max_m) == (2, 1)
    assert settings.max_spans == 10_000_000
    assert settings.sample_cap == 100_000


def test_log_level_env_override(monkeypatch: pytest.MonkeyPatch):
    """SDCODES_LOG_LEVEL wins over the file and is upper-cased."""
    monkeypatch.setenv("SDCODES_LOG_LEVEL", "debug")
    assert LoggingSettings(level="ERROR").level == "DEBUG"


def test_missing_file_gives_defaults(temp_dir: Path):
    """No file, no error."""
    config = SdcodesConfig.load(temp_dir / "absent.yaml")
    assert config.enumeration.max_codes == 1_000_000
    assert config.base_field.moduli == {}


def test_load(temp_dir: Path):
    """Test loading config from YAML file."""
    config_path = temp_dir / "config.yaml"
    config_data = {
        "field": {"moduli": {3: "1101"}},
        "enumerate": {"max_codes": 500, "dedup": False, "workers": 4},
        "oracle": {"max_s": 1, "seed": 7},
        "logging": {"level": "info"},
    }
    with open(config_path, "w") as f:
        yaml.dump(config_data, f)

    config = SdcodesConfig.load(config_path)

    assert config.base_field.modulus_bits(3) == [1, 1, 0, 1]
    assert config.base_field.modulus_bits(2) is None
    assert config.enumeration.max_codes == 500
    assert config.enumeration.dedup is False
    assert config.enumeration.workers == 4
    assert config.oracle.max_s == 1
    assert config.oracle.max_m == 1
    assert config.oracle.seed == 7
    assert config.logging.level == "INFO"


def test_invalid_yaml(temp_dir: Path):
    """Broken YAML is a ConfigError."""
    config_path = temp_dir / "config.yaml"
    config_path.write_text("enumerate: [unclosed\n")
    with pytest.raises(ConfigError, match="Invalid YAML"):
        SdcodesConfig.load(config_path)


def test_root_must_be_mapping(temp_dir: Path):
    """A bare list is rejected."""
    config_path = temp_dir / "config.yaml"
    config_path.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigError, match="mapping"):
        SdcodesConfig.load(config_path)


def test_bad_modulus_bits(temp_dir: Path):
    """Moduli must be 0/1 strings."""
    config_path = temp_dir / "config.yaml"
    config_path.write_text('field:\n  moduli:\n    2: "1x1"\n')
    with pytest.raises(ConfigError, match="bit string"):
        SdcodesConfig.load(config_path)


def test_parse_bits():
    """Constant term first."""
    assert parse_bits(" 1011 ") == [1, 0, 1, 1]
    with pytest.raises(ConfigError):
        parse_bits("")


def test_bootstrap_writes_template(temp_dir: Path):
    """The template loads back as the defaults."""
    path = SdcodesConfig.bootstrap(temp_dir / "sub" / "config.yaml")
    assert path.exists()
    assert SdcodesConfig.load(path).to_dict() == SdcodesConfig().to_dict()


def test_to_dict_loads_back(temp_dir: Path):
    """What `config` prints is a valid config file."""
    config = SdcodesConfig()
    config.enumeration.workers = 3
    config.base_field.moduli[3] = "1101"
    path = temp_dir / "config.yaml"
    path.write_text(yaml.safe_dump(config.to_dict(), sort_keys=False))
    assert SdcodesConfig.load(path).to_dict() == config.to_dict()


def test_config_dir_respects_xdg(temp_dir: Path):
    """The autouse fixture points XDG_CONFIG_HOME into the temp dir."""
    assert get_config_dir() == temp_dir / "xdg" / "sdcodes"
    assert SdcodesConfig.get_config_path() == temp_dir / "xdg" / "sdcodes" / "config.yaml"
