"""Shared pytest fixtures."""

import tempfile
from pathlib import Path

import numpy as np
import pytest

from sdcodes import FieldCtx, field_ctx

# Register step definition modules as pytest plugins (must be at root conftest)
pytest_plugins = [
    "tests.integration.steps.common",
    "tests.integration.steps.table_steps",
    "tests.integration.steps.cli_steps",
    "tests.integration.steps.oracle_steps",
]


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def gf2() -> FieldCtx:
    """F_2."""
    return field_ctx(1)


@pytest.fixture
def gf4() -> FieldCtx:
    """F_4 = F_2[α]/(α² + α + 1)."""
    return field_ctx(2)


@pytest.fixture
def gf8() -> FieldCtx:
    """F_8 = F_2[α]/(α³ + α + 1)."""
    return field_ctx(3)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so randomized checks are reproducible."""
    return np.random.default_rng(20240)


@pytest.fixture(autouse=True)
def isolated_config(temp_dir: Path, monkeypatch: pytest.MonkeyPatch):
    """Keep tests away from the user's ~/.config/sdcodes."""
    monkeypatch.setenv("XDG_CONFIG_HOME", str(temp_dir / "xdg"))
    monkeypatch.delenv("SDCODES_LOG_LEVEL", raising=False)
