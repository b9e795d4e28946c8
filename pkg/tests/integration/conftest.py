"""Pytest configuration for integration tests."""

import pytest
from typer.testing import CliRunner


@pytest.fixture
def cli_runner() -> CliRunner:
    """Runner for invoking the sdcodes app in-process."""
    return CliRunner()
