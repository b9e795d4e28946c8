"""Common step definitions shared across all integration tests."""

import tempfile
from pathlib import Path

import pytest
from pytest_bdd import given, parsers, when

from sdcodes import enumerate_all, field_ctx


@pytest.fixture
def test_context():
    """Shared test context for storing state between steps."""
    return {
        "temp_dir": None,
        "ctx": None,
        "codes": None,
        "report": None,
        "diff": None,
        "found": None,
        "sample": None,
        "result": None,
    }


@pytest.fixture
def temp_directory():
    """Create a temporary directory that is cleaned up after the test."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@given(parsers.parse("a field of degree {m:d}"))
def set_field(test_context, m):
    """Pick the default F_{2^m}."""
    test_context["ctx"] = field_ctx(m)


@given(parsers.parse("the self-dual codes of length 2^{s:d} have been enumerated"))
@when(parsers.parse("I enumerate the self-dual codes of length 2^{s:d}"))
def enumerate_codes(test_context, s):
    """Enumerate with dedup on."""
    ctx = test_context["ctx"]
    codes, report = enumerate_all(s, ctx.m, ctx=ctx)
    test_context["codes"] = codes
    test_context["report"] = report


def parse_datatable(datatable: list) -> list[dict]:
    """Parse a pytest-bdd datatable into a list of dicts.

    pytest-bdd passes datatables as list of lists where
    the first row contains the headers.
    """
    if not datatable:
        return []
    headers = datatable[0]
    return [dict(zip(headers, row, strict=True)) for row in datatable[1:]]
