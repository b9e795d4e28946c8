"""Test module for the command-line workflow."""

from pytest_bdd import scenarios

scenarios("../features/cli.feature")
