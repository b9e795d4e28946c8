"""Test module for the length-8 classification."""

from pytest_bdd import scenarios

scenarios("../features/table1.feature")
