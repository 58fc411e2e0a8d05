"""Tests for the possibilist engine."""
