"""Tests for the satrep rate simulator."""
