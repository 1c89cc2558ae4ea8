"""Tests for supercocycle_kit.spacetime package."""
