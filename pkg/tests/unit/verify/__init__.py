"""Tests for supercocycle_kit.verify package."""
