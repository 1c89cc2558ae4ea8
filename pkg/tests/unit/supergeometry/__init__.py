"""Tests for supercocycle_kit.supergeometry package."""
