"""Tests for supercocycle_kit.linfty package."""
