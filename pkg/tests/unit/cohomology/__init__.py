"""Tests for supercocycle_kit.cohomology package."""
