"""Tests for supercocycle_kit.superalgebra package."""
