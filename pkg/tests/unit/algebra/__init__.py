"""Tests for supercocycle_kit.algebra package."""
