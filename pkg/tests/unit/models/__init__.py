"""Tests for supercocycle_kit.models package."""
