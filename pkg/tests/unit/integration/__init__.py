"""Tests for supercocycle_kit.integration package."""
