"""Tests for supercocycle-kit."""
