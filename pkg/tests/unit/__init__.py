"""Unit tests for supercocycle-kit."""
