"""Tests for scenario loading and validation."""
