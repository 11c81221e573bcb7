"""Tests for the formula language."""
