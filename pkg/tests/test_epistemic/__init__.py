"""Tests for states, revision and semantics."""
