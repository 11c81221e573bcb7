"""Test suite for the epistemic explanation engine."""
