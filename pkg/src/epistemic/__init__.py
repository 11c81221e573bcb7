"""Epistemic states, revision and the satisfaction relation."""
