"""Tests for explanation predicates, ranking and adequacy."""
