"""Tests for the reference semantics and theorem harnesses."""
