"""Brute-force verification: reference semantics and theorem harnesses."""
