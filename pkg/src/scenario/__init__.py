"""Scenario documents: schema, validation, loading and vector construction."""
from src.scenario.loader import Scenario, ScenarioQuery, build_vector, from_document, load
from src.scenario.queries import evaluate_queries

__all__ = ["Scenario", "ScenarioQuery", "build_vector", "evaluate_queries", "from_document", "load"]
