"""Evaluation of the expectations bundled with a scenario."""
from typing import Optional

import pandas as pd

from src.epistemic.semantics import holds
from src.epistemic.state import StateVector
from src.scenario.loader import Scenario, build_vector
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


def evaluate_queries(scenario: Scenario, vector: Optional[StateVector] = None) -> pd.DataFrame:
    vector = vector or build_vector(scenario)
    rows = []
    for query in scenario.queries:
        actual = holds(vector, query.formula)
        rows.append({
            "formula": query.text,
            "expect": query.expect,
            "actual": actual,
            "ok": actual == query.expect,
        })
        if actual != query.expect:
            logger.warning(f"{scenario.source}: {query.text} is {actual}, expected {query.expect}")
    return pd.DataFrame(rows, columns=["formula", "expect", "actual", "ok"])
