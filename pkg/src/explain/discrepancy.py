"""Belief discrepancies between agents, objective or seen from a perspective agent."""
from __future__ import annotations

from typing import Iterable, Optional

from src.epistemic.revision import to_rnf
from src.epistemic.semantics import holds
from src.epistemic.state import StateVector
from src.logic.formula import AfterRevision, And, Believes, Formula, Not
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


def discrepancy_formula(i: str, j: str, beta: Formula, perspective: Optional[str] = None) -> Formula:
    clash = And(Believes(i, beta), Believes(j, Not(beta)))
    return clash if perspective is None else Believes(perspective, clash)


def find_discrepancies(
    vector: StateVector,
    i: str,
    j: str,
    pool: Iterable[Formula],
    perspective: Optional[str] = None,
) -> list[Formula]:
    """Pool formulas β with B_i β ∧ B_j ¬β, objectively or inside B_perspective."""
    found = [beta for beta in pool if holds(vector, discrepancy_formula(i, j, beta, perspective))]
    where = f" from {perspective}'s perspective" if perspective else ""
    logger.debug(f"{len(found)} discrepancies between {i} and {j}{where}")
    return found


def resolves_discrepancy(vector: StateVector, i: str, j: str, alpha: Formula, beta: Formula) -> bool:
    """From i's perspective, after revising by α agent j no longer believes ¬β."""
    to_rnf(alpha)
    return holds(vector, Believes(i, AfterRevision(j, alpha, Not(Believes(j, Not(beta))))))
