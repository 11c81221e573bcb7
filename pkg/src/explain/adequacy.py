"""
Adequacy of one agent's model of another.

i's model of j is adequate for β when, over the pool, the explanations i
believes work for j are exactly the ones that objectively work for j.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from src.epistemic.state import StateVector
from src.explain.pool import FormulaPool
from src.explain.predicates import is_explanation, is_subjective_explanation
from src.logic.formula import Formula
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class AdequacyVerdict:
    adequate: bool
    witnesses: tuple[Formula, ...] = ()
    spurious: tuple[Formula, ...] = field(default=())  # subjectively but not objectively
    missed: tuple[Formula, ...] = field(default=())  # objectively but not subjectively

    def __bool__(self) -> bool:
        return self.adequate


def is_adequate(vector: StateVector, i: str, j: str, beta: Formula, pool: FormulaPool) -> AdequacyVerdict:
    spurious: list[Formula] = []
    missed: list[Formula] = []
    witnesses: list[Formula] = []
    for alpha in pool:
        subjective = is_subjective_explanation(vector, i, j, alpha, beta)
        objective = is_explanation(vector, j, alpha, beta)
        if subjective == objective:
            continue
        witnesses.append(alpha)
        (spurious if subjective else missed).append(alpha)

    verdict = AdequacyVerdict(not witnesses, tuple(witnesses), tuple(spurious), tuple(missed))
    logger.info(
        f"{i}'s model of {j}: {'adequate' if verdict.adequate else 'inadequate'} "
        f"({len(spurious)} spurious, {len(missed)} missed of {len(pool)})"
    )
    return verdict
