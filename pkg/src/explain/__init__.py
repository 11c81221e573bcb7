"""Explanation predicates, synthesis, discrepancies and adequacy."""
from src.explain.adequacy import AdequacyVerdict, is_adequate
from src.explain.discrepancy import find_discrepancies, resolves_discrepancy
from src.explain.pool import FormulaPool
from src.explain.predicates import (
    expand_expl,
    explains_for_all,
    explains_jointly,
    is_explanation,
    is_possibility_explanation,
    is_private_explanation,
    is_subjective_explanation,
    is_subjectively_truthful,
    mediator_misjudges,
    nested_explanation_holds,
)
from src.explain.ranking import (
    ExplanationResult,
    PreferenceOrder,
    optimal_explanations,
    plausibility_distance,
    rank_objective,
    semantically_minimal,
    synthesize,
)

__all__ = [
    "AdequacyVerdict",
    "ExplanationResult",
    "FormulaPool",
    "PreferenceOrder",
    "expand_expl",
    "explains_for_all",
    "explains_jointly",
    "find_discrepancies",
    "is_adequate",
    "is_explanation",
    "is_possibility_explanation",
    "is_private_explanation",
    "is_subjective_explanation",
    "is_subjectively_truthful",
    "mediator_misjudges",
    "nested_explanation_holds",
    "optimal_explanations",
    "plausibility_distance",
    "rank_objective",
    "resolves_discrepancy",
    "semantically_minimal",
    "synthesize",
]
