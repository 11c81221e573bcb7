"""
Explanation synthesis and preference orders.

Candidates are scored by truthfulness (the explainer believes α), letter
count, Hamming plausibility against the explainer's model of the explainee,
and semantic minimality within the explanation set. A PreferenceOrder
compares scores lexicographically; ties keep canonical pool order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

import pandas as pd

from src.errors import ModalFormulaNotAllowed, NoLawConsistentModel, RevisionError
from src.epistemic.revision import to_rnf
from src.epistemic.semantics import truth_at
from src.epistemic.state import EpistemicState, StateVector
from src.epistemic.valuations import Signature
from src.explain.pool import FormulaPool
from src.explain.predicates import is_explanation, is_subjective_explanation, vocabulary_of
from src.logic.formula import Formula, is_modal_free, is_top, letter_count
from src.logic.parser import render
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

CRITERIA = ("truthfulness", "min_letters", "semantic_minimality", "plausibility")
DEFAULT_ORDER = "truthfulness,min_letters,plausibility"


def candidate_letters(formula: Formula) -> int:
    """Letter count, with the canonical `true` scoring zero."""
    return 0 if is_top(formula) else letter_count(formula)


def plausibility_distance(state: EpistemicState, alpha: Formula) -> int:
    """
    Fewest symbol flips from a world of `state` to a law-consistent model of
    α's propositional part; 0 when α is already possible for the agent.
    """
    rnf = to_rnf(alpha)
    sig = state.signature
    target = sig.models(state.laws + rnf.propositional)
    if not target:
        raise NoLawConsistentModel(f"{render(alpha, sig.symbols)} has no model consistent with the laws")
    if not state.worlds:
        return 0
    return sig.min_distance(state.worlds, target)


def semantically_minimal(
    candidates: Sequence[Formula],
    alpha: Formula,
    signature: Signature,
    laws: Iterable[Formula] = (),
) -> bool:
    """Every other candidate entails α under the laws."""
    for f in list(candidates) + [alpha]:
        if not is_modal_free(f):
            raise ModalFormulaNotAllowed(f"semantic minimality over modal candidate {f!r}")
    laws = tuple(laws)
    return all(signature.entails(laws + (c,), alpha) for c in candidates if c != alpha)


@dataclass(frozen=True)
class ExplanationResult:
    candidate: Formula
    objective: bool
    subjective_for: frozenset[str]
    letters: int
    plausibility: Optional[int]
    truthful: bool
    minimality: Optional[int] = None
    position: int = 0

    def text(self, vocabulary: Optional[Iterable[str]] = None) -> str:
        return render(self.candidate, vocabulary)


@dataclass(frozen=True)
class PreferenceOrder:
    """Lexicographic combination of criteria; a single criterion is the degenerate case."""

    criteria: tuple[str, ...] = field(default=tuple(DEFAULT_ORDER.split(",")))

    def __post_init__(self) -> None:
        unknown = [c for c in self.criteria if c not in CRITERIA]
        if unknown or not self.criteria:
            raise ValueError(
                f"Unknown preference criteria {unknown}. Expected a comma list of: {', '.join(CRITERIA)}"
            )

    @classmethod
    def parse(cls, text: str) -> "PreferenceOrder":
        if text.strip() == "lexicographic":
            return cls()
        return cls(tuple(part.strip() for part in text.split(",") if part.strip()))

    @property
    def kind(self) -> str:
        return self.criteria[0] if len(self.criteria) == 1 else "lexicographic"

    @property
    def needs_minimality(self) -> bool:
        return "semantic_minimality" in self.criteria

    def key(self, result: ExplanationResult) -> tuple:
        scores = {
            "truthfulness": 0 if result.truthful else 1,
            "min_letters": result.letters,
            "plausibility": math.inf if result.plausibility is None else result.plausibility,
            "semantic_minimality": math.inf if result.minimality is None else result.minimality,
        }
        return tuple(scores[c] for c in self.criteria)

    def rank(
        self,
        results: Sequence[ExplanationResult],
        signature: Signature,
        laws: Iterable[Formula] = (),
    ) -> list[ExplanationResult]:
        results = list(results)
        if self.needs_minimality:
            results = with_minimality(results, signature, laws)
        return sorted(results, key=lambda r: (self.key(r), r.position))

    def __str__(self) -> str:
        return ",".join(self.criteria)


def with_minimality(
    results: Sequence[ExplanationResult], signature: Signature, laws: Iterable[Formula] = ()
) -> list[ExplanationResult]:
    """
    Score each result by how many other explanations fail to entail it (0 = minimal).

    Only modal-free explanations are compared; a modal candidate keeps
    minimality None and sorts after every scored one.
    """
    laws = tuple(laws)
    candidates = [r.candidate for r in results if is_modal_free(r.candidate)]
    scored = []
    for r in results:
        if not is_modal_free(r.candidate):
            scored.append(replace(r, minimality=None))
            continue
        misses = sum(
            1 for c in candidates if c != r.candidate and not signature.entails(laws + (c,), r.candidate)
        )
        scored.append(replace(r, minimality=misses))
    return scored


def optimal_explanations(
    results: Sequence[ExplanationResult], order: Optional[PreferenceOrder] = None
) -> list[ExplanationResult]:
    """The first-rank block of an already ranked list."""
    if not results:
        return []
    order = order or PreferenceOrder()
    best = order.key(results[0])
    return [r for r in results if order.key(r) == best]


def _plausibility(state: EpistemicState, alpha: Formula) -> Optional[int]:
    try:
        return plausibility_distance(state, alpha)
    except NoLawConsistentModel:
        return None


def _admits(check, *args) -> bool:
    """Run an explanation check, counting a candidate the engine cannot revise by as a failure."""
    try:
        return check(*args)
    except RevisionError as e:
        logger.debug(f"candidate {args[-2]!r} skipped: {type(e).__name__}: {e}")
        return False


def synthesize(
    vector: StateVector,
    explainer: str,
    explainee: str,
    beta: Formula,
    pool: FormulaPool,
    order: Optional[PreferenceOrder] = None,
) -> list[ExplanationResult]:
    """
    Subjective explanations of β for `explainee` from `explainer`'s
    perspective, ranked by `order`; the first block is optimal within the pool.
    """
    order = order or PreferenceOrder()
    explainer_state = vector[explainer]
    explainee_model = explainer_state.model_of(explainee)

    results = []
    for position, alpha in enumerate(pool):
        if not _admits(is_subjective_explanation, vector, explainer, explainee, alpha, beta):
            continue
        results.append(
            ExplanationResult(
                candidate=alpha,
                objective=_admits(is_explanation, vector, explainee, alpha, beta),
                subjective_for=frozenset(
                    a for a in vector.agents
                    if _admits(is_subjective_explanation, vector, a, explainee, alpha, beta)
                ),
                letters=candidate_letters(alpha),
                plausibility=_plausibility(explainee_model, alpha),
                truthful=truth_at(explainer_state, alpha),
                position=position,
            )
        )

    ranked = order.rank(results, explainer_state.signature, explainer_state.laws)
    logger.info(
        f"{explainer} -> {explainee}: {len(ranked)} of {len(pool)} candidates explain "
        f"{render(beta, vocabulary_of(vector))} (order {order})"
    )
    return ranked


def rank_objective(
    vector: StateVector,
    explainee: str,
    beta: Formula,
    pool: FormulaPool,
    order: Optional[PreferenceOrder] = None,
    explainer: Optional[str] = None,
) -> list[ExplanationResult]:
    """
    Objective explanations of β for `explainee`, ranked the same way.

    Truthfulness is judged by `explainer` when given, else by the explainee;
    plausibility is measured on the explainee's own state.
    """
    order = order or PreferenceOrder()
    judge = vector[explainer or explainee]
    own = vector[explainee]

    results = [
        ExplanationResult(
            candidate=alpha,
            objective=True,
            subjective_for=frozenset(),
            letters=candidate_letters(alpha),
            plausibility=_plausibility(own, alpha),
            truthful=truth_at(judge, alpha),
            position=position,
        )
        for position, alpha in enumerate(pool)
        if _admits(is_explanation, vector, explainee, alpha, beta)
    ]
    return order.rank(results, own.signature, own.laws)


def results_frame(
    results: Sequence[ExplanationResult], vocabulary: Optional[Iterable[str]] = None
) -> pd.DataFrame:
    vocabulary = tuple(vocabulary) if vocabulary is not None else None
    frame = pd.DataFrame(
        [
            {
                "rank": n,
                "candidate": r.text(vocabulary),
                "subjective": True,
                "objective": r.objective,
                "letters": r.letters,
                "plausibility": r.plausibility,
                "truthful": r.truthful,
            }
            for n, r in enumerate(results, start=1)
        ],
        columns=["rank", "candidate", "subjective", "objective", "letters", "plausibility", "truthful"],
    )
    # Nullable integers keep `plausibility` integral when some entry is missing.
    frame["plausibility"] = frame["plausibility"].astype("Int64")
    return frame
