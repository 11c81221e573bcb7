"""
Explanation predicates evaluated over a StateVector.

Expl(i, α, β) abbreviates [α]_i (B_i β ∧ ¬B_i false): after revising by α,
agent i believes β and is still consistent. Every predicate here builds the
corresponding agent formula and hands it to `holds`.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from src.epistemic.revision import to_rnf
from src.epistemic.semantics import holds, truth_at
from src.epistemic.state import StateVector
from src.logic.formula import AfterRevision, And, Believes, Formula, Not, atoms, bottom


def vocabulary_of(vector: StateVector) -> tuple[str, ...]:
    if not vector.states:
        return ()
    return vector.states[0][1].signature.symbols


def expand_expl(i: str, alpha: Formula, beta: Formula, vocabulary: Iterable[str]) -> Formula:
    """`false` is the canonical contradiction over `vocabulary`, normally the scenario's."""
    return AfterRevision(i, alpha, And(Believes(i, beta), Not(Believes(i, bottom(vocabulary)))))


def _expl(vector: StateVector, i: str, alpha: Formula, beta: Formula) -> Formula:
    to_rnf(alpha)
    return expand_expl(i, alpha, beta, vocabulary_of(vector) or atoms(alpha) | atoms(beta))


def is_explanation(vector: StateVector, i: str, alpha: Formula, beta: Formula) -> bool:
    return holds(vector, _expl(vector, i, alpha, beta))


def is_subjective_explanation(
    vector: StateVector, i: str, j: str, alpha: Formula, beta: Formula
) -> bool:
    """α explains β for j from i's perspective: B_i Expl(j, α, β)."""
    return holds(vector, Believes(i, _expl(vector, j, alpha, beta)))


def is_possibility_explanation(vector: StateVector, i: str, alpha: Formula, beta: Formula) -> bool:
    """After revising by α, agent i no longer believes ¬β."""
    to_rnf(alpha)
    return holds(vector, AfterRevision(i, alpha, Not(Believes(i, Not(beta)))))


def explains_for_all(
    vector: StateVector, i: str, alpha: Formula, targets: Sequence[tuple[str, Formula]]
) -> bool:
    return all(is_subjective_explanation(vector, i, j, alpha, beta) for j, beta in targets)


def is_private_explanation(
    vector: StateVector, i: str, alpha: Formula, beta: Formula, to: str, hidden_from: str
) -> bool:
    """i believes α explains β for `to` and believes it does not for `hidden_from`."""
    shared = Believes(i, _expl(vector, to, alpha, beta))
    hidden = Believes(i, Not(_expl(vector, hidden_from, alpha, beta)))
    return holds(vector, And(shared, hidden))


def nested_explanation_holds(
    vector: StateVector, chain: Sequence[str], k: str, alpha: Formula, beta: Formula
) -> bool:
    """B_{i1} B_{i2} ... Expl(k, α, β) for chain = [i1, i2, ...]."""
    if not chain:
        raise ValueError("nested explanation needs at least one believer")
    formula = _expl(vector, k, alpha, beta)
    for agent in reversed(chain):
        formula = Believes(agent, formula)
    return holds(vector, formula)


def explains_jointly(
    vector: StateVector, explainers: Sequence[str], k: str, alpha: Formula, beta: Formula
) -> bool:
    return all(is_subjective_explanation(vector, e, k, alpha, beta) for e in explainers)


def is_subjectively_truthful(
    vector: StateVector, i: str, j: str, alpha: Formula, beta: Formula
) -> bool:
    return is_subjective_explanation(vector, i, j, alpha, beta) and truth_at(vector[i], alpha)


def mediator_misjudges(
    vector: StateVector, i: str, j: str, k: str, alpha: Formula, beta: Formula
) -> bool:
    """i believes j takes α to explain β for k, while i believes it does not."""
    expl = _expl(vector, k, alpha, beta)
    return holds(vector, Believes(i, And(Believes(j, expl), Not(expl))))
