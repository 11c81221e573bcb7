"""
Truth of formulas at epistemic states and the objective relation ⊨.

`truth_at` evaluates a formula world-wise against one state: atoms read the
world, belief operators consult the state's model of the named agent, and
revision operators revise that model before evaluating the body. `holds` is
the satisfaction relation for agent formulas over a whole StateVector.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

from src.errors import ModalFormulaNotAllowed, NotAgentFormula
from src.epistemic.revision import revise
from src.epistemic.state import EpistemicState, StateVector
from src.logic.formula import (
    AfterRevision,
    And,
    Atom,
    Believes,
    Formula,
    Not,
    is_agent_formula,
    is_modal_free,
)
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

Overrides = Mapping[str, EpistemicState]


def entails(state: EpistemicState, formula: Formula) -> bool:
    """Every world of `state` satisfies the modal-free `formula`."""
    if not is_modal_free(formula):
        raise ModalFormulaNotAllowed(f"entails() takes modal-free formulas only: {formula!r}")
    return state.worlds <= state.signature.models_of(formula)


def truth_at(state: EpistemicState, formula: Formula) -> bool:
    return _truth_at(state, formula, {})


def _truth_at(state: EpistemicState, formula: Formula, overrides: Overrides) -> bool:
    if not state.worlds:
        return True
    if is_modal_free(formula):
        return entails(state, formula)
    if is_agent_formula(formula):
        # Independent of the world: evaluate once.
        return _at_world(state, formula, None, overrides)
    return all(_at_world(state, formula, w, overrides) for w in sorted(state.worlds))


def _model(state: EpistemicState, agent: str, overrides: Overrides) -> EpistemicState:
    if agent in overrides:
        return overrides[agent]
    return state.model_of(agent)


def _at_world(
    state: EpistemicState, formula: Formula, world: Optional[int], overrides: Overrides
) -> bool:
    if isinstance(formula, Atom):
        if world is None:
            raise ValueError(f"Atom {formula.name!r} evaluated outside a world")
        return bool((world >> state.signature.position(formula.name)) & 1)
    if isinstance(formula, Not):
        return not _at_world(state, formula.arg, world, overrides)
    if isinstance(formula, And):
        return _at_world(state, formula.left, world, overrides) and _at_world(
            state, formula.right, world, overrides
        )
    if isinstance(formula, Believes):
        return truth_at(_model(state, formula.agent, overrides), formula.arg)
    if isinstance(formula, AfterRevision):
        if state.mirrors(formula.agent) and formula.agent not in overrides:
            rest = {k: v for k, v in overrides.items() if k != formula.agent}
            return _truth_at(revise(state, formula.revision), formula.body, rest)
        revised = revise(_model(state, formula.agent, overrides), formula.revision)
        local = {**overrides, formula.agent: revised}
        if world is None:
            return _truth_at(state, formula.body, local)
        return _at_world(state, formula.body, world, local)
    raise TypeError(f"Not a formula: {formula!r}")


def holds(vector: StateVector, formula: Formula) -> bool:
    """
    Objective satisfaction e⃗ ⊨ φ for agent formulas.

    Raises:
        NotAgentFormula: an atom occurs outside every belief operator.
        UnknownAgent: a modal operator names an agent missing from the vector.
    """
    if not is_agent_formula(formula):
        raise NotAgentFormula(f"atom outside the scope of a belief operator in {formula!r}")
    return _holds(vector, formula)


def _holds(vector: StateVector, formula: Formula) -> bool:
    if isinstance(formula, Believes):
        return truth_at(vector[formula.agent], formula.arg)
    if isinstance(formula, Not):
        return not _holds(vector, formula.arg)
    if isinstance(formula, And):
        return _holds(vector, formula.left) and _holds(vector, formula.right)
    if isinstance(formula, AfterRevision):
        revised = revise(vector[formula.agent], formula.revision)
        return _holds(vector.replace(formula.agent, revised), formula.body)
    raise NotAgentFormula(f"Unexpected node in agent formula: {formula!r}")


def belief_profile(state: EpistemicState, queries: Sequence[Formula]) -> tuple[bool, ...]:
    return tuple(truth_at(state, q) for q in queries)


def states_equivalent(
    e_i: EpistemicState,
    e_j: EpistemicState,
    pool: Iterable[Formula],
    max_seq_len: int,
) -> bool:
    """
    Bounded ≈: both states agree on every pool formula and on `false`, and
    keep agreeing after every revision sequence of pool formulas up to
    `max_seq_len` long.
    """
    revisions = list(pool)
    queries = revisions + [e_i.signature.bottom()]

    def agree(a: EpistemicState, b: EpistemicState, remaining: int) -> bool:
        if belief_profile(a, queries) != belief_profile(b, queries):
            return False
        if remaining == 0:
            return True
        return all(agree(revise(a, alpha), revise(b, alpha), remaining - 1) for alpha in revisions)

    result = agree(e_i, e_j, max_seq_len)
    logger.debug(
        f"states_equivalent({e_i.owner}, {e_j.owner}) over {len(revisions)} formulas, "
        f"depth {max_seq_len}: {result}"
    )
    return result
