"""
Belief revision operators realizing e*α.

Revision inputs are restricted to revision normal form (RNF): a conjunction
of one propositional part, positive belief literals B_j ψ (ψ again in RNF)
and negative belief literals ¬B_j ψ (ψ modal-free). The propositional part is
handled by the state's operator; belief literals recursively revise or
contract the state's model of agent j.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import ClassVar, Iterable, Union

from src.errors import ContractionImpossible, ModalFormulaNotAllowed, UnsupportedRevisionFormula
from src.epistemic.state import EpistemicState
from src.logic.formula import (
    AfterRevision,
    Believes,
    Formula,
    Not,
    conjoin,
    conjuncts,
    is_modal_free,
    is_top,
    subformulas,
)
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class RevisionNormalForm:
    propositional: tuple[Formula, ...] = ()
    positive: tuple[tuple[str, "RevisionNormalForm"], ...] = ()
    negative: tuple[tuple[str, Formula], ...] = ()

    @property
    def is_vacuous(self) -> bool:
        return not (self.propositional or self.positive or self.negative)

    def propositional_part(self, symbols: Iterable[str]) -> Formula:
        return conjoin(self.propositional, symbols)


def _strip_double_negation(formula: Formula) -> Formula:
    while isinstance(formula, Not) and isinstance(formula.arg, Not):
        formula = formula.arg.arg
    return formula


def to_rnf(formula: Formula) -> RevisionNormalForm:
    """
    Decompose a revision input into RNF.

    Raises:
        UnsupportedRevisionFormula: nested revision operators, negated modal
            beliefs, or disjunctions mixing modal and propositional parts.
    """
    if any(isinstance(f, AfterRevision) for f in subformulas(formula)):
        raise UnsupportedRevisionFormula(f"Revision operator inside a revision input: {formula!r}")

    propositional: list[Formula] = []
    positive: list[tuple[str, RevisionNormalForm]] = []
    negative: list[tuple[str, Formula]] = []

    for conjunct in conjuncts(formula):
        conjunct = _strip_double_negation(conjunct)
        if is_modal_free(conjunct):
            if not is_top(conjunct):
                propositional.append(conjunct)
        elif isinstance(conjunct, Believes):
            positive.append((conjunct.agent, to_rnf(conjunct.arg)))
        elif isinstance(conjunct, Not) and isinstance(conjunct.arg, Believes):
            if not is_modal_free(conjunct.arg.arg):
                raise UnsupportedRevisionFormula(
                    f"Negated belief with modal argument in revision input: {conjunct!r}"
                )
            negative.append((conjunct.arg.agent, conjunct.arg.arg))
        else:
            raise UnsupportedRevisionFormula(
                f"Disjunction across modal and propositional parts: {conjunct!r}"
            )

    return RevisionNormalForm(tuple(propositional), tuple(positive), tuple(negative))


class RevisionOperator(ABC):
    """A named revision policy for the propositional part of an input."""

    name: ClassVar[str]

    @abstractmethod
    def revise(self, state: EpistemicState, formulas: tuple[Formula, ...]) -> EpistemicState:
        ...

    @abstractmethod
    def contract(self, state: EpistemicState, formula: Formula) -> EpistemicState:
        ...

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class PrioritizedRevision(RevisionOperator):
    """
    Linear base revision: the input is kept first, then each stratum member in
    entrenchment order is kept iff it is consistent with everything kept so
    far. Laws are always kept.
    """

    name = "prioritized"

    def revise(self, state: EpistemicState, formulas: tuple[Formula, ...]) -> EpistemicState:
        sig = state.signature
        kept = sig.models(state.laws + formulas)
        if not kept:
            logger.debug(f"{state.owner}: input inconsistent with laws, revising to the inconsistent state")
            return state.with_base((formulas,) + state.base, worlds=frozenset())

        strata: list[tuple[Formula, ...]] = [formulas]
        for stratum in state.base:
            survivors = []
            for belief in stratum:
                candidate = kept & sig.models_of(belief)
                if candidate:
                    kept = candidate
                    survivors.append(belief)
                else:
                    logger.debug(f"{state.owner}: dropped {belief!r}")
            strata.append(tuple(survivors))
        return state.with_base(tuple(strata), worlds=kept)

    def contract(self, state: EpistemicState, formula: Formula) -> EpistemicState:
        sig = state.signature
        target = sig.models_of(formula)
        kept = sig.models(state.laws)
        if kept <= target:
            raise ContractionImpossible(f"{formula!r} is entailed by the laws")

        strata: list[tuple[Formula, ...]] = []
        for stratum in state.base:
            survivors = []
            for belief in stratum:
                candidate = kept & sig.models_of(belief)
                if candidate <= target:
                    logger.debug(f"{state.owner}: contraction dropped {belief!r}")
                    continue
                kept = candidate
                survivors.append(belief)
            strata.append(tuple(survivors))
        return state.with_base(tuple(strata), worlds=kept)


class DalalRevision(RevisionOperator):
    """World-set revision selecting input models at minimum Hamming distance."""

    name = "dalal"

    def revise(self, state: EpistemicState, formulas: tuple[Formula, ...]) -> EpistemicState:
        sig = state.signature
        target = sig.models(state.laws + formulas)
        worlds = sig.closest(state.worlds, target) if state.worlds else target
        return state.with_base(((sig.characteristic(worlds),),), worlds=worlds)

    def contract(self, state: EpistemicState, formula: Formula) -> EpistemicState:
        # Harper identity: keep the current worlds and add the closest counter-models.
        sig = state.signature
        counter = sig.models(state.laws) - sig.models_of(formula)
        if not counter:
            raise ContractionImpossible(f"{formula!r} is entailed by the laws")
        if state.worlds and not state.worlds <= sig.models_of(formula):
            return state
        worlds = state.worlds | sig.closest(state.worlds, counter)
        return state.with_base(((sig.characteristic(worlds),),), worlds=worlds)


OPERATORS: dict[str, RevisionOperator] = {
    op.name: op for op in (PrioritizedRevision(), DalalRevision())
}


def get_operator(name: str) -> RevisionOperator:
    try:
        return OPERATORS[name]
    except KeyError:
        raise ValueError(
            f"Unknown revision operator {name!r}. Expected one of: {', '.join(OPERATORS)}"
        ) from None


def revise(state: EpistemicState, formula: Union[Formula, RevisionNormalForm]) -> EpistemicState:
    """
    Revise `state` by a formula in RNF, returning a fresh state.

    Models of agents not named in the input are left unchanged.
    """
    rnf = formula if isinstance(formula, RevisionNormalForm) else to_rnf(formula)
    return _apply(state, rnf)


def contract(state: EpistemicState, formula: Formula) -> EpistemicState:
    """Give up belief in a modal-free formula; fails when the laws entail it."""
    if not is_modal_free(formula):
        raise ModalFormulaNotAllowed(f"Contraction by a modal formula: {formula!r}")
    return get_operator(state.operator).contract(state, formula)


def _apply(state: EpistemicState, rnf: RevisionNormalForm) -> EpistemicState:
    result = state
    if rnf.propositional:
        result = get_operator(state.operator).revise(result, rnf.propositional)

    for agent, inner in rnf.positive:
        if result.mirrors(agent):
            result = _apply(result, inner)
        elif result.depth == 0:
            logger.warning(f"{result.owner}: no nesting budget left to revise the model of {agent}")
        else:
            result = result.with_model(agent, _apply(result.model_of(agent), inner))

    for agent, formula in rnf.negative:
        if result.mirrors(agent):
            result = contract(result, formula)
        elif result.depth == 0:
            logger.warning(f"{result.owner}: no nesting budget left to contract the model of {agent}")
        else:
            result = result.with_model(agent, contract(result.model_of(agent), formula))

    return result
