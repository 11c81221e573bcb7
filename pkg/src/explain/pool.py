"""
Candidate search space for explanations.

Canonical order: `true` first, then conjunctions of literals by length; within
a length, atom combinations in sorted order with each atom positive before
negated. Modal depth 1 appends B_j m and ¬B_j m for every non-trivial
propositional member m, agent by agent.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Optional

from src.errors import EmptyPool, UnknownSymbol
from src.logic.formula import Believes, Formula, Not, atoms, conjoin, literal, top
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class FormulaPool:
    """
    Args:
        vocabulary: abducible symbols candidates are built from.
        max_literals: longest conjunction.
        modal_depth: 0 for propositional candidates, 1 to add belief literals.
        agents: agents belief literals may name.
        constants: vocabulary `true` is expressed over (the scenario's);
            defaults to `vocabulary`. Every abducible must be one of them.
    """

    vocabulary: tuple[str, ...]
    max_literals: int = 2
    modal_depth: int = 0
    agents: tuple[str, ...] = ()
    constants: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "vocabulary", tuple(sorted(set(self.vocabulary))))
        object.__setattr__(self, "agents", tuple(sorted(set(self.agents))))
        if self.constants is not None:
            object.__setattr__(self, "constants", tuple(sorted(set(self.constants))))
            unknown = [s for s in self.vocabulary if s not in self.constants]
            if unknown:
                raise UnknownSymbol(unknown[0], f"abducibles {','.join(self.vocabulary)}")
        if self.max_literals < 0 or self.modal_depth < 0:
            raise ValueError("max_literals and modal_depth must be non-negative")
        if self.modal_depth > 1:
            raise ValueError(f"modal_depth {self.modal_depth} not supported (0 or 1)")

    @classmethod
    def for_explanandum(
        cls,
        vocabulary: Iterable[str],
        explanandum: Formula,
        agents: Iterable[str] = (),
        max_literals: int = 2,
        modal_depth: int = 0,
        abducibles: Optional[Iterable[str]] = None,
    ) -> "FormulaPool":
        """Pool over the abducibles; by default every symbol the explanandum does not mention."""
        vocabulary = tuple(vocabulary)
        if abducibles is None:
            abducibles = [s for s in vocabulary if s not in atoms(explanandum)]
        return cls(tuple(abducibles), max_literals, modal_depth, tuple(agents), vocabulary)

    @property
    def true(self) -> Formula:
        return top(self.constants or self.vocabulary)

    @cached_property
    def propositional(self) -> tuple[Formula, ...]:
        members: list[Formula] = []
        if self.constants or self.vocabulary:
            members.append(self.true)
        for size in range(1, min(self.max_literals, len(self.vocabulary)) + 1):
            for chosen in combinations(self.vocabulary, size):
                for signs in product((True, False), repeat=size):
                    members.append(conjoin(literal(s, v) for s, v in zip(chosen, signs)))
        return tuple(members)

    @cached_property
    def formulas(self) -> tuple[Formula, ...]:
        members = list(self.propositional)
        if self.modal_depth >= 1:
            base = [m for m in self.propositional if m != self.true]
            for agent in self.agents:
                for m in base:
                    members.append(Believes(agent, m))
                    members.append(Not(Believes(agent, m)))
        if not members:
            raise EmptyPool("no candidate formulas: empty vocabulary")
        logger.debug(
            f"pool over {','.join(self.vocabulary) or '-'}: {len(members)} formulas "
            f"(literals<={self.max_literals}, modal depth {self.modal_depth})"
        )
        return tuple(members)

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)

    def position(self, formula: Formula) -> int:
        return self.formulas.index(formula)
