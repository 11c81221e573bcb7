"""
Concrete epistemic states: nested towers over possible worlds.

A state holds protected laws, a stratified belief base (index 0 is the most
entrenched stratum), the derived world set, and models of other agents down
to a bounded depth. The state's own agent is its implicit self model, and
agents listed in `projected` are modelled as the state itself as well.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Mapping, Optional

from config import OPERATOR_NAMES
from src.errors import ModalFormulaNotAllowed, UnknownAgent
from src.epistemic.valuations import Signature
from src.logic.formula import Formula, is_modal_free

Strata = tuple[tuple[Formula, ...], ...]


@dataclass(frozen=True)
class EpistemicState:
    owner: str
    signature: Signature
    laws: tuple[Formula, ...]
    base: Strata
    worlds: frozenset[int]
    nested: tuple[tuple[str, "EpistemicState"], ...] = ()
    depth: int = 0
    operator: str = "prioritized"
    projected: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        if self.operator not in OPERATOR_NAMES:
            raise ValueError(f"Unknown revision operator {self.operator!r}")
        for name, model in self.nested:
            if model.depth >= self.depth:
                raise ValueError(
                    f"Nested model {self.owner}.{name} must be shallower than depth {self.depth}"
                )

    # Construction

    @classmethod
    def from_strata(
        cls,
        owner: str,
        signature: Signature,
        laws: Iterable[Formula] = (),
        strata: Iterable[Iterable[Formula]] = (),
        models: Optional[Mapping[str, "EpistemicState"]] = None,
        depth: int = 0,
        operator: str = "prioritized",
        projected: Iterable[str] = (),
    ) -> "EpistemicState":
        laws = tuple(laws)
        base = tuple(tuple(stratum) for stratum in strata if tuple(stratum))
        for formula in laws + tuple(f for stratum in base for f in stratum):
            if not is_modal_free(formula):
                raise ModalFormulaNotAllowed(f"Belief bases hold modal-free formulas only: {formula!r}")
        worlds = signature.models(laws + tuple(f for stratum in base for f in stratum))
        return cls(
            owner=owner,
            signature=signature,
            laws=laws,
            base=base,
            worlds=worlds,
            nested=tuple(sorted((models or {}).items())),
            depth=depth,
            operator=operator,
            projected=frozenset(projected),
        )

    @classmethod
    def ignorant(
        cls,
        owner: str,
        signature: Signature,
        laws: Iterable[Formula] = (),
        depth: int = 0,
        operator: str = "prioritized",
    ) -> "EpistemicState":
        """The state that believes exactly the consequences of the laws."""
        return cls.from_strata(owner, signature, laws, (), None, depth, operator)

    # Views

    @property
    def models(self) -> dict[str, "EpistemicState"]:
        return dict(self.nested)

    @property
    def consistent(self) -> bool:
        return bool(self.worlds)

    @property
    def beliefs(self) -> tuple[Formula, ...]:
        return tuple(f for stratum in self.base for f in stratum)

    def mirrors(self, agent: str) -> bool:
        """True when this state models `agent` as itself (self or projection)."""
        return agent == self.owner or agent in self.projected

    def model_of(self, agent: str) -> "EpistemicState":
        """
        This state's model of `agent`.

        Falls back to the ignorant state when no model is stored, which is
        always the case once the nesting budget is exhausted.
        """
        if self.mirrors(agent):
            return self
        for name, model in self.nested:
            if name == agent:
                return model
        if self.signature.agents and agent not in self.signature.agents:
            raise UnknownAgent(agent)
        return EpistemicState.ignorant(
            agent, self.signature, self.laws, max(self.depth - 1, 0), self.operator
        )

    # Functional updates

    def with_model(self, agent: str, model: "EpistemicState") -> "EpistemicState":
        entries = dict(self.nested)
        entries[agent] = model
        return replace(self, nested=tuple(sorted(entries.items())))

    def with_base(self, base: Strata, worlds: Optional[frozenset[int]] = None) -> "EpistemicState":
        base = tuple(tuple(stratum) for stratum in base if stratum)
        if worlds is None:
            worlds = self.signature.models(self.laws + tuple(f for s in base for f in s))
        return replace(self, base=base, worlds=worlds)

    def walk(self, path: tuple[str, ...] = ()) -> Iterator[tuple[tuple[str, ...], "EpistemicState"]]:
        """Every stored state of the tower with its agent path."""
        here = path or (self.owner,)
        yield here, self
        for name, model in self.nested:
            yield from model.walk(here + (name,))


@dataclass(frozen=True)
class StateVector:
    """One epistemic state per agent: the objective evaluation context."""

    states: tuple[tuple[str, EpistemicState], ...] = field(default=())

    @classmethod
    def of(cls, states: Mapping[str, EpistemicState]) -> "StateVector":
        return cls(tuple(sorted(states.items())))

    @property
    def agents(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.states)

    def __getitem__(self, agent: str) -> EpistemicState:
        for name, state in self.states:
            if name == agent:
                return state
        raise UnknownAgent(agent)

    def __contains__(self, agent: object) -> bool:
        return any(name == agent for name, _ in self.states)

    def replace(self, agent: str, state: EpistemicState) -> "StateVector":
        if agent not in self:
            raise UnknownAgent(agent)
        return StateVector(tuple((n, state if n == agent else s) for n, s in self.states))
