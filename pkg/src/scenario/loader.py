"""
Scenario loading and StateVector construction.

`load` reads and validates a scenario file eagerly; `build_vector` turns it
into one epistemic tower per agent. A nested model without an override is
the ignorant state (laws only), never a copy of the other agent's objective
state.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from pydantic import ValidationError as SchemaError

from src.errors import (
    DepthViolation,
    InconsistentLaws,
    ModalFormulaNotAllowed,
    NotAgentFormula,
    ScenarioParseError,
    UnknownAgent,
)
from src.epistemic.state import EpistemicState, StateVector, Strata
from src.epistemic.valuations import Signature
from src.logic.formula import Formula, is_agent_formula, is_modal_free
from src.logic.parser import parse
from src.scenario.models import ScenarioDocument
from src.scenario.parsing_utils import parse_bool
from src.scenario.validators import ScenarioValidator, split_path
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

AgentPath = tuple[str, ...]


@dataclass(frozen=True)
class ScenarioQuery:
    text: str
    formula: Formula
    expect: bool


@dataclass(frozen=True)
class Scenario:
    signature: Signature
    laws: tuple[Formula, ...]
    depth: int
    operator: str
    beliefs: dict[str, Strata] = field(default_factory=dict)
    nested: dict[AgentPath, Strata] = field(default_factory=dict)
    operators: dict[AgentPath, str] = field(default_factory=dict)
    projections: frozenset[AgentPath] = frozenset()
    queries: tuple[ScenarioQuery, ...] = ()
    description: Optional[str] = None
    source: Optional[Path] = None

    @property
    def agents(self) -> tuple[str, ...]:
        return self.signature.agents

    @property
    def vocabulary(self) -> tuple[str, ...]:
        return self.signature.symbols

    def parse(self, text: str) -> Formula:
        return parse(text, self.vocabulary, self.agents)


_RULE_ERRORS = {
    "unknown_agent": UnknownAgent,
    "depth_check": DepthViolation,
}


def load(path: Union[str, Path]) -> Scenario:
    """
    Read, validate and parse a scenario file.

    Raises:
        ScenarioParseError: unreadable file, malformed JSON, or schema violation.
        UnknownSymbol / UnknownAgent / FormulaSyntaxError: bad formula text.
        InconsistentLaws: the laws have no model.
        DepthViolation: a nested path reaches below the depth budget.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ScenarioParseError(f"cannot read scenario {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ScenarioParseError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e

    try:
        doc = ScenarioDocument.model_validate(raw)
    except SchemaError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        raise ScenarioParseError(f"{path}: {where}: {first['msg']}") from e

    return from_document(doc, source=path)


def from_document(doc: ScenarioDocument, source: Optional[Path] = None) -> Scenario:
    errors = ScenarioValidator.validate(doc)
    if errors:
        for extra in errors[1:]:
            logger.warning(f"{source or 'scenario'}: {extra}")
        first = errors[0]
        exc = _RULE_ERRORS.get(first.rule)
        if exc is UnknownAgent:
            raise UnknownAgent(str(first.value), first.field)
        raise (exc or ScenarioParseError)(str(first))

    signature = Signature(tuple(doc.vocabulary), tuple(doc.agents))

    def formula(text: str) -> Formula:
        return parse(text, signature.symbols, signature.agents)

    def belief(text: str) -> Formula:
        f = formula(text)
        if not is_modal_free(f):
            raise ModalFormulaNotAllowed(f"belief bases and laws are modal-free: {text!r}")
        return f

    def strata(document: list[list[str]]) -> Strata:
        return tuple(tuple(belief(t) for t in stratum) for stratum in document)

    laws = tuple(belief(t) for t in doc.laws)
    if not signature.consistent(laws):
        raise InconsistentLaws(f"laws have no model: {doc.laws}")

    queries = []
    for q in doc.queries:
        f = formula(q.formula)
        if not is_agent_formula(f):
            raise NotAgentFormula(f"query is not an agent formula: {q.formula!r}")
        queries.append(ScenarioQuery(q.formula, f, bool(parse_bool(q.expect))))

    scenario = Scenario(
        signature=signature,
        laws=laws,
        depth=doc.depth,
        operator=doc.operator,
        beliefs={agent: strata(doc.beliefs[agent]) for agent in doc.beliefs},
        nested={split_path(key): strata(value) for key, value in doc.nested.items()},
        operators={split_path(key): op for key, op in doc.operators.items()},
        projections=frozenset(split_path(key) for key in doc.projections),
        queries=tuple(queries),
        description=doc.description,
        source=source,
    )
    logger.info(
        f"Loaded scenario {source or '<document>'}: agents={','.join(scenario.agents)} "
        f"vocabulary={','.join(scenario.vocabulary)} depth={scenario.depth}"
    )
    return scenario


def build_vector(scenario: Scenario) -> StateVector:
    """One tower per agent, built down to the scenario depth."""
    vector = StateVector.of({agent: _tower(scenario, (agent,), scenario.depth) for agent in scenario.agents})
    logger.info(f"Built state vector for {len(vector.agents)} agents at depth {scenario.depth}")
    return vector


def _operator_for(scenario: Scenario, path: AgentPath) -> str:
    if path in scenario.operators:
        return scenario.operators[path]
    return scenario.operators.get((path[-1],), scenario.operator)


def _tower(scenario: Scenario, path: AgentPath, depth: int) -> EpistemicState:
    owner = path[-1]
    strata = scenario.beliefs.get(owner, ()) if len(path) == 1 else scenario.nested.get(path, ())
    projected = frozenset(p[-1] for p in scenario.projections if p[:-1] == path)

    models = {}
    if depth > 0:
        for agent in scenario.agents:
            if agent != owner and agent not in projected:
                models[agent] = _tower(scenario, path + (agent,), depth - 1)

    state = EpistemicState.from_strata(
        owner,
        scenario.signature,
        scenario.laws,
        strata,
        models,
        depth,
        _operator_for(scenario, path),
        projected,
    )
    if not state.consistent:
        logger.warning(f"{'.'.join(path)}: beliefs inconsistent with the laws; built as the inconsistent state")
    return state
