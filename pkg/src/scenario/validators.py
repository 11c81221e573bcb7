"""
Validation utilities for scenario documents.

Each check returns a list of ValidationError; the loader raises the typed
exception for the first one and logs the rest.
"""
from dataclasses import dataclass
from typing import Any, List

from src.logic.formula import valid_agent_id, valid_symbol
from src.scenario.models import ScenarioDocument
from src.scenario.parsing_utils import parse_bool


@dataclass
class ValidationError:
    """Represents a single validation failure."""

    field: str
    value: Any
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.field}: {self.message} (value={self.value}, rule={self.rule})"


class ScenarioValidator:
    """Validate scenario documents before any formula is parsed."""

    @staticmethod
    def validate_identifiers(doc: ScenarioDocument) -> List[ValidationError]:

        errors = []

        for agent in doc.agents:
            if not valid_agent_id(agent):
                errors.append(ValidationError(
                    field="agents",
                    value=agent,
                    rule="format_check",
                    message="Agent ids are lowercase letters, digits and underscores"
                ))
        if len(set(doc.agents)) != len(doc.agents):
            errors.append(ValidationError(
                field="agents",
                value=doc.agents,
                rule="uniqueness",
                message="Agent ids must be unique"
            ))

        for symbol in doc.vocabulary:
            if not valid_symbol(symbol):
                errors.append(ValidationError(
                    field="vocabulary",
                    value=symbol,
                    rule="format_check",
                    message="Symbols are identifiers other than true, false and B"
                ))
        if len(set(doc.vocabulary)) != len(doc.vocabulary):
            errors.append(ValidationError(
                field="vocabulary",
                value=doc.vocabulary,
                rule="uniqueness",
                message="Proposition symbols must be unique"
            ))

        return errors

    @staticmethod
    def validate_paths(doc: ScenarioDocument) -> List[ValidationError]:

        errors = []
        agents = set(doc.agents)

        for agent in doc.beliefs:
            if agent not in agents:
                errors.append(ValidationError(
                    field="beliefs",
                    value=agent,
                    rule="unknown_agent",
                    message=f"Beliefs given for undeclared agent {agent!r}"
                ))

        for key in doc.operators:
            errors.extend(_check_path(key, "operators", agents, doc.depth, min_length=1))
        for key in doc.nested:
            errors.extend(_check_path(key, "nested", agents, doc.depth, min_length=2))
        for key in doc.projections:
            errors.extend(_check_path(key, "projections", agents, doc.depth + 1, min_length=2))

        return errors

    @staticmethod
    def validate_queries(doc: ScenarioDocument) -> List[ValidationError]:

        errors = []

        for n, query in enumerate(doc.queries):
            if parse_bool(query.expect) is None:
                errors.append(ValidationError(
                    field=f"queries[{n}].expect",
                    value=query.expect,
                    rule="boolean",
                    message="Expectation must be a boolean"
                ))
            if not query.formula.strip():
                errors.append(ValidationError(
                    field=f"queries[{n}].formula",
                    value=query.formula,
                    rule="required",
                    message="Query formula is required"
                ))

        return errors

    @staticmethod
    def validate(doc: ScenarioDocument) -> List[ValidationError]:
        return (
            ScenarioValidator.validate_identifiers(doc)
            + ScenarioValidator.validate_paths(doc)
            + ScenarioValidator.validate_queries(doc)
        )


def split_path(key: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in key.split("."))


def _check_path(key: str, field: str, agents: set, depth: int, min_length: int) -> List[ValidationError]:
    path = split_path(key)

    unknown = [a for a in path if a not in agents]
    if unknown:
        return [ValidationError(
            field=field,
            value=key,
            rule="unknown_agent",
            message=f"Path names undeclared agent {unknown[0]!r}"
        )]
    if len(path) < min_length:
        return [ValidationError(
            field=field,
            value=key,
            rule="format_check",
            message=f"Path must name at least {min_length} agents"
        )]
    if any(a == b for a, b in zip(path, path[1:])):
        return [ValidationError(
            field=field,
            value=key,
            rule="self_model",
            message="An agent's model of itself is the state itself"
        )]
    # A path of n agents addresses a model n - 1 levels down.
    if len(path) - 1 > depth:
        return [ValidationError(
            field=field,
            value=key,
            rule="depth_check",
            message=f"Path is {len(path) - 1} levels deep but the scenario depth is {depth}"
        )]
    return []
