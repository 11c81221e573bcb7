"""
Exception hierarchy for the explanation engine.

Every failure raised by the engine derives from EngineError so the CLI can
map it to a named message and exit status 2.
"""
from __future__ import annotations

from typing import Optional, Sequence


class EngineError(Exception):
    """Base class for all engine failures."""


# Formulas

class FormulaError(EngineError):
    pass


class FormulaSyntaxError(FormulaError):

    def __init__(self, text: str, position: int, expected: Sequence[str] = ()):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        detail = f", expected {' or '.join(self.expected)}" if self.expected else ""
        super().__init__(f"syntax error at position {position} in {text!r}{detail}")


class UnknownSymbol(FormulaError):

    def __init__(self, symbol: str, context: Optional[str] = None):
        self.symbol = symbol
        where = f" in {context!r}" if context else ""
        super().__init__(f"undeclared proposition symbol {symbol!r}{where}")


class UnknownAgent(FormulaError):

    def __init__(self, agent: str, context: Optional[str] = None):
        self.agent = agent
        where = f" in {context!r}" if context else ""
        super().__init__(f"undeclared agent {agent!r}{where}")


class NotAgentFormula(FormulaError):
    pass


class ModalFormulaNotAllowed(FormulaError):
    pass


# Revision

class RevisionError(EngineError):
    pass


class UnsupportedRevisionFormula(RevisionError):
    pass


class ContractionImpossible(RevisionError):
    pass


class NoLawConsistentModel(RevisionError):
    pass


# Search

class SearchError(EngineError):
    pass


class EmptyPool(SearchError):
    pass


# Scenarios

class ScenarioError(EngineError):
    pass


class ScenarioParseError(ScenarioError):
    pass


class InconsistentLaws(ScenarioError):
    pass


class DepthViolation(ScenarioError):
    pass


def describe_error(error: BaseException) -> str:
    """One-line `<ErrorName>: <message>` text used on standard error."""
    return f"{type(error).__name__}: {error}"
