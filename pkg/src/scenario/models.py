"""
Scenario document schema.

A scenario file is a UTF-8 JSON document; pydantic checks its shape before
the validator and loader check its meaning.
"""
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from config import get_config

OperatorName = Literal["prioritized", "dalal"]
StrataDocument = list[list[str]]


class QueryDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    formula: str
    expect: Union[bool, int, str] = True


class ScenarioDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    description: Optional[str] = None
    agents: list[str] = Field(min_length=1)
    vocabulary: list[str] = Field(min_length=1)
    laws: list[str] = Field(default_factory=list)
    depth: int = Field(default_factory=lambda: get_config().engine.default_depth, ge=0)
    operator: OperatorName = Field(default_factory=lambda: get_config().engine.default_operator)
    operators: dict[str, OperatorName] = Field(default_factory=dict)
    beliefs: dict[str, StrataDocument] = Field(default_factory=dict)
    nested: dict[str, StrataDocument] = Field(default_factory=dict)
    projections: list[str] = Field(default_factory=list)
    queries: list[QueryDocument] = Field(default_factory=list)
