"""
Formula AST for the belief/revision language.

    φ ::= p | ¬φ | (φ ∧ φ) | B_i φ | [φ]_i φ

Derived connectives (or, implies, true, false) are built from these five
node types; `false` is `p ∧ ¬p` for the lexicographically first symbol p of
the vocabulary and `true` is its negation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Optional

from src.errors import NotAgentFormula

AGENT_PATTERN = re.compile(r"^[a-z0-9_]+$")
SYMBOL_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
RESERVED_WORDS = frozenset({"true", "false", "B"})


class Formula:
    """Base class of the five AST node types."""

    __slots__ = ()

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __invert__(self) -> "Formula":
        return Not(self)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True, slots=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Believes(Formula):
    agent: str
    arg: Formula


@dataclass(frozen=True, slots=True)
class AfterRevision(Formula):
    agent: str
    revision: Formula
    body: Formula


@dataclass(frozen=True, slots=True)
class AgentFormula:
    """A formula already checked against the agent-formula grammar."""

    inner: Formula

    def __post_init__(self) -> None:
        if not is_agent_formula(self.inner):
            raise NotAgentFormula(f"atom outside the scope of a belief operator in {self.inner!r}")


# Derived connectives

def bottom(symbols: Iterable[str]) -> Formula:
    """Canonical contradiction p ∧ ¬p over the first symbol of the vocabulary."""
    ordered = sorted(symbols)
    if not ordered:
        raise ValueError("Cannot express false over an empty vocabulary")
    p = Atom(ordered[0])
    return And(p, Not(p))


def top(symbols: Iterable[str]) -> Formula:
    return Not(bottom(symbols))


def is_bottom(formula: Formula) -> bool:
    """True for any p ∧ ¬p pattern, whichever symbol p is."""
    return (
        isinstance(formula, And)
        and isinstance(formula.left, Atom)
        and formula.right == Not(formula.left)
    )


def is_top(formula: Formula) -> bool:
    return isinstance(formula, Not) and is_bottom(formula.arg)


def disjunction(left: Formula, right: Formula) -> Formula:
    return Not(And(Not(left), Not(right)))


def implication(antecedent: Formula, consequent: Formula) -> Formula:
    return Not(And(antecedent, Not(consequent)))


def conjoin(formulas: Iterable[Formula], symbols: Optional[Iterable[str]] = None) -> Formula:
    """Left-nested conjunction; the empty conjunction is `true` over `symbols`."""
    items = list(formulas)
    if not items:
        if symbols is None:
            raise ValueError("Empty conjunction needs a vocabulary to express true")
        return top(symbols)
    return reduce(And, items)


def conjuncts(formula: Formula) -> list[Formula]:
    """Flatten a conjunction tree into its conjuncts, left to right."""
    if isinstance(formula, And) and not is_bottom(formula):
        return conjuncts(formula.left) + conjuncts(formula.right)
    return [formula]


# Structural utilities

def subformulas(formula: Formula) -> Iterator[Formula]:
    yield formula
    if isinstance(formula, (Not, Believes)):
        yield from subformulas(formula.arg)
    elif isinstance(formula, And):
        yield from subformulas(formula.left)
        yield from subformulas(formula.right)
    elif isinstance(formula, AfterRevision):
        yield from subformulas(formula.revision)
        yield from subformulas(formula.body)


def atoms(formula: Formula) -> frozenset[str]:
    return frozenset(f.name for f in subformulas(formula) if isinstance(f, Atom))


def agents_in(formula: Formula) -> frozenset[str]:
    return frozenset(
        f.agent for f in subformulas(formula) if isinstance(f, (Believes, AfterRevision))
    )


def is_modal_free(formula: Formula) -> bool:
    return not any(isinstance(f, (Believes, AfterRevision)) for f in subformulas(formula))


def modal_depth(formula: Formula) -> int:
    if isinstance(formula, Atom):
        return 0
    if isinstance(formula, Not):
        return modal_depth(formula.arg)
    if isinstance(formula, And):
        return max(modal_depth(formula.left), modal_depth(formula.right))
    if isinstance(formula, Believes):
        return 1 + modal_depth(formula.arg)
    return 1 + max(modal_depth(formula.revision), modal_depth(formula.body))


def is_agent_formula(formula: Formula) -> bool:
    """
    Agent-formula grammar:  ϕ ::= B_i φ | ¬ϕ | (ϕ ∧ ϕ) | [φ]_i ϕ

    Revision arguments may be arbitrary; revision bodies must again be agent
    formulas.
    """
    if isinstance(formula, Believes):
        return True
    if isinstance(formula, Not):
        return is_agent_formula(formula.arg)
    if isinstance(formula, And):
        return is_agent_formula(formula.left) and is_agent_formula(formula.right)
    if isinstance(formula, AfterRevision):
        return is_agent_formula(formula.body)
    return False


def letter_count(formula: Formula) -> int:
    """Number of atom occurrences (not distinct symbols) anywhere in the formula."""
    return sum(1 for f in subformulas(formula) if isinstance(f, Atom))


def literal(symbol: str, positive: bool = True) -> Formula:
    return Atom(symbol) if positive else Not(Atom(symbol))


def valid_agent_id(name: str) -> bool:
    return bool(AGENT_PATTERN.match(name))


def valid_symbol(name: str) -> bool:
    return bool(SYMBOL_PATTERN.match(name)) and name not in RESERVED_WORDS
