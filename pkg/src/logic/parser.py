"""
Surface syntax for formulas: parsing with pyparsing and canonical rendering.

    formula := implies
    implies := or ("->" implies)?
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "~" unary | "B[" agent "]" unary | "[" formula "]_" agent unary
             | "(" formula ")" | atom | "true" | "false"

Modal operators bind tighter than every binary connective, so
`B[mary] rain & wetFloor` is `(B[mary] rain) & wetFloor`.
"""
from __future__ import annotations

from functools import lru_cache, reduce
from typing import Iterable, Optional

import pyparsing as pp

from src.errors import FormulaSyntaxError, UnknownAgent, UnknownSymbol
from src.logic.formula import (
    AfterRevision,
    And,
    Atom,
    Believes,
    Formula,
    Not,
    disjunction,
    implication,
    is_bottom,
    is_top,
    subformulas,
)

pp.ParserElement.enable_packrat()


@lru_cache(maxsize=64)
def _grammar(first_symbol: Optional[str]) -> pp.ParserElement:
    # `first_symbol` fixes what true/false expand to.
    if first_symbol is None:
        false_node: Formula = Atom("false")
        true_node: Formula = Atom("true")
    else:
        p = Atom(first_symbol)
        false_node = And(p, Not(p))
        true_node = Not(false_node)

    formula = pp.Forward()
    unary = pp.Forward()

    identifier = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    agent = pp.Word(pp.alphanums + "_").set_name("agent")
    true_kw = pp.Keyword("true").set_parse_action(lambda: true_node)
    false_kw = pp.Keyword("false").set_parse_action(lambda: false_node)
    atom = (~(pp.Keyword("true") | pp.Keyword("false")) + identifier).set_name("atom")
    atom.set_parse_action(lambda t: Atom(t[0]))

    negation = (pp.Suppress("~") + unary).set_parse_action(lambda t: Not(t[0]))
    belief = (pp.Suppress("B[") + agent + pp.Suppress("]") + unary).set_parse_action(
        lambda t: Believes(t[0], t[1])
    )
    revision = (
        pp.Suppress("[") + formula + pp.Suppress("]_") + agent + unary
    ).set_parse_action(lambda t: AfterRevision(t[1], t[0], t[2]))
    group = pp.Suppress("(") + formula + pp.Suppress(")")

    unary <<= negation | belief | revision | group | true_kw | false_kw | atom

    conjunction = (unary + pp.ZeroOrMore(pp.Suppress("&") + unary)).set_parse_action(
        lambda t: reduce(And, list(t))
    )
    alternation = (conjunction + pp.ZeroOrMore(pp.Suppress("|") + conjunction)).set_parse_action(
        lambda t: reduce(disjunction, list(t))
    )
    conditional = pp.Forward()
    conditional <<= (alternation + pp.Optional(pp.Suppress("->") + conditional)).set_parse_action(
        lambda t: implication(t[0], t[1]) if len(t) == 2 else t[0]
    )
    formula <<= conditional
    return formula


def parse(text: str, vocabulary: Iterable[str], agents: Iterable[str]) -> Formula:
    """
    Parse surface text into a Formula over the declared symbols and agents.

    Raises:
        FormulaSyntaxError: text does not match the grammar.
        UnknownSymbol: an atom is not in `vocabulary`.
        UnknownAgent: a modal operator names an agent not in `agents`.
    """
    symbols = frozenset(vocabulary)
    agent_set = frozenset(agents)
    grammar = _grammar(min(symbols) if symbols else None)

    try:
        result = grammar.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise FormulaSyntaxError(text, e.loc, [e.msg]) from e

    formula = result[0]
    for node in subformulas(formula):
        if isinstance(node, Atom) and node.name not in symbols:
            raise UnknownSymbol(node.name, text)
        if isinstance(node, (Believes, AfterRevision)) and node.agent not in agent_set:
            raise UnknownAgent(node.agent, text)
    return formula


def render(formula: Formula, vocabulary: Optional[Iterable[str]] = None) -> str:
    """
    Canonical text of a formula; parse(render(φ, P), P, A) == φ.

    With a vocabulary, the canonical p ∧ ¬p over its first symbol prints as
    `false` and its negation as `true`.
    """
    first = min(vocabulary) if vocabulary else None
    return _render(formula, first)


def _is_constant(formula: Formula, first: Optional[str]) -> bool:
    return first is not None and is_bottom(formula) and formula.left == Atom(first)


def _render(formula: Formula, first: Optional[str]) -> str:
    if _is_constant(formula, first):
        return "false"
    if is_top(formula) and _is_constant(formula.arg, first):
        return "true"
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Not):
        return f"~{_operand(formula.arg, first)}"
    if isinstance(formula, Believes):
        return f"B[{formula.agent}] {_operand(formula.arg, first)}"
    if isinstance(formula, AfterRevision):
        return f"[{_render(formula.revision, first)}]_{formula.agent} {_operand(formula.body, first)}"
    if isinstance(formula, And):
        return f"{_conjunct(formula.left, first)} & {_conjunct(formula.right, first)}"
    raise TypeError(f"Not a formula: {formula!r}")


def _operand(formula: Formula, first: Optional[str]) -> str:
    # Prefix operators parenthesize everything except atoms and constants.
    text = _render(formula, first)
    if isinstance(formula, Atom) or text in ("true", "false"):
        return text
    return f"({text})"


def _conjunct(formula: Formula, first: Optional[str]) -> str:
    text = _render(formula, first)
    if isinstance(formula, And) and text != "false":
        return f"({text})"
    return text
