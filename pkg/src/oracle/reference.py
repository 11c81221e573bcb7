"""
Reference semantics for cross-checking the engine.

A deliberately plain re-implementation: valuations are tuples of booleans
enumerated with itertools.product, formulas are evaluated against dicts, and
revision, contraction and projection are redone from the definitions. Only
the formula AST and the fields of EpistemicState are shared with the engine;
cached world sets are recomputed from laws and strata.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import product
from typing import Mapping, Optional

from src.epistemic.state import EpistemicState, StateVector
from src.logic.formula import AfterRevision, And, Atom, Believes, Formula, Not

World = tuple[bool, ...]


def value(formula: Formula, valuation: Mapping[str, bool]) -> bool:
    if isinstance(formula, Atom):
        return valuation[formula.name]
    if isinstance(formula, Not):
        return not value(formula.arg, valuation)
    if isinstance(formula, And):
        return value(formula.left, valuation) and value(formula.right, valuation)
    raise ValueError(f"modal formula in propositional position: {formula!r}")


@lru_cache(maxsize=None)
def _models_one(formula: Formula, vocab: tuple[str, ...]) -> frozenset[World]:
    return frozenset(
        w for w in product((False, True), repeat=len(vocab)) if value(formula, dict(zip(vocab, w)))
    )


def models(formulas, vocab: tuple[str, ...]) -> frozenset[World]:
    result = frozenset(product((False, True), repeat=len(vocab)))
    for f in formulas:
        result &= _models_one(f, vocab)
    return result


def hamming(a: World, b: World) -> int:
    return sum(x != y for x, y in zip(a, b))


def closest(sources: frozenset[World], targets: frozenset[World]) -> frozenset[World]:
    if not sources or not targets:
        return targets
    distance = {t: min(hamming(s, t) for s in sources) for t in targets}
    best = min(distance.values())
    return frozenset(t for t, d in distance.items() if d == best)


@dataclass(frozen=True)
class Tower:
    owner: str
    vocab: tuple[str, ...]
    agents: tuple[str, ...]
    laws: tuple[Formula, ...]
    strata: tuple[tuple[Formula, ...], ...]
    worlds: frozenset[World]
    models: tuple[tuple[str, "Tower"], ...]
    depth: int
    operator: str
    projected: frozenset[str]

    @classmethod
    def from_state(cls, state: EpistemicState) -> "Tower":
        vocab = tuple(sorted(state.signature.symbols))
        flat = tuple(f for stratum in state.base for f in stratum)
        return cls(
            owner=state.owner,
            vocab=vocab,
            agents=tuple(state.signature.agents),
            laws=tuple(state.laws),
            strata=tuple(tuple(s) for s in state.base),
            worlds=models(state.laws + flat, vocab),
            models=tuple((name, cls.from_state(m)) for name, m in state.nested),
            depth=state.depth,
            operator=state.operator,
            projected=frozenset(state.projected),
        )

    def ignorant(self, owner: str, depth: int) -> "Tower":
        return Tower(owner, self.vocab, self.agents, self.laws, (), models(self.laws, self.vocab),
                     (), depth, self.operator, frozenset())

    def model(self, agent: str) -> "Tower":
        if agent == self.owner or agent in self.projected:
            return self
        for name, m in self.models:
            if name == agent:
                return m
        if self.agents and agent not in self.agents:
            raise KeyError(agent)
        return self.ignorant(agent, max(self.depth - 1, 0))

    def with_model(self, agent: str, tower: "Tower") -> "Tower":
        others = [(n, m) for n, m in self.models if n != agent]
        return replace(self, models=tuple(sorted(others + [(agent, tower)], key=lambda p: p[0])))

    def world_indices(self) -> frozenset[int]:
        """Worlds in the engine's numbering (bit k = k-th sorted symbol)."""
        return frozenset(sum(1 << k for k, bit in enumerate(w) if bit) for w in self.worlds)


# Revision

def _flatten(formula: Formula) -> list[Formula]:
    if isinstance(formula, And):
        return _flatten(formula.left) + _flatten(formula.right)
    return [formula]


def _is_true(formula: Formula) -> bool:
    return (
        isinstance(formula, Not)
        and isinstance(formula.arg, And)
        and isinstance(formula.arg.left, Atom)
        and formula.arg.right == Not(formula.arg.left)
    )


def _modal(formula: Formula) -> bool:
    if isinstance(formula, (Believes, AfterRevision)):
        return True
    if isinstance(formula, Not):
        return _modal(formula.arg)
    if isinstance(formula, And):
        return _modal(formula.left) or _modal(formula.right)
    return False


def split(alpha: Formula):
    props, positive, negative = [], [], []
    for part in _flatten(alpha):
        while isinstance(part, Not) and isinstance(part.arg, Not):
            part = part.arg.arg
        if not _modal(part):
            if not _is_true(part):
                props.append(part)
        elif isinstance(part, Believes):
            positive.append((part.agent, part.arg))
        elif isinstance(part, Not) and isinstance(part.arg, Believes) and not _modal(part.arg.arg):
            negative.append((part.arg.agent, part.arg.arg))
        else:
            raise ValueError(f"revision input outside the supported fragment: {part!r}")
    return tuple(props), positive, negative


def _prioritized(t: Tower, props: tuple[Formula, ...]) -> Tower:
    kept = models(t.laws + props, t.vocab)
    if not kept:
        return replace(t, strata=(props,) + t.strata, worlds=frozenset())
    strata = [props]
    for stratum in t.strata:
        survivors = []
        for f in stratum:
            if kept & _models_one(f, t.vocab):
                kept = kept & _models_one(f, t.vocab)
                survivors.append(f)
        strata.append(tuple(survivors))
    return replace(t, strata=tuple(strata), worlds=kept)


def _dalal(t: Tower, props: tuple[Formula, ...]) -> Tower:
    target = models(t.laws + props, t.vocab)
    worlds = closest(t.worlds, target) if t.worlds else target
    return replace(t, strata=(), worlds=worlds)


def contract(t: Tower, psi: Formula) -> Tower:
    target = _models_one(psi, t.vocab)
    lawful = models(t.laws, t.vocab)
    if lawful <= target:
        raise ValueError(f"cannot contract a law consequence: {psi!r}")
    if t.operator == "dalal":
        if t.worlds and not t.worlds <= target:
            return t
        return replace(t, strata=(), worlds=t.worlds | closest(t.worlds, lawful - target))
    kept, strata = lawful, []
    for stratum in t.strata:
        survivors = []
        for f in stratum:
            candidate = kept & _models_one(f, t.vocab)
            if not candidate <= target:
                kept = candidate
                survivors.append(f)
        strata.append(tuple(survivors))
    return replace(t, strata=tuple(strata), worlds=kept)


def revise(t: Tower, alpha: Formula) -> Tower:
    props, positive, negative = split(alpha)
    if props:
        t = _dalal(t, props) if t.operator == "dalal" else _prioritized(t, props)
    for agent, sub in positive:
        if agent == t.owner or agent in t.projected:
            t = revise(t, sub)
        elif t.depth > 0:
            t = t.with_model(agent, revise(t.model(agent), sub))
    for agent, psi in negative:
        if agent == t.owner or agent in t.projected:
            t = contract(t, psi)
        elif t.depth > 0:
            t = t.with_model(agent, contract(t.model(agent), psi))
    return t


# Evaluation

def truth(t: Tower, formula: Formula) -> bool:
    return all(_at(t, formula, w, {}) for w in t.worlds)


def _at(t: Tower, formula: Formula, world: World, overrides: dict) -> bool:
    if isinstance(formula, Atom):
        return world[t.vocab.index(formula.name)]
    if isinstance(formula, Not):
        return not _at(t, formula.arg, world, overrides)
    if isinstance(formula, And):
        return _at(t, formula.left, world, overrides) and _at(t, formula.right, world, overrides)
    if isinstance(formula, Believes):
        return truth(overrides.get(formula.agent) or t.model(formula.agent), formula.arg)
    if isinstance(formula, AfterRevision):
        j = formula.agent
        if (j == t.owner or j in t.projected) and j not in overrides:
            revised = revise(t, formula.revision)
            rest = {k: v for k, v in overrides.items() if k != j}
            return all(_at(revised, formula.body, w, rest) for w in revised.worlds)
        revised = revise(overrides.get(j) or t.model(j), formula.revision)
        return _at(t, formula.body, world, {**overrides, j: revised})
    raise TypeError(f"not a formula: {formula!r}")


def holds(towers: Mapping[str, Tower], formula: Formula) -> bool:
    if isinstance(formula, Believes):
        return truth(towers[formula.agent], formula.arg)
    if isinstance(formula, Not):
        return not holds(towers, formula.arg)
    if isinstance(formula, And):
        return holds(towers, formula.left) and holds(towers, formula.right)
    if isinstance(formula, AfterRevision):
        updated = dict(towers)
        updated[formula.agent] = revise(towers[formula.agent], formula.revision)
        return holds(updated, formula.body)
    raise ValueError(f"not an agent formula: {formula!r}")


def towers_of(vector: StateVector) -> dict[str, Tower]:
    return {name: Tower.from_state(state) for name, state in vector.states}


def reference_holds(vector: StateVector, formula: Formula, towers: Optional[dict] = None) -> bool:
    return holds(towers if towers is not None else towers_of(vector), formula)
