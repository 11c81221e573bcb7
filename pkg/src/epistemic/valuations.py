"""
Truth tables over a finite vocabulary.

Valuations are indexed 0..2^n-1; bit k of the index is the truth value of
the k-th symbol in sorted order. World sets are frozensets of indices, and
modal-free formulas are evaluated column-wise over a numpy boolean table.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from src.errors import ModalFormulaNotAllowed
from src.logic.formula import And, Atom, Formula, Not, bottom, conjoin, disjunction, literal

Valuation = Mapping[str, bool]


@dataclass(frozen=True)
class Signature:
    """Vocabulary P and agent set A shared by every state of a scenario."""

    symbols: tuple[str, ...]
    agents: tuple[str, ...] = ()
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(sorted(set(self.symbols))))
        object.__setattr__(self, "agents", tuple(self.agents))
        object.__setattr__(self, "_index", {s: k for k, s in enumerate(self.symbols)})

    @property
    def size(self) -> int:
        return 1 << len(self.symbols)

    @property
    def all_worlds(self) -> frozenset[int]:
        return frozenset(range(self.size))

    @property
    def table(self) -> np.ndarray:
        return _table(len(self.symbols))

    def position(self, symbol: str) -> int:
        return self._index[symbol]

    def valuation(self, world: int) -> dict[str, bool]:
        return {s: bool((world >> k) & 1) for k, s in enumerate(self.symbols)}

    def world(self, valuation: Valuation) -> int:
        return sum(1 << k for k, s in enumerate(self.symbols) if valuation.get(s, False))

    def truth_vector(self, formula: Formula) -> np.ndarray:
        return _truth_vector(self, formula)

    def models_of(self, formula: Formula) -> frozenset[int]:
        return _models_of(self, formula)

    def models(self, formulas: Iterable[Formula]) -> frozenset[int]:
        """Worlds satisfying every formula (all worlds for an empty iterable)."""
        worlds = self.all_worlds
        for formula in formulas:
            worlds = worlds & self.models_of(formula)
        return worlds

    def consistent(self, formulas: Iterable[Formula]) -> bool:
        return bool(self.models(formulas))

    def entails(self, premises: Iterable[Formula], conclusion: Formula) -> bool:
        worlds = self.models(premises)
        return worlds <= self.models([conclusion])

    def bottom(self) -> Formula:
        return bottom(self.symbols)

    def characteristic(self, worlds: Iterable[int]) -> Formula:
        """DNF formula whose models are exactly `worlds`."""
        terms = [
            conjoin(literal(s, bool((w >> k) & 1)) for k, s in enumerate(self.symbols))
            for w in sorted(worlds)
        ]
        if not terms:
            return self.bottom()
        result = terms[0]
        for term in terms[1:]:
            result = disjunction(result, term)
        return result

    def distances(self, sources: Iterable[int], targets: Iterable[int]) -> np.ndarray:
        """Hamming distance matrix, rows = sources, columns = targets."""
        src = self.table[sorted(sources)]
        dst = self.table[sorted(targets)]
        return (src[:, None, :] != dst[None, :, :]).sum(axis=2)

    def min_distance(self, sources: Iterable[int], targets: Iterable[int]) -> int:
        src, dst = sorted(sources), sorted(targets)
        if not src or not dst:
            raise ValueError("Hamming distance between empty world sets is undefined")
        return int(self.distances(src, dst).min())

    def closest(self, sources: Iterable[int], targets: Iterable[int]) -> frozenset[int]:
        """Targets at minimum Hamming distance from some source world."""
        src, dst = sorted(sources), sorted(targets)
        if not src or not dst:
            return frozenset(dst)
        per_target = self.distances(src, dst).min(axis=0)
        best = per_target.min()
        return frozenset(w for w, d in zip(dst, per_target) if d == best)


@lru_cache(maxsize=16)
def _table(n: int) -> np.ndarray:
    table = ((np.arange(1 << n)[:, None] >> np.arange(n)) & 1).astype(bool)
    table.flags.writeable = False
    return table


@lru_cache(maxsize=65536)
def _truth_vector(signature: Signature, formula: Formula) -> np.ndarray:
    if isinstance(formula, Atom):
        vector = signature.table[:, signature.position(formula.name)]
    elif isinstance(formula, Not):
        vector = ~_truth_vector(signature, formula.arg)
    elif isinstance(formula, And):
        vector = _truth_vector(signature, formula.left) & _truth_vector(signature, formula.right)
    else:
        raise ModalFormulaNotAllowed(f"Modal operator in propositional context: {formula!r}")
    vector = np.array(vector, dtype=bool)
    vector.flags.writeable = False
    return vector


@lru_cache(maxsize=65536)
def _models_of(signature: Signature, formula: Formula) -> frozenset[int]:
    return frozenset(int(w) for w in np.flatnonzero(_truth_vector(signature, formula)))
