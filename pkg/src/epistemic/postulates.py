"""
Empirical AGM postulate harness.

Every postulate is checked in its world-set reading over small vocabularies:
belief sets are world sets, K+α is K ∩ [α], and K*α is the world set of the
revised state. The six core postulates are the rationality conditions a
revision operator is expected to meet; superexpansion and subexpansion are
reported alongside without being required.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain, combinations, product
from typing import Iterable, Iterator, Optional

import pandas as pd
from tqdm import tqdm

from config import OPERATOR_NAMES, get_config
from src.epistemic.revision import revise
from src.epistemic.state import EpistemicState
from src.epistemic.valuations import Signature
from src.logic.formula import Formula, conjoin, disjunction, literal
from src.logic.parser import render
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

CORE_POSTULATES = ("closure", "success", "inclusion", "vacuity", "consistency", "extensionality")
SUPPLEMENTARY_POSTULATES = ("superexpansion", "subexpansion")


@dataclass
class PostulateResult:
    postulate: str
    core: bool
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def record(self, ok: bool, describe) -> None:
        self.checked += 1
        if not ok:
            self.counterexamples.append(describe())


@dataclass
class PostulateReport:
    operator: str
    vocabulary: tuple[str, ...]
    results: list[PostulateResult]

    def __getitem__(self, postulate: str) -> PostulateResult:
        for result in self.results:
            if result.postulate == postulate:
                return result
        raise KeyError(postulate)

    @property
    def core_passed(self) -> bool:
        return all(r.passed for r in self.results if r.core)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "postulate": r.postulate,
                    "core": r.core,
                    "passed": r.passed,
                    "checked": r.checked,
                    "counterexamples": len(r.counterexamples),
                    "first": r.counterexamples[0] if r.counterexamples else "",
                }
                for r in self.results
            ],
            columns=["postulate", "core", "passed", "checked", "counterexamples", "first"],
        )


def revision_inputs(signature: Signature, max_literals: int = 2) -> list[Formula]:
    """
    true, false, literals, literal conjunctions up to `max_literals`, the
    two-literal conjunctions again with their conjuncts swapped, and
    two-literal disjunctions. The swapped conjunctions are the equivalent
    inputs extensionality is checked on.
    """
    symbols = signature.symbols
    inputs: list[Formula] = [signature.bottom(), ~signature.bottom()]
    for size in range(1, min(max_literals, len(symbols)) + 1):
        for chosen in combinations(symbols, size):
            for signs in product((True, False), repeat=size):
                inputs.append(conjoin(literal(s, sign) for s, sign in zip(chosen, signs)))
    if max_literals >= 2:
        for a, b in combinations(symbols, 2):
            for sa, sb in product((True, False), repeat=2):
                inputs.append(conjoin([literal(b, sb), literal(a, sa)]))
    for a, b in combinations(symbols, 2):
        for sa, sb in product((True, False), repeat=2):
            inputs.append(disjunction(literal(a, sa), literal(b, sb)))
    return inputs


def _world_set_states(signature: Signature, operator: str) -> Iterator[EpistemicState]:
    worlds = sorted(signature.all_worlds)
    subsets = chain.from_iterable(combinations(worlds, n) for n in range(1, len(worlds) + 1))
    for subset in subsets:
        yield EpistemicState.from_strata(
            "agent", signature, (), [[signature.characteristic(subset)]], operator=operator
        )


def _base_states(
    signature: Signature, operator: str, inputs: list[Formula]
) -> Iterator[EpistemicState]:
    members = [f for f in inputs if signature.models_of(f) not in (frozenset(), signature.all_worlds)]
    bases = chain(((f,) for f in members), combinations(members, 2))
    for base in bases:
        state = EpistemicState.from_strata(
            "agent", signature, (), [[f] for f in base], operator=operator
        )
        if state.consistent:
            yield state


def candidate_states(
    signature: Signature, operator: str, inputs: Optional[list[Formula]] = None
) -> list[EpistemicState]:
    """Dalal ranges over every nonempty world set; base operators over small stratified bases."""
    if operator == "dalal":
        return list(_world_set_states(signature, operator))
    return list(_base_states(signature, operator, inputs or revision_inputs(signature)))


def check_agm_postulates(
    operator: str,
    vocabulary: Iterable[str],
    max_literals: int = 2,
    show_progress: Optional[bool] = None,
) -> PostulateReport:
    if operator not in OPERATOR_NAMES:
        raise ValueError(f"Unknown revision operator {operator!r}")
    signature = Signature(tuple(vocabulary))
    if show_progress is None:
        show_progress = get_config().oracle.show_progress

    inputs = revision_inputs(signature, max_literals)
    gammas = [~signature.bottom()] + [literal(s, v) for s in signature.symbols for v in (True, False)]
    states = candidate_states(signature, operator, inputs)
    logger.debug(f"{operator}: {len(states)} states x {len(inputs)} inputs over {signature.symbols}")

    results = {name: PostulateResult(name, True) for name in CORE_POSTULATES}
    results.update({name: PostulateResult(name, False) for name in SUPPLEMENTARY_POSTULATES})

    def show(f: Formula) -> str:
        return render(f, signature.symbols)

    for state in tqdm(states, desc=f"AGM {operator}", disable=not show_progress):
        K = state.worlds
        label = " ; ".join(show(f) for f in state.beliefs)
        revised: dict[Formula, frozenset[int]] = {}
        for alpha in inputs:
            result = revise(state, alpha)
            revised[alpha] = result.worlds
            A = signature.models_of(alpha)
            expansion = K & A

            def describe(alpha=alpha) -> str:
                return f"K = {label}; α = {show(alpha)}"

            results["closure"].record(
                result.worlds == signature.models(result.laws + result.beliefs) or not result.worlds,
                describe,
            )
            results["success"].record(result.worlds <= A, describe)
            results["inclusion"].record(expansion <= result.worlds, describe)
            if expansion:
                results["vacuity"].record(result.worlds <= expansion, describe)
            if A:
                results["consistency"].record(bool(result.worlds), describe)

        for alpha, beta in combinations(inputs, 2):
            if signature.models_of(alpha) == signature.models_of(beta):
                results["extensionality"].record(
                    revised[alpha] == revised[beta],
                    lambda: f"K = {label}; α = {show(alpha)}; α' = {show(beta)}",
                )

        for alpha, gamma in product(inputs, gammas):
            after = revised[alpha] & signature.models_of(gamma)
            combined = revise(state, alpha & gamma).worlds

            def describe_pair(alpha=alpha, gamma=gamma) -> str:
                return f"K = {label}; α = {show(alpha)}; γ = {show(gamma)}"

            results["superexpansion"].record(after <= combined, describe_pair)
            if after:
                results["subexpansion"].record(combined <= after, describe_pair)

    report = PostulateReport(operator, signature.symbols, list(results.values()))
    logger.info(
        f"AGM postulates for {operator} over {','.join(signature.symbols)}: "
        f"core {'passed' if report.core_passed else 'failed'}"
    )
    return report
