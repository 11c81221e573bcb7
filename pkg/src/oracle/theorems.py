"""
Exhaustive verification harnesses for the explanation theorems.

Each harness enumerates a bounded space, checks the claim with the engine,
and cross-checks the engine against the reference semantics in
`src.oracle.reference`. Instances whose premise fails are counted as
excluded, never as violations.

    theorem1  belief-revision explanation subsumes abductive explanation
    theorem2  ≈-equivalent agents share objective explanations
    theorem3  ≈ plus introspection gives correct beliefs about beliefs
    theorem4  every explanation explains the possibility of β
    theorem5  adequacy plus shared preferences gives equal optimal sets
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain, combinations, permutations, product
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

import pandas as pd
from tqdm import tqdm

from config import get_config
from src.errors import RevisionError
from src.epistemic.revision import revise
from src.epistemic.semantics import holds, states_equivalent
from src.epistemic.state import EpistemicState, StateVector
from src.epistemic.valuations import Signature
from src.explain.adequacy import is_adequate
from src.explain.pool import FormulaPool
from src.explain.predicates import expand_expl
from src.explain.ranking import PreferenceOrder, optimal_explanations, rank_objective, synthesize
from src.logic.formula import And, Believes, Formula, Not, implication, literal
from src.logic.parser import render
from src.oracle import reference
from src.scenario.loader import Scenario, build_vector, load
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

SYMBOLS = ("p", "q", "r", "s", "t")


@dataclass
class TheoremReport:
    theorem: str
    instances_checked: int = 0
    violations: list[str] = field(default_factory=list)
    extras: int = 0
    premise_excluded: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def violate(self, description: str) -> None:
        self.violations.append(description)
        logger.debug(f"{self.theorem}: violation {description}")

    def to_record(self) -> dict:
        return {
            "theorem": self.theorem,
            "checked": self.instances_checked,
            "violations": len(self.violations),
            "extras": self.extras,
            "excluded": self.premise_excluded,
            "first": self.violations[0] if self.violations else "",
        }


def reports_frame(reports: Sequence[TheoremReport]) -> pd.DataFrame:
    return pd.DataFrame(
        [r.to_record() for r in reports],
        columns=["theorem", "checked", "violations", "extras", "excluded", "first"],
    )


def _signature(size: int, agents: Sequence[str]) -> Signature:
    if not 1 <= size <= len(SYMBOLS):
        raise ValueError(f"vocabulary size must be between 1 and {len(SYMBOLS)}")
    return Signature(SYMBOLS[:size], tuple(agents))


def _progress(items, desc: str, show: Optional[bool]):
    show = get_config().oracle.show_progress if show is None else show
    return tqdm(items, desc=desc, disable=not show)


def _log(report: TheoremReport) -> TheoremReport:
    logger.info(
        f"{report.theorem}: {report.instances_checked} checked, {len(report.violations)} violations, "
        f"{report.extras} extras, {report.premise_excluded} excluded"
    )
    return report


def _consistent_after(beta: Formula, agent: str, signature: Signature) -> Formula:
    return And(Believes(agent, beta), Not(Believes(agent, signature.bottom())))


def verify_theorem1(
    vocab_size: Optional[int] = None,
    max_literals: Optional[int] = None,
    show_progress: Optional[bool] = None,
) -> TheoremReport:
    """
    Single agent, Dalal revision, no laws, every theory T (nonempty world
    set): whenever T ∪ {α} is consistent and entails β, Expl(i, α, β) must
    hold. Explanations found although T ∪ {β} is inconsistent are counted
    as extras.
    """
    cfg = get_config().oracle
    sig = _signature(vocab_size or cfg.vocab_size, ("i",))
    formulas = FormulaPool(sig.symbols, cfg.max_literals if max_literals is None else max_literals).propositional
    worlds = sorted(sig.all_worlds)
    theories = list(chain.from_iterable(combinations(worlds, n) for n in range(1, len(worlds) + 1)))
    report = TheoremReport("theorem1")

    for theory in _progress(theories, "theorem1", show_progress):
        T = frozenset(theory)
        state = EpistemicState.from_strata("i", sig, (), [[sig.characteristic(T)]], operator="dalal")
        tower = reference.Tower.from_state(state)
        for alpha in formulas:
            A = sig.models_of(alpha)
            revised = revise(state, alpha)
            if reference.revise(tower, alpha).world_indices() != revised.worlds:
                report.violate(f"reference: T={sorted(T)} * {render(alpha, sig.symbols)} differs")
            after = StateVector.of({"i": revised})
            for beta in formulas:
                report.instances_checked += 1
                B = sig.models_of(beta)
                explains = holds(after, _consistent_after(beta, "i", sig))
                if T & A and T & A <= B:
                    if not explains:
                        report.violate(
                            f"T={sorted(T)}, α={render(alpha, sig.symbols)}, β={render(beta, sig.symbols)}"
                        )
                elif explains and not T & B:
                    report.extras += 1
    return _log(report)


def _literal_bases(sig: Signature) -> list[tuple[tuple[Formula, ...], ...]]:
    """The empty base, single literals, and two literals on distinct atoms in both stratum orders."""
    bases: list[tuple[tuple[Formula, ...], ...]] = [()]
    bases += [((literal(s, v),),) for s in sig.symbols for v in (True, False)]
    for a, b in permutations(sig.symbols, 2):
        for va, vb in product((True, False), repeat=2):
            bases.append(((literal(a, va),), (literal(b, vb),)))
    return bases


def _theorem2_pairs(sig: Signature) -> Iterator[tuple[str, EpistemicState, EpistemicState]]:
    p, q = sig.symbols[0], sig.symbols[min(1, len(sig.symbols) - 1)]
    law_sets = [(), (implication(literal(p), literal(q)),)] if p != q else [()]

    def make(owner, laws, base, operator="prioritized"):
        return EpistemicState.from_strata(owner, sig, laws, base, operator=operator)

    for laws in law_sets:
        bases = _literal_bases(sig)
        for base in bases:
            yield "identical", make("i", laws, base), make("j", laws, base)
            if len(base) > 1:
                yield "permuted", make("i", laws, base), make("j", laws, tuple(reversed(base)))
            yield "operator", make("i", laws, base), make("j", laws, base, "dalal")
        for a, b in zip(bases, bases[1:]):
            yield "distinct", make("i", laws, a), make("j", laws, b)


def verify_theorem2(
    vocab_size: int = 2,
    max_literals: int = 2,
    max_seq_len: Optional[int] = None,
    show_progress: Optional[bool] = None,
) -> TheoremReport:
    """Pairs with e_i ≈ e_j (bounded) must agree on Expl(·, α, β) for every pool α and β."""
    cfg = get_config().oracle
    seq = cfg.max_seq_len if max_seq_len is None else max_seq_len
    sig = _signature(vocab_size, ("i", "j"))
    pool = FormulaPool(sig.symbols, max_literals).propositional
    report = TheoremReport("theorem2")

    for suite, e_i, e_j in _progress(list(_theorem2_pairs(sig)), "theorem2", show_progress):
        if not states_equivalent(e_i, e_j, pool, seq):
            report.premise_excluded += 1
            logger.debug(f"theorem2: {suite} pair excluded by premise")
            continue
        vector = StateVector.of({"i": e_i, "j": e_j})
        towers = reference.towers_of(vector)
        for alpha in pool:
            by_i = StateVector.of({"i": revise(e_i, alpha), "j": e_j})
            by_j = StateVector.of({"i": e_i, "j": revise(e_j, alpha)})
            for beta in pool:
                report.instances_checked += 1
                a = holds(by_i, _consistent_after(beta, "i", sig))
                b = holds(by_j, _consistent_after(beta, "j", sig))
                where = f"{suite}: α={render(alpha, sig.symbols)}, β={render(beta, sig.symbols)}"
                if a != b:
                    report.violate(where)
                if reference.holds(towers, expand_expl("i", alpha, beta, sig.symbols)) != a:
                    report.violate(f"reference: {where}")
    return _log(report)


def verify_theorem3(
    vocab_size: int = 2,
    literals: Optional[int] = None,
    max_seq_len: Optional[int] = None,
    show_progress: Optional[bool] = None,
) -> TheoremReport:
    """
    When e_i ≈ e_j and j is introspective, i's beliefs about j's beliefs are
    correct. The premise is met by projection: e_i models j as itself and
    e_j models i as itself. A variant where e_i holds an ignorant model of j
    is generated as well and is normally excluded by the premise.
    """
    cfg = get_config().oracle
    seq = cfg.max_seq_len if max_seq_len is None else max_seq_len
    width = cfg.introspection_literals if literals is None else literals
    sig = _signature(vocab_size, ("i", "j"))
    pool = FormulaPool(sig.symbols, width, modal_depth=1, agents=("i", "j")).formulas
    report = TheoremReport("theorem3")

    pairs = []
    for base in _literal_bases(sig):
        e_j = EpistemicState.from_strata("j", sig, (), base, depth=1, projected=("i",))
        projected = EpistemicState.from_strata("i", sig, (), base, depth=1, projected=("j",))
        ignorant = EpistemicState.from_strata(
            "i", sig, (), base, {"j": EpistemicState.ignorant("j", sig)}, depth=1
        )
        pairs += [("projection", projected, e_j), ("perturbed", ignorant, e_j)]

    for suite, e_i, e_j in _progress(pairs, "theorem3", show_progress):
        if not states_equivalent(e_i, e_j, pool, seq):
            report.premise_excluded += 1
            continue
        vector = StateVector.of({"i": e_i, "j": e_j})
        towers = reference.towers_of(vector)
        for phi in pool:
            believes, disbelieves = Believes("j", phi), Not(Believes("j", phi))
            if holds(vector, believes) != holds(vector, Believes("j", believes)) or holds(
                vector, disbelieves
            ) != holds(vector, Believes("j", disbelieves)):
                report.premise_excluded += 1
                continue
            report.instances_checked += 1
            where = f"{suite}: φ={render(phi, sig.symbols)}"
            for claim in (believes, disbelieves):
                nested = holds(vector, Believes("i", claim))
                if holds(vector, claim) != nested:
                    report.violate(f"{where} ({render(claim, sig.symbols)})")
                if reference.holds(towers, Believes("i", claim)) != nested:
                    report.violate(f"reference: {where}")
    return _log(report)


def verify_theorem4(
    scenarios: Iterable[Scenario],
    max_literals: Optional[int] = None,
    show_progress: Optional[bool] = None,
) -> TheoremReport:
    """Expl(i, α, β) implies [α]_i ¬B_i ¬β for every agent and pool α, β."""
    cfg = get_config().oracle
    width = cfg.max_literals if max_literals is None else max_literals
    report = TheoremReport("theorem4")

    for scenario in _progress(list(scenarios), "theorem4", show_progress):
        vector = build_vector(scenario)
        towers = reference.towers_of(vector)
        sig = scenario.signature
        pool = FormulaPool(sig.symbols, width).propositional
        for agent in scenario.agents:
            for alpha in pool:
                try:
                    revised = vector.replace(agent, revise(vector[agent], alpha))
                except RevisionError as e:
                    report.premise_excluded += 1
                    logger.debug(f"theorem4: {agent} * {render(alpha, sig.symbols)} skipped: {e}")
                    continue
                reference_revised = reference.revise(towers[agent], alpha)
                for beta in pool:
                    report.instances_checked += 1
                    explains = holds(revised, _consistent_after(beta, agent, sig))
                    possible = holds(revised, Not(Believes(agent, Not(beta))))
                    where = (
                        f"{scenario.source}: {agent}, α={render(alpha, sig.symbols)}, "
                        f"β={render(beta, sig.symbols)}"
                    )
                    if explains and not possible:
                        report.violate(where)
                    expected = reference.truth(reference_revised, beta) and not reference.truth(
                        reference_revised, sig.bottom()
                    )
                    if expected != explains:
                        report.violate(f"reference: {where}")
    return _log(report)


def verify_theorem5(
    scenarios: Iterable[Scenario],
    max_literals: Optional[int] = None,
    order: Optional[PreferenceOrder] = None,
    show_progress: Optional[bool] = None,
) -> TheoremReport:
    """
    For every explainer i, explainee j and literal explanandum β: if i's model
    of j is adequate and both rankings induce the same preference over the
    candidates, the pool-optimal subjective and objective sets coincide.
    """
    search = get_config().search
    width = search.pool_literals if max_literals is None else max_literals
    order = order or PreferenceOrder.parse(search.order)
    report = TheoremReport("theorem5")

    for scenario in _progress(list(scenarios), "theorem5", show_progress):
        vector = build_vector(scenario)
        sig = scenario.signature
        explananda = [literal(s, v) for s in sig.symbols for v in (True, False)]
        for i, j in permutations(scenario.agents, 2):
            for beta in explananda:
                pool = FormulaPool.for_explanandum(sig.symbols, beta, scenario.agents, width)
                if not is_adequate(vector, i, j, beta, pool):
                    report.premise_excluded += 1
                    continue
                subjective = synthesize(vector, i, j, beta, pool, order)
                objective = rank_objective(vector, j, beta, pool, order, explainer=i)
                if {r.candidate: order.key(r) for r in subjective} != {
                    r.candidate: order.key(r) for r in objective
                }:
                    report.premise_excluded += 1
                    continue
                report.instances_checked += 1
                ours = {r.candidate for r in optimal_explanations(subjective, order)}
                theirs = {r.candidate for r in optimal_explanations(objective, order)}
                if ours != theirs:
                    report.violate(
                        f"{scenario.source}: {i}->{j}, β={render(beta, sig.symbols)}: "
                        f"{sorted(render(c, sig.symbols) for c in ours)} vs "
                        f"{sorted(render(c, sig.symbols) for c in theirs)}"
                    )
    return _log(report)


def bundled_scenarios(directory: Optional[Path] = None) -> list[Scenario]:
    directory = Path(directory or get_config().fixtures_dir)
    return [load(path) for path in sorted(directory.glob("*.scn"))]


def verify_all(
    scenarios: Optional[Sequence[Scenario]] = None,
    show_progress: Optional[bool] = None,
) -> list[TheoremReport]:
    scenarios = list(scenarios) if scenarios is not None else bundled_scenarios()
    return [
        verify_theorem1(show_progress=show_progress),
        verify_theorem2(show_progress=show_progress),
        verify_theorem3(show_progress=show_progress),
        verify_theorem4(scenarios, show_progress=show_progress),
        verify_theorem5(scenarios, show_progress=show_progress),
    ]
