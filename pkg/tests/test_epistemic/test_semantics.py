"""
Unit tests for truth at a state, objective satisfaction, and bounded
state equivalence.
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import ModalFormulaNotAllowed, NotAgentFormula, UnknownAgent
from src.epistemic.semantics import belief_profile, entails, holds, states_equivalent, truth_at
from src.epistemic.state import EpistemicState
from src.explain.pool import FormulaPool
from src.explain.predicates import expand_expl
from src.epistemic.valuations import Signature
from src.logic.formula import Atom, Believes, Not, literal

p, q = Atom("p"), Atom("q")

PQ = Signature(("p", "q"), ("i", "j"))
literal_strata = st.lists(
    st.lists(st.builds(literal, st.sampled_from(PQ.symbols), st.booleans()), min_size=1, max_size=2),
    max_size=2,
)
pq_states = st.builds(lambda strata: EpistemicState.from_strata("i", PQ, (), strata), literal_strata)


class TestTruthAt:

    def test_bob_believes_hole(self, f, wet_floor_vector):
        """Should read a modal-free formula as entailment by the worlds."""
        assert truth_at(wet_floor_vector["bob"], f("holeInRoof"))

    def test_true_everywhere(self, f, wet_floor_vector):
        """Should hold true at any state."""
        for agent in ("mary", "bob", "tom"):
            assert truth_at(wet_floor_vector[agent], f("true"))

    def test_inconsistent_state_believes_everything(self, pq):
        """Should make every formula true at the empty world set."""
        state = EpistemicState.from_strata("i", pq, (), [[p], [Not(p)]])
        assert truth_at(state, pq.bottom())
        assert truth_at(state, Believes("j", q))

    def test_nested_model(self, f, wet_floor_vector):
        """Should consult the nested model for belief operators."""
        assert truth_at(wet_floor_vector["mary"], f("B[bob] ~rain"))

    def test_self_consistency(self, f, wet_floor_vector):
        """Should hold ~B[self] false at a consistent state."""
        assert truth_at(wet_floor_vector["mary"], f("~B[mary] false"))

    def test_subjective_explanation(self, wet_floor, wet_floor_vector):
        """Should hold Mary's belief that rain explains the wet floor to Bob."""
        expl = expand_expl("bob", Atom("rain"), Atom("wetFloor"), wet_floor.vocabulary)
        assert truth_at(wet_floor_vector["mary"], expl)

    def test_world_dependent_formula(self, f, wet_floor_vector):
        """Should evaluate mixed formulas world by world."""
        mary = wet_floor_vector["mary"]
        assert truth_at(mary, f("rain & B[bob] holeInRoof"))
        assert not truth_at(mary, f("~rain & B[bob] holeInRoof"))

    def test_entails_rejects_modal(self, f, wet_floor_vector):
        """Should refuse modal formulas in entails()."""
        with pytest.raises(ModalFormulaNotAllowed):
            entails(wet_floor_vector["mary"], f("B[bob] rain"))


class TestHolds:

    def test_running_example(self, f, wet_floor_vector):
        """Should reproduce Mary's first-order beliefs."""
        assert holds(wet_floor_vector, f("B[mary] wetFloor & B[mary] holeInRoof"))

    def test_nested_beliefs(self, f, wet_floor_vector):
        """Should reproduce Mary's beliefs about Tom."""
        assert holds(wet_floor_vector, f("B[mary] B[tom] rain & B[mary] B[tom] ~holeInRoof"))

    def test_consistency(self, f, wet_floor_vector):
        """Should hold ~B[i] false for every consistent agent."""
        for agent in ("mary", "bob", "tom"):
            assert holds(wet_floor_vector, f(f"~B[{agent}] false"))

    def test_objective_revision(self, f, wet_floor_vector):
        """Should revise the agent's objective state for top-level revision."""
        assert holds(wet_floor_vector, f("[rain]_bob B[bob] wetFloor"))
        assert not holds(wet_floor_vector, f("[rain]_tom B[tom] wetFloor"))

    def test_self_revision_keeps_enclosing_revisions(self, f, wet_floor_vector):
        """Should keep Bob's revised model when Mary then revises by a belief she already holds."""
        revised_only = f("B[mary] [rain]_bob B[bob] wetFloor")
        with_self = f("B[mary] [rain]_bob [holeInRoof]_mary B[bob] wetFloor")
        assert holds(wet_floor_vector, revised_only)
        assert holds(wet_floor_vector, with_self)

    def test_self_revision_after_other(self, f, wet_floor_vector):
        """Should still see Bob's unrevised model when no revision of Bob encloses Mary's."""
        assert holds(wet_floor_vector, f("B[mary] [holeInRoof]_mary B[bob] ~wetFloor"))

    def test_atom_outside_belief(self, f, wet_floor_vector):
        """Should reject formulas that are not agent formulas."""
        with pytest.raises(NotAgentFormula):
            holds(wet_floor_vector, f("rain & B[mary] rain"))

    def test_unknown_agent(self, wet_floor_vector):
        """Should reject agents missing from the vector."""
        with pytest.raises(UnknownAgent):
            holds(wet_floor_vector, Believes("zed", Atom("rain")))


class TestStatesEquivalent:

    def pool(self):
        return FormulaPool(("p", "q"), 2).propositional

    def test_reflexive(self, pq):
        """Should relate every state to itself."""
        state = EpistemicState.from_strata("i", pq, (), [[p], [q]])
        assert states_equivalent(state, state, self.pool(), 2)

    def test_bob_and_tom_differ(self, wet_floor, wet_floor_vector):
        """Should separate Bob and Tom, who disagree on rain."""
        pool = FormulaPool(wet_floor.vocabulary, 1).propositional
        assert not states_equivalent(wet_floor_vector["bob"], wet_floor_vector["tom"], pool, 1)

    def test_reordered_literal_strata(self, pq):
        """Should relate literal bases that differ only in stratum order."""
        e_i = EpistemicState.from_strata("i", pq, (), [[p], [q]])
        e_j = EpistemicState.from_strata("j", pq, (), [[q], [p]])
        assert states_equivalent(e_i, e_j, self.pool(), 2)

    def test_same_worlds_different_revision(self, pq):
        """Should separate states whose worlds agree but whose revisions do not."""
        e_i = EpistemicState.from_strata("i", pq, (), [[p], [q]])
        e_j = EpistemicState.from_strata("j", pq, (), [[p & q]])
        assert e_i.worlds == e_j.worlds
        assert belief_profile(e_i, self.pool()) == belief_profile(e_j, self.pool())
        assert not states_equivalent(e_i, e_j, self.pool(), 1)

    def test_zero_length_compares_profiles(self, pq):
        """Should only compare current beliefs when no revision is allowed."""
        e_i = EpistemicState.from_strata("i", pq, (), [[p], [q]])
        e_j = EpistemicState.from_strata("j", pq, (), [[p & q]])
        assert states_equivalent(e_i, e_j, self.pool(), 0)

    @settings(max_examples=60, deadline=None)
    @given(pq_states, pq_states)
    def test_symmetric(self, e_i, e_j):
        """Should give the same verdict in either argument order."""
        pool = FormulaPool(("p", "q"), 1).propositional
        assert states_equivalent(e_i, e_j, pool, 1) == states_equivalent(e_j, e_i, pool, 1)

    @settings(max_examples=60, deadline=None)
    @given(pq_states, pq_states, pq_states)
    def test_transitive(self, e_i, e_j, e_k):
        """Should relate the outer states whenever both adjacent pairs are related."""
        pool = FormulaPool(("p", "q"), 1).propositional
        if states_equivalent(e_i, e_j, pool, 1) and states_equivalent(e_j, e_k, pool, 1):
            assert states_equivalent(e_i, e_k, pool, 1)

    def test_transitive_chain(self, pq):
        """Should carry equivalence through reordered literal strata."""
        e_i = EpistemicState.from_strata("i", pq, (), [[p], [q]])
        e_j = EpistemicState.from_strata("j", pq, (), [[q], [p]])
        e_k = EpistemicState.from_strata("k", pq, (), [[q, p]])
        assert states_equivalent(e_i, e_j, self.pool(), 2)
        assert states_equivalent(e_j, e_k, self.pool(), 2)
        assert states_equivalent(e_i, e_k, self.pool(), 2)
