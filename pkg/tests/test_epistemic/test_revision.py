"""
Unit tests for revision normal form, the two revision operators, and
contraction.
"""
import logging

import pytest

from src.errors import ContractionImpossible, ModalFormulaNotAllowed, UnsupportedRevisionFormula
from src.epistemic.revision import (
    DalalRevision,
    PrioritizedRevision,
    RevisionNormalForm,
    contract,
    get_operator,
    revise,
    to_rnf,
)
from src.epistemic.semantics import entails, truth_at
from src.epistemic.state import EpistemicState
from src.logic.formula import AfterRevision, Atom, Believes, Not, disjunction, top

rain, hole, wet = Atom("rain"), Atom("holeInRoof"), Atom("wetFloor")
p, q = Atom("p"), Atom("q")


class TestRevisionNormalForm:

    def test_propositional(self):
        """Should keep a modal-free input as the propositional part."""
        assert to_rnf(rain) == RevisionNormalForm((rain,), (), ())

    def test_positive_belief(self):
        """Should split positive belief literals off recursively."""
        rnf = to_rnf(rain & Believes("tom", Not(hole)))
        assert rnf == RevisionNormalForm((rain,), (("tom", RevisionNormalForm((Not(hole),))),), ())

    def test_negative_belief(self):
        """Should collect negated beliefs with modal-free arguments."""
        rnf = to_rnf(Not(Believes("tom", wet)))
        assert rnf.negative == (("tom", wet),)

    def test_double_negation(self):
        """Should strip double negation before classifying."""
        assert to_rnf(Not(Not(Believes("tom", rain)))).positive == (("tom", RevisionNormalForm((rain,))),)

    def test_true_is_vacuous(self):
        """Should drop the canonical tautology."""
        assert to_rnf(top(["rain"])).is_vacuous

    def test_revision_inside_input(self):
        """Should reject a revision operator inside the input."""
        with pytest.raises(UnsupportedRevisionFormula):
            to_rnf(AfterRevision("i", p, Believes("i", q)))

    def test_negated_modal_argument(self):
        """Should reject ~B[j] with a modal argument."""
        with pytest.raises(UnsupportedRevisionFormula):
            to_rnf(Not(Believes("tom", Believes("bob", rain))))

    def test_mixed_disjunction(self):
        """Should reject disjunctions across modal and propositional parts."""
        with pytest.raises(UnsupportedRevisionFormula):
            to_rnf(disjunction(Believes("tom", rain), hole))


class TestPrioritizedRevision:

    def test_rain_makes_bob_believe_wet_floor(self, wet_floor_vector):
        """Should keep holeInRoof over ~wetFloor once rain arrives."""
        revised = revise(wet_floor_vector["bob"], rain)
        for belief in (rain, hole, wet):
            assert entails(revised, belief)
        assert revised.consistent

    def test_tautology_changes_nothing(self, wet_floor_vector):
        """Should leave worlds and nested models alone when revising by true."""
        mary = wet_floor_vector["mary"]
        revised = revise(mary, top(mary.signature.symbols))
        assert revised.worlds == mary.worlds
        assert revised.nested == mary.nested

    def test_input_becomes_first_stratum(self, wet_floor_vector):
        """Should place the input above every existing stratum."""
        revised = revise(wet_floor_vector["tom"], hole)
        assert revised.base[0] == (hole,)

    def test_law_inconsistent_input(self, f, wet_floor_vector):
        """Should revise to the inconsistent state when the input breaks a law."""
        revised = revise(wet_floor_vector["bob"], f("rain & holeInRoof & ~wetFloor"))
        assert revised.worlds == frozenset()

    def test_laws_survive(self, f, wet_floor_vector):
        """Should keep the laws whatever the input."""
        bob = wet_floor_vector["bob"]
        revised = revise(bob, f("~wetFloor & rain"))
        assert revised.laws == bob.laws
        assert entails(revised, Not(hole))


class TestDalalRevision:

    def test_closest_world(self, pq):
        """Should move from p=0,q=0 to p=1,q=0 when revising by p."""
        state = EpistemicState.from_strata("i", pq, (), [[Not(p) & Not(q)]], operator="dalal")
        assert revise(state, p).worlds == {1}

    def test_consistent_input_is_expansion(self, pq):
        """Should intersect when the input is consistent with the beliefs."""
        state = EpistemicState.from_strata("i", pq, (), [[p]], operator="dalal")
        assert revise(state, q).worlds == {3}

    def test_base_describes_worlds(self, pq):
        """Should rewrite the base to a formula with exactly the revised worlds."""
        state = EpistemicState.from_strata("i", pq, (), [[Not(p)]], operator="dalal")
        revised = revise(state, p)
        assert pq.models(revised.beliefs) == revised.worlds


class TestNestedRevision:

    def test_model_of_other_agent(self, f, wet_floor_vector):
        """Should revise only the named agent's nested model."""
        mary = wet_floor_vector["mary"]
        revised = revise(mary, f("B[bob] rain"))
        assert revised.worlds == mary.worlds
        assert entails(revised.model_of("bob"), wet)
        assert revised.model_of("tom") == mary.model_of("tom")

    def test_self_belief_revises_state(self, f, wet_floor_vector):
        """Should apply B[self] literals to the state itself."""
        revised = revise(wet_floor_vector["mary"], f("B[mary] ~rain"))
        assert entails(revised, Not(rain))

    def test_negative_literal_contracts(self, f, wet_floor_vector):
        """Should contract the nested model for ~B[j] literals."""
        revised = revise(wet_floor_vector["mary"], f("~B[tom] rain"))
        assert not entails(revised.model_of("tom"), rain)

    def test_no_budget_left(self, pq, caplog):
        """Should skip nested literals at depth 0 with a warning."""
        state = EpistemicState.from_strata("i", pq, (), [[p]], depth=0)
        with caplog.at_level(logging.WARNING):
            revised = revise(state, Believes("j", q))
        assert revised == state
        assert "no nesting budget" in caplog.text

    def test_revised_model_is_believed(self, f, wet_floor_vector):
        """Should make B[j] ψ true after revising by it."""
        revised = revise(wet_floor_vector["mary"], f("B[tom] holeInRoof"))
        assert truth_at(revised, f("B[tom] wetFloor"))


class TestContraction:

    def test_drops_by_stratum_order(self, wet_floor):
        """Should drop the later stratum that completes the entailment."""
        state = EpistemicState.from_strata(
            "mary", wet_floor.signature, wet_floor.laws, [[rain], [hole]]
        )
        assert entails(state, wet)
        contracted = contract(state, wet)
        assert contracted.beliefs == (rain,)
        assert not entails(contracted, wet)

    def test_contract_false_is_noop(self, f, wet_floor_vector):
        """Should keep every belief when contracting a consistent state by false."""
        bob = wet_floor_vector["bob"]
        assert contract(bob, f("false")).worlds == bob.worlds

    def test_law_cannot_be_contracted(self, f, wet_floor_vector):
        """Should refuse to contract a consequence of the laws."""
        with pytest.raises(ContractionImpossible):
            contract(wet_floor_vector["bob"], f("rain & holeInRoof -> wetFloor"))

    def test_modal_contraction(self, f, wet_floor_vector):
        """Should refuse modal contraction inputs."""
        with pytest.raises(ModalFormulaNotAllowed):
            contract(wet_floor_vector["bob"], f("B[tom] rain"))

    def test_dalal_contraction(self, pq):
        """Should add the closest counter-models when the formula is believed."""
        state = EpistemicState.from_strata("i", pq, (), [[p & q]], operator="dalal")
        assert contract(state, p).worlds == {2, 3}

    def test_dalal_contraction_not_believed(self, pq):
        """Should leave the state unchanged when the formula is not believed."""
        state = EpistemicState.from_strata("i", pq, (), [[q]], operator="dalal")
        assert contract(state, p) is state

    def test_dalal_law_contraction(self, pq):
        """Should refuse to contract a law under Dalal as well."""
        state = EpistemicState.from_strata("i", pq, [p], [[q]], operator="dalal")
        with pytest.raises(ContractionImpossible):
            contract(state, p)


class TestOperatorRegistry:

    def test_lookup(self):
        """Should resolve operators by name."""
        assert isinstance(get_operator("prioritized"), PrioritizedRevision)
        assert isinstance(get_operator("dalal"), DalalRevision)

    def test_unknown(self):
        """Should reject unknown operator names."""
        with pytest.raises(ValueError):
            get_operator("lexicographic")
